#pragma once

#include <optional>
#include <vector>

#include "msl/exact_arith.hpp"

namespace msl::cyclo {

// dense integer polynomial, coefficients ascending; {} is the zero polynomial
struct IntPolynomial {
    std::vector<Integer> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    unsigned long degree() const;
    Integer eval(const Integer& x) const;
    void trim();

    bool operator==(const IntPolynomial&) const = default;
};

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
// exact division; throws std::logic_error when the remainder is nonzero
IntPolynomial poly_divexact(const IntPolynomial& num, const IntPolynomial& den);
IntPolynomial x_pow_minus_one(unsigned long n);

// Phi_n by repeated exact division of x^n - 1 by the lower Phi_d, cached.
// Cache entries are written once; lookups are thread-safe.
const IntPolynomial& cyclotomic_polynomial(unsigned long n);  // n in [1, 10^4]

// Phi_n(x) exactly; uses the Moebius product of x^d - 1 factors for |x| >= 2
// and the cached polynomial for |x| <= 1
Integer phi_eval(unsigned long n, const Integer& x);

struct ChainTerm {
    unsigned long phi_index;     // prime subscript
    unsigned long arg_exponent;  // evaluate at x^arg_exponent
    Integer value;
};

// Telescoping factorization of the repunit: repunit(x, n) =
// Phi_p1(x) * Phi_p2(x^p1) * Phi_p3(x^{p1 p2}) * ..., one step per prime of
// n counted with multiplicity, ascending.
std::vector<ChainTerm> repunit_factorization_chain(const Integer& x,
                                                   unsigned long n);

struct QuadraticFactor {
    unsigned long k1 = 0;
    unsigned long k2 = 0;             // n - k1
    std::optional<Rational> two_cos;  // exact value when 2cos(2 pi k1 / n) is rational
    std::optional<IntPolynomial> integer_poly;  // x^2 - 2cos x + 1 when integral
    bool integer_coeff = false;
    bool paper_pm_half_case = false;  // cos = +-1/2, i.e. k1 = n/6 or n/3
};

// conjugate root pairings (k1, n - k1) of x^n - 1 for 1 <= k1 < n/2
std::vector<QuadraticFactor> quadratic_factor_split(unsigned long n);

struct PrimitiveFactorReport {
    Natural x;
    unsigned long n = 0;
    Natural phi_value;
    std::optional<Natural> common_prime;  // prime shared by Phi_n(x) and n
    Natural largest_primitive_factor;     // Phi_n(x), or Phi_n(x)/p
    std::vector<Natural> primitive_primes;
    bool zsigmondy_exception = false;     // primitive part is 1
    bool h_condition_ok = true;           // n / p^a = ord_p(x) when p exists
    bool common_prime_simple = true;      // p^2 does not divide Phi_n(x)
    bool x_minus_1_divides_phi = false;   // the Eq. 37 denominator adjustment
    bool factorization_complete = true;
};

PrimitiveFactorReport largest_primitive_factor(const Natural& x,
                                               unsigned long n,
                                               uint64_t rho_budget = 200'000'000);

// brute-force oracle: primes q | x^n - 1 with q dividing no x^m - 1, m < n
std::vector<Natural> primitive_prime_divisors(const Natural& x,
                                              unsigned long n,
                                              uint64_t rho_budget = 200'000'000);

Natural largest_prime_divisor(const Natural& v,
                              uint64_t rho_budget = 200'000'000);

struct Eq38Check {
    Integer x;
    Integer lhs;  // Phi_n(x)
    Integer rhs;  // Phi_{n/p}(x^p) / Phi_{n/p}(x)
    bool match = false;
    bool skipped = false;  // denominator vanished (|x| <= 1 corner)
};

struct Eq38Report {
    unsigned long n = 0;
    unsigned long p = 0;
    std::vector<Eq38Check> checks;
    bool all_match = true;
};

// Phi_n(x) = Phi_{n/p}(x^p) / Phi_{n/p}(x) for square-free n > 1, p | n
Eq38Report eq38_identity_check(unsigned long n, unsigned long p,
                               const Integer& x_min, const Integer& x_max);

}  // namespace msl::cyclo
