#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace msl {

// Exact arbitrary-precision numbers. Natural is an Integer constrained to be
// nonnegative by the operations that accept it. Rational is kept canonical by
// GMP: lowest terms, denominator >= 1, sign carried by the numerator.
using Natural = mpz_class;
using Integer = mpz_class;
using Rational = mpq_class;

namespace arith {

enum class Certainty { proven, probable };

struct Factor {
    Natural prime;
    unsigned long exponent = 1;
    Certainty certainty = Certainty::proven;
};

struct Factorization {
    std::vector<Factor> factors;  // primes strictly increasing

    Natural reconstruct() const;
    bool all_proven() const;
    // largest prime factor; throws std::logic_error on empty factorization
    const Natural& largest_prime() const;
};

// Thrown when the rho stage exhausts its iteration budget on a hard cofactor.
// Callers that tolerate partial results catch this and flag their report.
struct FactorizationTimeout : std::runtime_error {
    explicit FactorizationTimeout(Natural cofactor_)
        : std::runtime_error("factorization budget exhausted"),
          cofactor(std::move(cofactor_)) {}
    Natural cofactor;
};

// Strong-probable-prime witness set: the first twelve primes. Miller-Rabin
// against these is deterministic for n < 318'665'857'834'031'151'167'461
// (Sorenson-Webster), which covers all of [0, 2^64). Above that bound the
// verdict is "strong probable prime w.r.t. this set".
inline constexpr uint64_t kPrimalityWitnesses[] = {2,  3,  5,  7,  11, 13,
                                                   17, 19, 23, 29, 31, 37};

bool is_prime(const Natural& n);
// proven for n < 2^64 (and for anything settled by trial division),
// probable above.
Certainty primality_certainty(const Natural& n);

struct PartialFactorization {
    Factorization factors;             // prime factors extracted so far
    std::optional<Natural> cofactor;   // composite remainder if budget ran out
    bool complete() const { return !cofactor.has_value(); }
};

// Trial division to a fixed bound, then Brent's rho on the cofactors, each
// factor re-verified with is_prime. factorize throws std::domain_error for
// n < 2 and FactorizationTimeout when rho_budget squaring steps run out;
// try_factorize reports the unfactored cofactor instead of throwing.
Factorization factorize(const Natural& n, uint64_t rho_budget = 200'000'000);
PartialFactorization try_factorize(const Natural& n,
                                   uint64_t rho_budget = 200'000'000);

// true iff 2^p - 1 is prime; p must be an odd prime.
// Classical iteration s_0 = 4, s_{k+1} = s_k^2 - 2 (mod M_p).
bool lucas_lehmer(const Natural& p);

// least k >= 1 with x^k = 1 (mod p); p prime, p must not divide x.
Natural multiplicative_order(const Natural& x, const Natural& p);

// Jacobi symbol (a/n) in {-1, 0, +1}; n must be odd and >= 1.
int jacobi_symbol(const Integer& a, const Natural& n);

// largest s with s*s <= n
Natural integer_sqrt(const Natural& n);

bool is_perfect_square(const Natural& n);

// exact square root of a positive rational, if both numerator and
// denominator are perfect squares
std::optional<Rational> is_rational_square(const Rational& q);

// Canonical decimal serialization used in all JSON output ("-3/7" form;
// a denominator of 1 is omitted).
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

// small helpers shared across modules
Natural pow_ui(const Natural& base, unsigned long exp);
Natural gcd(const Natural& a, const Natural& b);
std::vector<Natural> divisors(const Natural& n);   // sorted ascending
std::vector<uint64_t> primes_up_to(uint64_t bound);

}  // namespace arith
}  // namespace msl
