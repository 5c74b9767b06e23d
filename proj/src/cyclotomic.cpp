#include "msl/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "msl/lucas_repunit.hpp"

namespace msl::cyclo {

unsigned long IntPolynomial::degree() const {
    return coeffs.empty() ? 0 : coeffs.size() - 1;
}

Integer IntPolynomial::eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

void IntPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPolynomial r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Integer(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return r;
}

IntPolynomial poly_divexact(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw std::logic_error("poly division by zero");
    if (num.is_zero()) return {};
    if (num.coeffs.size() < den.coeffs.size())
        throw std::logic_error("poly division not exact");

    IntPolynomial rem = num;
    const size_t dd = den.coeffs.size() - 1;
    const Integer& lead = den.coeffs.back();
    IntPolynomial quot;
    quot.coeffs.assign(num.coeffs.size() - dd, Integer(0));
    for (size_t k = quot.coeffs.size(); k-- > 0;) {
        Integer& top = rem.coeffs[k + dd];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::logic_error("poly division not exact");
        Integer q = top / lead;
        quot.coeffs[k] = q;
        for (size_t j = 0; j <= dd; ++j)
            rem.coeffs[k + j] -= q * den.coeffs[j];
    }
    rem.trim();
    if (!rem.is_zero()) throw std::logic_error("poly division not exact");
    quot.trim();
    return quot;
}

IntPolynomial x_pow_minus_one(unsigned long n) {
    IntPolynomial p;
    p.coeffs.assign(n + 1, Integer(0));
    p.coeffs[0] = -1;
    p.coeffs[n] = 1;
    return p;
}

const IntPolynomial& cyclotomic_polynomial(unsigned long n) {
    if (n < 1 || n > 10'000)
        throw std::domain_error("cyclotomic_polynomial: n in [1, 10^4]");
    static std::map<unsigned long, IntPolynomial> cache;
    static std::mutex mutex;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    IntPolynomial phi = x_pow_minus_one(n);
    for (unsigned long d = 1; d < n; ++d)
        if (n % d == 0) phi = poly_divexact(phi, cyclotomic_polynomial(d));
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(phi)).first->second;
}

Integer phi_eval(unsigned long n, const Integer& x) {
    if (n < 1) throw std::domain_error("phi_eval: n >= 1");
    if (n == 1) return x - 1;
    if (x >= -1 && x <= 1) return cyclotomic_polynomial(n).eval(x);
    // Phi_n(x) = prod_{d | n} (x^{n/d} - 1)^{mu(d)}
    Integer num = 1, den = 1, pw;
    auto f = arith::factorize(Natural(n));
    std::vector<unsigned long> sf_divisors{1};  // square-free divisors of n
    std::vector<int> mu{1};
    for (const auto& fac : f.factors) {
        unsigned long p = mpz_get_ui(fac.prime.get_mpz_t());
        size_t sz = sf_divisors.size();
        for (size_t i = 0; i < sz; ++i) {
            sf_divisors.push_back(sf_divisors[i] * p);
            mu.push_back(-mu[i]);
        }
    }
    for (size_t i = 0; i < sf_divisors.size(); ++i) {
        mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), n / sf_divisors[i]);
        pw -= 1;
        if (mu[i] == 1)
            num *= pw;
        else
            den *= pw;
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

std::vector<ChainTerm> repunit_factorization_chain(const Integer& x,
                                                   unsigned long n) {
    if (n < 2) throw std::domain_error("repunit_factorization_chain: n >= 2");
    if (x == 1) throw std::domain_error("repunit_factorization_chain: x = 1");
    auto f = arith::factorize(n);
    std::vector<ChainTerm> chain;
    unsigned long acc = 1;
    Integer arg;
    for (const auto& fac : f.factors) {
        unsigned long p = mpz_get_ui(fac.prime.get_mpz_t());
        for (unsigned long i = 0; i < fac.exponent; ++i) {
            mpz_pow_ui(arg.get_mpz_t(), x.get_mpz_t(), acc);
            chain.push_back({p, acc, phi_eval(p, arg)});
            acc *= p;
        }
    }
    return chain;
}

std::vector<QuadraticFactor> quadratic_factor_split(unsigned long n) {
    if (n < 3) throw std::domain_error("quadratic_factor_split: n >= 3");
    std::vector<QuadraticFactor> out;
    for (unsigned long k1 = 1; 2 * k1 < n; ++k1) {
        QuadraticFactor qf;
        qf.k1 = k1;
        qf.k2 = n - k1;
        // 2cos(2 pi k1/n) is rational only at the five Niven angles
        if (6 * k1 == n)
            qf.two_cos = Rational(1);
        else if (3 * k1 == n)
            qf.two_cos = Rational(-1);
        else if (4 * k1 == n)
            qf.two_cos = Rational(0);
        // k1 = 0 (2cos = 2) and 2k1 = n (2cos = -2) fall outside 1 <= k1 < n/2
        if (qf.two_cos) {
            qf.integer_coeff = true;
            qf.paper_pm_half_case = (6 * k1 == n) || (3 * k1 == n);
            IntPolynomial p;
            p.coeffs = {Integer(1), -qf.two_cos->get_num(), Integer(1)};
            qf.integer_poly = std::move(p);
        }
        out.push_back(std::move(qf));
    }
    return out;
}

PrimitiveFactorReport largest_primitive_factor(const Natural& x,
                                               unsigned long n,
                                               uint64_t rho_budget) {
    if (x < 2 || n < 3)
        throw std::domain_error("largest_primitive_factor: x >= 2, n >= 3");
    PrimitiveFactorReport rep;
    rep.x = x;
    rep.n = n;
    rep.phi_value = phi_eval(n, x);
    rep.x_minus_1_divides_phi =
        x > 2 ? mpz_divisible_p(rep.phi_value.get_mpz_t(),
                                Natural(x - 1).get_mpz_t())
              : true;

    Natural g = arith::gcd(rep.phi_value, n);
    if (g == 1) {
        rep.largest_primitive_factor = rep.phi_value;
    } else {
        // the common divisor is a single prime p: the largest prime of n
        // with n/p^a equal to the order of x mod p
        Natural p = arith::factorize(g).largest_prime();
        rep.common_prime = p;
        rep.largest_primitive_factor = rep.phi_value / p;
        rep.common_prime_simple =
            !mpz_divisible_p(rep.largest_primitive_factor.get_mpz_t(),
                             p.get_mpz_t());
        Natural h = n;
        while (mpz_divisible_p(h.get_mpz_t(), p.get_mpz_t())) h /= p;
        rep.h_condition_ok = (arith::multiplicative_order(x, p) == h);
    }
    rep.zsigmondy_exception = (rep.largest_primitive_factor == 1);
    if (rep.largest_primitive_factor > 1) {
        auto pf = arith::try_factorize(rep.largest_primitive_factor, rho_budget);
        rep.factorization_complete = pf.complete();
        for (const auto& f : pf.factors.factors)
            rep.primitive_primes.push_back(f.prime);
    }
    return rep;
}

std::vector<Natural> primitive_prime_divisors(const Natural& x,
                                              unsigned long n,
                                              uint64_t rho_budget) {
    if (x < 2 || n < 1)
        throw std::domain_error("primitive_prime_divisors: x >= 2, n >= 1");
    Natural pw;
    mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), n);
    Natural value = pw - 1;
    auto f = arith::factorize(value, rho_budget);

    std::vector<Natural> out;
    for (const auto& fac : f.factors) {
        bool primitive = true;
        for (unsigned long m = 1; m < n && primitive; ++m) {
            Natural r;
            mpz_powm_ui(r.get_mpz_t(), x.get_mpz_t(), m, fac.prime.get_mpz_t());
            if (r == 1) primitive = false;
        }
        if (primitive) out.push_back(fac.prime);
    }
    return out;
}

Natural largest_prime_divisor(const Natural& v, uint64_t rho_budget) {
    if (v < 2) throw std::domain_error("largest_prime_divisor: v >= 2");
    return arith::factorize(v, rho_budget).largest_prime();
}

Eq38Report eq38_identity_check(unsigned long n, unsigned long p,
                               const Integer& x_min, const Integer& x_max) {
    if (n < 2) throw std::domain_error("eq38: n > 1 required");
    auto f = arith::factorize(n);
    for (const auto& fac : f.factors)
        if (fac.exponent > 1)
            throw std::domain_error("eq38: n must be square-free");
    if (n % p != 0 || !arith::is_prime(Natural(p)))
        throw std::domain_error("eq38: p must be a prime factor of n");

    Eq38Report rep;
    rep.n = n;
    rep.p = p;
    const unsigned long m = n / p;
    for (Integer x = x_min; x <= x_max; ++x) {
        Eq38Check chk;
        chk.x = x;
        chk.lhs = phi_eval(n, x);
        Integer den = phi_eval(m, x);
        if (den == 0) {
            chk.skipped = true;
            rep.checks.push_back(std::move(chk));
            continue;
        }
        Integer xp;
        mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), p);
        Integer num = phi_eval(m, xp);
        if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
            mpz_divexact(chk.rhs.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            chk.match = (chk.lhs == chk.rhs);
        }
        if (!chk.match) rep.all_match = false;
        rep.checks.push_back(std::move(chk));
    }
    return rep;
}

}  // namespace msl::cyclo
