#include "msl/exact_arith.hpp"

#include <algorithm>
#include <map>

namespace msl::arith {

namespace {

const mpz_class kTwo64 = mpz_class(1) << 64;

// deterministic-below-2^64 Miller-Rabin round
bool miller_rabin_witness(const Natural& n, const Natural& a) {
    // n odd >= 3, 1 < a < n-1
    Natural d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;

    Natural x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

// f(y) = y^2 + c mod n
Natural brent_rho(const Natural& n, unsigned long c, uint64_t& budget) {
    Natural x = 2, y = 2, q = 1, g = 1, ys, t;
    unsigned long r = 1;
    const unsigned long m = 128;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
        if (budget < r) throw FactorizationTimeout(n);
        budget -= r;
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            unsigned long lim = std::min(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                t = x - y;
                q = (q * t) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        // back-track one step at a time
        do {
            ys = (ys * ys + c) % n;
            t = x - ys;
            g = gcd(t, n);
        } while (g == 1);
    }
    return g;
}

}  // namespace

bool is_prime(const Natural& n) {
    if (n < 2) return false;
    for (uint64_t p : kPrimalityWitnesses) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (n < 41 * 41) return true;
    for (uint64_t a : kPrimalityWitnesses)
        if (miller_rabin_witness(n, Natural(a))) return false;
    return true;
}

Certainty primality_certainty(const Natural& n) {
    return n < kTwo64 ? Certainty::proven : Certainty::probable;
}

Natural Factorization::reconstruct() const {
    Natural n = 1;
    for (const auto& f : factors) n *= pow_ui(f.prime, f.exponent);
    return n;
}

bool Factorization::all_proven() const {
    return std::all_of(factors.begin(), factors.end(), [](const Factor& f) {
        return f.certainty == Certainty::proven;
    });
}

const Natural& Factorization::largest_prime() const {
    if (factors.empty()) throw std::logic_error("empty factorization");
    return factors.back().prime;
}

PartialFactorization try_factorize(const Natural& n, uint64_t rho_budget) {
    if (n < 2) throw std::domain_error("factorize: n must be >= 2");

    std::map<Natural, unsigned long> acc;
    Natural rest = n;

    unsigned long tz = mpz_scan1(rest.get_mpz_t(), 0);
    if (tz > 0) {
        acc[2] = tz;
        rest >>= tz;
    }
    for (uint64_t p = 3; p < 10'000 && rest > 1; p += 2) {
        if (mpz_cmp_ui(rest.get_mpz_t(), p * p) < 0) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            acc[Natural(p)] += 1;
            rest /= p;
        }
    }

    std::vector<Natural> work;
    if (rest > 1) work.push_back(rest);
    std::optional<Natural> unfactored;
    while (!work.empty()) {
        Natural c = std::move(work.back());
        work.pop_back();
        if (c == 1) continue;
        if (is_prime(c)) {
            acc[c] += 1;
            continue;
        }
        if (mpz_perfect_power_p(c.get_mpz_t())) {
            for (unsigned long k = 2;; ++k) {
                Natural root;
                if (mpz_root(root.get_mpz_t(), c.get_mpz_t(), k)) {
                    for (unsigned long i = 0; i < k; ++i) work.push_back(root);
                    break;
                }
            }
            continue;
        }
        try {
            Natural d = c;
            for (unsigned long salt = 1; d == c; ++salt)
                d = brent_rho(c, salt, rho_budget);
            work.push_back(c / d);
            work.push_back(std::move(d));
        } catch (const FactorizationTimeout&) {
            Natural remainder = c;
            for (const Natural& w : work) remainder *= w;
            unfactored = remainder;
            break;
        }
    }

    PartialFactorization out;
    out.cofactor = std::move(unfactored);
    for (auto& [p, e] : acc)
        out.factors.factors.push_back({p, e, primality_certainty(p)});
    return out;
}

Factorization factorize(const Natural& n, uint64_t rho_budget) {
    PartialFactorization pf = try_factorize(n, rho_budget);
    if (!pf.complete()) throw FactorizationTimeout(*pf.cofactor);
    return pf.factors;
}

bool lucas_lehmer(const Natural& p) {
    if (p == 2 || !is_prime(p))
        throw std::domain_error("lucas_lehmer: p must be an odd prime");
    const unsigned long pl = mpz_get_ui(p.get_mpz_t());
    const Natural m = (Natural(1) << pl) - 1;
    Natural s = 4;
    for (unsigned long i = 0; i + 2 < pl; ++i) s = (s * s - 2) % m;
    return s % m == 0;  // p = 3 runs one step; s is already reduced
}

Natural multiplicative_order(const Natural& x, const Natural& p) {
    if (!is_prime(p)) throw std::domain_error("multiplicative_order: p not prime");
    if (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()))
        throw std::domain_error("multiplicative_order: p divides x");

    Natural order = p - 1;
    if (order == 1) return 1;
    Factorization f = factorize(order);
    Natural t;
    for (const auto& [q, e, c] : f.factors) {
        for (unsigned long i = 0; i < e; ++i) {
            Natural cand = order / q;
            mpz_powm(t.get_mpz_t(), x.get_mpz_t(), cand.get_mpz_t(), p.get_mpz_t());
            if (t == 1)
                order = cand;
            else
                break;
        }
    }
    return order;
}

int jacobi_symbol(const Integer& a, const Natural& n) {
    if (n < 1 || mpz_even_p(n.get_mpz_t()))
        throw std::domain_error("jacobi_symbol: n must be odd and >= 1");
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

Natural integer_sqrt(const Natural& n) {
    if (n < 0) throw std::domain_error("integer_sqrt: n must be >= 0");
    Natural r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Natural& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t());
}

std::optional<Rational> is_rational_square(const Rational& q) {
    if (q <= 0) throw std::domain_error("is_rational_square: q must be > 0");
    const Natural& num = q.get_num();
    const Natural& den = q.get_den();
    if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
    Rational r(integer_sqrt(num), integer_sqrt(den));
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

Natural pow_ui(const Natural& base, unsigned long exp) {
    Natural r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Natural gcd(const Natural& a, const Natural& b) {
    Natural g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

std::vector<Natural> divisors(const Natural& n) {
    Factorization f = factorize(n == 1 ? Natural(2) : n);
    std::vector<Natural> out{1};
    if (n == 1) return out;
    for (const auto& [p, e, c] : f.factors) {
        size_t sz = out.size();
        Natural pk = 1;
        for (unsigned long i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint64_t> primes_up_to(uint64_t bound) {
    std::vector<uint64_t> primes;
    if (bound < 2) return primes;
    std::vector<bool> sieve(bound + 1, true);
    for (uint64_t i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        primes.push_back(i);
        for (uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return primes;
}

}  // namespace msl::arith
