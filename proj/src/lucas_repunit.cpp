#include "msl/lucas_repunit.hpp"

#include <algorithm>
#include <map>

namespace msl::lucas {

using arith::integer_sqrt;
using arith::is_perfect_square;
using arith::is_prime;

Integer repunit(const Integer& x, unsigned long n) {
    if (x == 1) throw std::domain_error("repunit: x = 1");
    if (n < 1) throw std::domain_error("repunit: n >= 1");
    Integer xn;
    mpz_pow_ui(xn.get_mpz_t(), x.get_mpz_t(), n);
    Integer num = xn - 1, den = x - 1, q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Integer lucas_u(const LucasParams& params, unsigned long n) {
    Integer prev = 0, cur = 1;
    if (n == 0) return prev;
    for (unsigned long i = 1; i < n; ++i) {
        Integer next = params.a * cur - params.b * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::optional<Natural> rank_of_apparition(const LucasParams& params,
                                          const Natural& p) {
    if (p == 2 || !is_prime(p))
        throw std::domain_error("rank_of_apparition: p odd prime required");
    Natural a = params.a % p, b = params.b % p;
    if (a < 0) a += p;
    if (b < 0) b += p;
    // pair states (U_k, U_{k+1}) mod p repeat within p^2 steps, so a zero
    // not found by then never appears
    Natural u = 0, v = 1;  // U_0, U_1
    Natural limit = p * p + 2;
    for (Natural k = 1; k <= limit; ++k) {
        // v = U_k here
        if (v == 0) return k;
        Natural next = (a * v - b * u) % p;
        if (next < 0) next += p;
        u = v;
        v = std::move(next);
    }
    return std::nullopt;
}

Eq29Record eq29_classification(const Natural& x, const Natural& p) {
    if (p == 2 || !is_prime(p))
        throw std::domain_error("eq29_classification: p odd prime required");
    if (x % p == 0 || (x - 1) % p == 0)
        throw std::domain_error("eq29_classification: p | x(x-1) excluded");

    Eq29Record rec;
    rec.x = x;
    rec.p = p;
    rec.legendre = arith::jacobi_symbol(x, p);
    rec.p_mod4 = static_cast<unsigned>(mpz_fdiv_ui(p.get_mpz_t(), 4));
    rec.rank = arith::multiplicative_order(x, p);
    rec.rank_mod4 = static_cast<unsigned>(mpz_fdiv_ui(rec.rank.get_mpz_t(), 4));

    if (rec.legendre == -1 && rec.p_mod4 == 3)
        rec.table_consistent = (rec.rank_mod4 == 2);
    else if (rec.legendre == -1 && rec.p_mod4 == 1)
        rec.table_consistent = (rec.rank_mod4 == 0);
    else if (rec.legendre == 1 && rec.p_mod4 == 3)
        rec.table_consistent = (rec.rank_mod4 == 1);
    else
        rec.table_consistent = (rec.rank_mod4 == 0 || rec.rank_mod4 == 2);
    return rec;
}

DivisibilityRuleReport divisibility_rules_check(const LucasParams& params,
                                                const Natural& p,
                                                unsigned long n_max) {
    if (p == 2 || !is_prime(p))
        throw std::domain_error("divisibility_rules_check: p odd prime");
    DivisibilityRuleReport rep;
    rep.params = params;
    rep.p = p;
    rep.n_max = n_max;
    rep.rule4_index = 0;

    const bool pa = mpz_divisible_p(params.a.get_mpz_t(), p.get_mpz_t());
    const bool pb = mpz_divisible_p(params.b.get_mpz_t(), p.get_mpz_t());
    const Integer D = params.discriminant();
    const bool pD = mpz_divisible_p(D.get_mpz_t(), p.get_mpz_t());

    // U_n mod p, incrementally
    std::vector<Natural> u_mod{0 % p, 1 % p};
    Natural a = params.a % p, b = params.b % p;
    if (a < 0) a += p;
    if (b < 0) b += p;
    for (unsigned long n = 2; n <= n_max; ++n) {
        Natural next = (a * u_mod[n - 1] - b * u_mod[n - 2]) % p;
        if (next < 0) next += p;
        u_mod.push_back(next);
    }

    rep.holds = true;
    if (pa && pb) {
        rep.applied_rule = 1;
        for (unsigned long n = 2; n <= n_max; ++n)
            if (u_mod[n] != 0) rep.violations.push_back(n);
    } else if (pa && !pb) {
        rep.applied_rule = 2;
        for (unsigned long n = 1; n <= n_max; ++n)
            if ((u_mod[n] == 0) != (n % 2 == 0)) rep.violations.push_back(n);
    } else if (!pa && !pb && pD) {
        rep.applied_rule = 3;
        for (unsigned long n = 1; n <= n_max; ++n)
            if (mpz_divisible_p(Natural(n).get_mpz_t(), p.get_mpz_t()) &&
                u_mod[n] != 0)
                rep.violations.push_back(n);
    } else if (!pa && !pb && !pD) {
        rep.applied_rule = 4;
        int ls = arith::jacobi_symbol(D, p);
        Natural idx = p - ls;
        rep.rule4_index = idx;
        // compute U_idx mod p directly (idx may exceed n_max)
        Natural prev = 0, cur = 1;
        for (Natural i = 1; i < idx; ++i) {
            Natural next = (a * cur - b * prev) % p;
            if (next < 0) next += p;
            prev = cur;
            cur = next;
        }
        if (!(idx >= 1 && cur == 0)) rep.violations.push_back(0);
    }
    rep.holds = rep.violations.empty();
    return rep;
}

PerfectPowerHit checked_hit(Natural a, Natural x, unsigned long n, Natural y,
                            unsigned long m) {
    Natural lhs = a * repunit(x, n);
    if (lhs != arith::pow_ui(y, m))
        throw std::logic_error("perfect power hit fails its defining equation");
    PerfectPowerHit hit;
    hit.a = std::move(a);
    hit.x = std::move(x);
    hit.n = n;
    hit.y = std::move(y);
    hit.m = m;
    return hit;
}

std::optional<std::pair<Natural, unsigned long>> perfect_power(
    const Natural& v) {
    if (v < 2) return std::nullopt;
    Natural w = v;
    unsigned long m = 1;
    const auto shrink = [&w, &m](unsigned long q) {
        Natural root;
        while (mpz_root(root.get_mpz_t(), w.get_mpz_t(), q)) {
            w = root;
            m *= q;
            if (w < 4) break;
        }
    };
    shrink(2);
    for (unsigned long q = 3; (Natural(1) << q) <= w; q += 2) {
        if (!is_prime(Natural(q))) continue;
        shrink(q);
    }
    if (m < 2) return std::nullopt;
    return std::make_pair(w, m);
}

std::vector<PerfectPowerHit> nagell_ljunggren_scan(unsigned long x_max,
                                                   unsigned long n_max) {
    std::vector<PerfectPowerHit> hits;
    for (unsigned long x = 2; x <= x_max; ++x) {
        for (unsigned long n = 3; n <= n_max; ++n) {
            Natural v = repunit(Natural(x), n);
            if (is_perfect_square(v)) {
                auto hit = checked_hit(1, x, n, integer_sqrt(v), 2);
                hit.in_paper_list = (x == 7 && n == 4) || (x == 3 && n == 5);
                hits.push_back(std::move(hit));
            }
        }
    }
    return hits;
}

std::vector<PerfectPowerHit> nagell_ljunggren_n2_family(unsigned long x_max) {
    std::vector<PerfectPowerHit> hits;
    for (unsigned long x = 2; x <= x_max; ++x) {
        Natural v = Natural(x) + 1;  // repunit(x, 2)
        if (is_perfect_square(v)) {
            auto hit = checked_hit(1, x, 2, integer_sqrt(v), 2);
            hit.in_paper_list = true;  // the listed n = 2 family x = y^2 - 1
            hits.push_back(std::move(hit));
        }
    }
    return hits;
}

const std::vector<PerfectPowerHit>& known_inkeri_hits(unsigned long n) {
    static const std::vector<PerfectPowerHit> n3 = {
        checked_hit(1, 18, 3, 7, 3),    checked_hit(7, 18, 3, 7, 4),
        checked_hit(8, 18, 3, 14, 3),   checked_hit(3, 22, 3, 39, 2),
        checked_hit(12, 22, 3, 78, 2),  checked_hit(19, 30, 3, 133, 2),
        checked_hit(13, 68, 3, 247, 2), checked_hit(52, 68, 3, 494, 2)};
    static const std::vector<PerfectPowerHit> n4 = {
        checked_hit(1, 7, 4, 20, 2), checked_hit(4, 7, 4, 40, 2),
        checked_hit(21, 41, 4, 1218, 2), checked_hit(58, 99, 4, 7540, 2)};
    static const std::vector<PerfectPowerHit> none;
    if (n == 3) return n3;
    if (n == 4) return n4;
    return none;
}

static std::vector<PerfectPowerHit> inkeri_scan_one(const InkeriRange& range,
                                                    unsigned long n) {
    std::vector<PerfectPowerHit> hits;
    const auto& paper = known_inkeri_hits(n);
    for (unsigned long x = std::max(range.x_min, 2ul); x <= range.x_max; ++x) {
        Natural rep = repunit(Natural(x), n);
        unsigned long a_top =
            range.a_less_than_x ? std::min(range.a_max, x - 1) : range.a_max;
        for (unsigned long a = range.a_min; a <= a_top; ++a) {
            Natural v = Natural(a) * rep;
            auto pw = perfect_power(v);
            if (!pw) continue;
            auto hit = checked_hit(a, x, n, pw->first, pw->second);
            hit.in_paper_list =
                std::any_of(paper.begin(), paper.end(),
                            [&](const PerfectPowerHit& h) {
                                return h.a == hit.a && h.x == hit.x &&
                                       h.n == hit.n && h.y == hit.y &&
                                       h.m == hit.m;
                            });
            hits.push_back(std::move(hit));
        }
    }
    return hits;
}

std::vector<PerfectPowerHit> inkeri_scan(
    const InkeriRange& range, const std::vector<unsigned long>& n_set) {
    std::vector<PerfectPowerHit> hits;
    for (unsigned long n : n_set) {
        if (n < 2) throw std::domain_error("inkeri_scan: n >= 2");
        auto part = inkeri_scan_one(range, n);
        hits.insert(hits.end(), part.begin(), part.end());
    }
    std::sort(hits.begin(), hits.end(),
              [](const PerfectPowerHit& l, const PerfectPowerHit& r) {
                  return std::tie(l.n, l.x, l.a) < std::tie(r.n, r.x, r.a);
              });
    return hits;
}

std::vector<RepunitCoincidence> repunit_coincidence_scan(
    const Natural& value_cap, unsigned long n_max,
    std::optional<Natural> x_max) {
    struct Entry {
        Natural value;
        unsigned long x;
        unsigned long n;
    };
    std::vector<Entry> entries;
    Natural x = 2;
    while (x * x + x + 1 <= value_cap) {
        if (x_max && x > *x_max) break;
        Natural v = x * x + x + 1;  // repunit(x, 3)
        unsigned long n = 3;
        while (v <= value_cap && n <= n_max) {
            entries.push_back({v, mpz_get_ui(x.get_mpz_t()), n});
            v = v * x + 1;  // repunit(x, n+1)
            n += 1;
        }
        x += 1;
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
        return std::tie(l.value, l.x) < std::tie(r.value, r.x);
    });

    std::vector<RepunitCoincidence> out;
    for (size_t i = 0; i + 1 < entries.size(); ++i) {
        for (size_t j = i + 1;
             j < entries.size() && entries[j].value == entries[i].value; ++j) {
            if (entries[i].x == entries[j].x) continue;
            out.push_back({entries[i].value, Natural(entries[i].x),
                           entries[i].n, Natural(entries[j].x),
                           entries[j].n});
        }
    }
    return out;
}

std::vector<EqualDigitEntry> equal_digit_bases(const Natural& N) {
    if (N < 3) throw std::domain_error("equal_digit_bases: N >= 3");
    std::vector<EqualDigitEntry> out;

    const auto eq26_length = [&N](const Natural& y) -> std::optional<unsigned long> {
        // l' with N - 1 = y + y^2 + ... + y^{l'}
        Natural t = N - 1;
        if (t % y != 0) return std::nullopt;
        Natural u = t / y;  // must be all-ones in base y
        unsigned long l = 0;
        while (u > 0) {
            if (u % y != 1) return std::nullopt;
            u /= y;
            l += 1;
        }
        return l;
    };

    const auto push = [&](Natural y, Natural d, unsigned long l, bool trivial) {
        EqualDigitEntry e;
        e.y = std::move(y);
        e.d = std::move(d);
        e.l = l;
        e.trivial = trivial;
        e.pure_repunit = (e.d == 1);
        e.l_eq26 = eq26_length(e.y);
        e.l_eq26_odd = e.l_eq26 && (*e.l_eq26 % 2 == 1);
        out.push_back(std::move(e));
    };

    // l >= 3: base y <= sqrt(N); read the base-y digits directly
    for (Natural y = 2; y * y + y + 1 <= N; ++y) {
        Natural u = N, digit = N % y;
        bool equal = true;
        unsigned long l = 0;
        while (u > 0) {
            if (u % y != digit) {
                equal = false;
                break;
            }
            u /= y;
            l += 1;
        }
        if (equal && digit >= 1 && l >= 3) push(y, digit, l, false);
    }
    // l = 2: N = d (y + 1) with 1 <= d < y, so y + 1 runs over divisors
    for (const Natural& t : arith::divisors(N)) {
        if (t < 3) continue;
        Natural y = t - 1, d = N / t;
        if (d >= 1 && d < y) push(y, d, 2, y == N - 1);
    }
    std::sort(out.begin(), out.end(),
              [](const EqualDigitEntry& l, const EqualDigitEntry& r) {
                  return l.y < r.y;
              });
    return out;
}

std::vector<std::pair<unsigned long, unsigned long>> square_class_pairs(
    const LucasParams& params, unsigned long n_max) {
    if (n_max > 60) throw std::domain_error("square_class_pairs: n_max <= 60");
    std::vector<Integer> u(n_max + 1);
    for (unsigned long n = 0; n <= n_max; ++n) u[n] = lucas_u(params, n);

    std::vector<std::pair<unsigned long, unsigned long>> pairs;
    for (unsigned long m = 1; m <= n_max; ++m) {
        if (u[m] == 0) continue;
        for (unsigned long n = m + 1; n <= n_max; ++n) {
            if (u[n] == 0) continue;
            Integer prod = u[m] * u[n];
            if (prod > 0 && is_perfect_square(prod)) pairs.emplace_back(m, n);
        }
    }
    return pairs;
}

Eq32Report eq32_check(const Natural& x, unsigned long n_max) {
    Eq32Report rep;
    rep.x = x;
    rep.n_max = n_max;
    unsigned r4 = static_cast<unsigned>(mpz_fdiv_ui(x.get_mpz_t(), 4));
    rep.hypothesis_holds = (r4 == 0 || r4 == 3);
    if (!rep.hypothesis_holds) return rep;
    for (unsigned long n = 3; n <= n_max; n += 2) {
        // repunit / n is a rational square iff n * repunit is a square
        Natural v = Natural(n) * repunit(x, n);
        if (is_perfect_square(v)) rep.violations.push_back(n);
    }
    return rep;
}

}  // namespace msl::lucas
