#include "msl/mersenne_geometry.hpp"

#include <algorithm>

namespace msl::geom {

namespace {

Natural mersenne_of(unsigned m) { return (Natural(1) << m) - 1; }

void validate(const TriangleModel& model, unsigned j, unsigned m) {
    if (model.n < 1) throw std::domain_error("triangle: n >= 1 required");
    if (j < 1 || j > model.K)
        throw std::domain_error("triangle: j out of range");
    if (m >= model.n) throw std::domain_error("triangle: m out of range");
}

}  // namespace

Natural ConsecutiveRun::sum() const {
    // start + (start+1) + ... + (start+length-1)
    return length * start + length * (length - 1) / 2;
}

Natural subtriangle_site_count(const TriangleModel& model, unsigned j,
                               unsigned m) {
    validate(model, j, m);
    if (m == 0) return 1;
    const Natural top = mersenne_of(m);  // largest site index at this level
    const Natural K = model.K;
    // integers mbar with (j-1)*top/K <= mbar <= j*top/K
    Natural hi_floor, lo_ceil;
    mpz_fdiv_q(hi_floor.get_mpz_t(), Natural(j * top).get_mpz_t(),
               K.get_mpz_t());
    mpz_cdiv_q(lo_ceil.get_mpz_t(), Natural((j - 1) * top).get_mpz_t(),
               K.get_mpz_t());
    Natural count = hi_floor - lo_ceil + 1;
    return count > 0 ? count : Natural(0);
}

Natural subtriangle_site_count_bracket_formula(const TriangleModel& model,
                                               unsigned j, unsigned m) {
    validate(model, j, m);
    if (m == 0) return 1;
    const Natural top = mersenne_of(m);
    const Natural K = model.K;
    Natural hi_ceil, lo_floor;
    mpz_cdiv_q(hi_ceil.get_mpz_t(), Natural(j * top).get_mpz_t(),
               K.get_mpz_t());
    mpz_fdiv_q(lo_floor.get_mpz_t(), Natural((j - 1) * top).get_mpz_t(),
               K.get_mpz_t());
    return hi_ceil - lo_floor + 1;
}

Natural tau2(unsigned n_minus_1, unsigned K) {
    if (K < 2) throw std::domain_error("tau2: K >= 2 required");
    Natural count = 1;  // m = 0, the apex
    for (unsigned m = 1; m <= n_minus_1; ++m) {
        if (n_minus_1 % m != 0) continue;
        if (mpz_divisible_ui_p(mersenne_of(m).get_mpz_t(), K)) count += 1;
    }
    return count;
}

Natural tau2_all_m(unsigned n_minus_1, unsigned K) {
    if (K < 2) throw std::domain_error("tau2: K >= 2 required");
    Natural count = 1;
    for (unsigned m = 1; m <= n_minus_1; ++m)
        if (mpz_divisible_ui_p(mersenne_of(m).get_mpz_t(), K)) count += 1;
    return count;
}

PartitionAudit partition_audit(const TriangleModel& model) {
    if (model.K < 1) throw std::domain_error("partition_audit: K >= 1");
    if (model.n < 1) throw std::domain_error("partition_audit: n >= 1");
    PartitionAudit a;
    a.n = model.n;
    a.K = model.K;
    a.distinct = mersenne_of(model.n);

    Natural grand_total = 0;
    for (unsigned j = 1; j <= model.K; ++j) {
        Natural total = 0, total_bracket = 0;
        for (unsigned m = 0; m < model.n; ++m) {
            total += subtriangle_site_count(model, j, m);
            total_bracket += subtriangle_site_count_bracket_formula(model, j, m);
        }
        a.per_triangle.push_back(total);
        a.per_triangle_bracket.push_back(total_bracket);
        a.per_triangle_apex_t1.push_back(j == 1 ? total : total - 1);
        grand_total += total;
    }
    a.overcount = grand_total - a.distinct;

    // Sites on an interior cut at level m: mbar = t(2^m-1)/K for integer
    // t in [1, K-1]; there are gcd(K, 2^m-1) - 1 of them, each counted by two
    // adjacent subtriangles. The apex is shared K-fold.
    a.boundary_overcount = model.K - 1;
    for (unsigned m = 1; m < model.n; ++m)
        a.boundary_overcount += arith::gcd(mersenne_of(m), model.K) - 1;
    a.overcount_matches_boundary = (a.overcount == a.boundary_overcount);

    if (model.K >= 2) {
        a.tau2_divisors = tau2(model.n - 1, model.K);
        a.tau2_every_level = tau2_all_m(model.n - 1, model.K);
        a.paper_overcount_formula = (model.K - 1) * a.tau2_divisors;
    } else {
        a.tau2_divisors = 0;
        a.tau2_every_level = 0;
        a.paper_overcount_formula = 0;
    }
    return a;
}

std::vector<ConsecutiveRun> consecutive_sum_decompositions(const Natural& N) {
    if (N < 1)
        throw std::domain_error("consecutive_sum_decompositions: N >= 1");
    std::vector<ConsecutiveRun> runs;
    // L terms starting at s: L*s + L(L-1)/2 = N, s >= 1
    for (Natural L = 2; L * (L + 1) / 2 <= N; ++L) {
        Natural body = N - L * (L - 1) / 2;
        if (body % L == 0) {
            Natural s = body / L;
            if (s >= 1) runs.push_back({s, L});
        }
    }
    std::sort(runs.begin(), runs.end(),
              [](const ConsecutiveRun& a, const ConsecutiveRun& b) {
                  return a.start < b.start;
              });
    return runs;
}

bool classify_prime_or_power_of_two(const Natural& N) {
    if (N < 2) throw std::domain_error("classify: N >= 2 required");
    for (const auto& run : consecutive_sum_decompositions(N))
        if (run.length >= 3) return false;
    return true;
}

bool MersenneDivisorReport::all_forms_hold() const {
    if (incomplete) return false;
    return std::all_of(entries.begin(), entries.end(),
                       [](const MersenneDivisorEntry& e) {
                           return e.form_2pk_plus_1 && e.form_8k_pm_1;
                       });
}

MersenneDivisorReport mersenne_divisor_form_check(const Natural& p,
                                                  uint64_t rho_budget) {
    if (p == 2 || !arith::is_prime(p))
        throw std::domain_error("mersenne_divisor_form_check: p odd prime");
    MersenneDivisorReport rep;
    rep.p = p;
    rep.mersenne = (Natural(1) << mpz_get_ui(p.get_mpz_t())) - 1;
    rep.mersenne_prime = arith::is_prime(rep.mersenne);
    rep.unfactored_cofactor = 1;

    auto pf = arith::try_factorize(rep.mersenne, rho_budget);
    rep.incomplete = !pf.complete();
    if (rep.incomplete) rep.unfactored_cofactor = *pf.cofactor;

    const Natural two_p = 2 * p;
    for (const auto& f : pf.factors.factors) {
        MersenneDivisorEntry e;
        e.q = f.prime;
        e.exponent = f.exponent;
        e.form_2pk_plus_1 = ((e.q - 1) % two_p == 0);
        e.k = e.form_2pk_plus_1 ? Natural((e.q - 1) / two_p) : Natural(0);
        e.mod8 = static_cast<unsigned>(mpz_fdiv_ui(e.q.get_mpz_t(), 8));
        e.form_8k_pm_1 = (e.mod8 == 1 || e.mod8 == 7);
        rep.entries.push_back(e);
    }
    return rep;
}

std::vector<Natural> perfect_number_sequence(unsigned g_max) {
    if (g_max < 1) throw std::domain_error("perfect_number_sequence: g_max >= 1");
    std::vector<Natural> seq;
    Natural prev = 1;
    for (unsigned g = 1; g <= g_max; ++g) {
        Natural value = (g == 1) ? Natural(1) : 4 * prev + (Natural(1) << (g - 1));
        Natural closed = (Natural(1) << (g - 1)) * mersenne_of(g);
        if (value != closed)
            throw std::logic_error("perfect_number_sequence: recurrence drift");
        seq.push_back(value);
        prev = value;
    }
    return seq;
}

}  // namespace msl::geom
