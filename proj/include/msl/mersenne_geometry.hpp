#pragma once

#include <vector>

#include "msl/exact_arith.hpp"

namespace msl::geom {

// Triangular array for 2^n - 1: level m (m = 0..n-1) holds 2^m sites indexed
// mbar = 0..2^m-1; for m >= 1 site mbar sits at fraction mbar/(2^m - 1) of the
// base. The triangle is cut into K parts of equal angular width.
struct TriangleModel {
    unsigned n = 1;  // level count
    unsigned K = 1;  // subtriangle count
};

struct ConsecutiveRun {
    Natural start;   // >= 1
    Natural length;  // >= 2
    Natural sum() const;
    bool operator==(const ConsecutiveRun&) const = default;
};

// Sites of level m falling in subtriangle j:
//   (j-1)(2^m-1)/K <= mbar <= j(2^m-1)/K,  exact rational comparison.
// m = 0 is the apex, counted as belonging to every subtriangle here; the
// audit also reports the apex-in-T1-only convention.
Natural subtriangle_site_count(const TriangleModel& model, unsigned j,
                               unsigned m);

// Literal bracket reading of the closed-form site count
// (ceiling of the upper bound, floor of the lower, plus one); reported next
// to the exact count so the mismatch is visible, never used for totals.
Natural subtriangle_site_count_bracket_formula(const TriangleModel& model,
                                               unsigned j, unsigned m);

// 1 (apex) + #{m : 1 <= m <= n-1, m | n-1, K | 2^m - 1}.  K >= 2.
Natural tau2(unsigned n_minus_1, unsigned K);
// variant summing over every level 1 <= m <= n-1 regardless of m | n-1
Natural tau2_all_m(unsigned n_minus_1, unsigned K);

struct PartitionAudit {
    unsigned n = 0;
    unsigned K = 0;
    std::vector<Natural> per_triangle;          // apex in every subtriangle
    std::vector<Natural> per_triangle_apex_t1;  // apex in T1 only
    std::vector<Natural> per_triangle_bracket;  // bracket-formula totals
    Natural distinct;                           // 2^n - 1
    Natural overcount;            // sum(per_triangle) - distinct
    Natural boundary_overcount;   // shared-site incidences counted directly
    Natural tau2_divisors;
    Natural tau2_every_level;
    Natural paper_overcount_formula;  // (K-1) * tau2(n-1, K)
    bool overcount_matches_boundary = false;
};

PartitionAudit partition_audit(const TriangleModel& model);

// All runs of >= 2 consecutive positive integers summing to N, sorted by
// start.
std::vector<ConsecutiveRun> consecutive_sum_decompositions(const Natural& N);

// true iff no run of length >= 3 exists (de la Rosa characterization of
// primes and powers of two)
bool classify_prime_or_power_of_two(const Natural& N);

struct MersenneDivisorEntry {
    Natural q;               // prime factor of 2^p - 1
    unsigned long exponent;
    Natural k;               // (q - 1) / (2p) when the form holds
    unsigned mod8;
    bool form_2pk_plus_1;
    bool form_8k_pm_1;
};

struct MersenneDivisorReport {
    Natural p;
    Natural mersenne;  // 2^p - 1
    bool mersenne_prime;
    std::vector<MersenneDivisorEntry> entries;
    bool incomplete = false;     // factorization budget ran out
    Natural unfactored_cofactor; // 1 unless incomplete
    bool all_forms_hold() const;
};

MersenneDivisorReport mersenne_divisor_form_check(const Natural& p,
                                                  uint64_t rho_budget = 200'000'000);

// P_g = 2^{g-1}(2^g - 1) for g = 1..g_max via the recurrence
// P_g = 4 P_{g-1} + 2^{g-1}, cross-checked against the closed form.
std::vector<Natural> perfect_number_sequence(unsigned g_max);

}  // namespace msl::geom
