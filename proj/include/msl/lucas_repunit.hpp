#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "msl/exact_arith.hpp"

namespace msl::lucas {

// U_{n+2} = a U_{n+1} - b U_n with U_0 = 0, U_1 = 1. The repunit
// specialization is a = x + 1, b = x, where U_n = (x^n - 1)/(x - 1).
struct LucasParams {
    Integer a;
    Integer b;

    Integer discriminant() const { return a * a - 4 * b; }
    static LucasParams repunit_base(const Integer& x) { return {x + 1, x}; }
};

// (x^n - 1)/(x - 1) = 1 + x + ... + x^{n-1}; x must not be 1
Integer repunit(const Integer& x, unsigned long n);

Integer lucas_u(const LucasParams& params, unsigned long n);

// least k >= 1 with U_k = 0 (mod p), scanning one full period of the pair
// sequence mod p; absent if the period contains no zero
std::optional<Natural> rank_of_apparition(const LucasParams& params,
                                          const Natural& p);

struct Eq29Record {
    Natural x;
    Natural p;
    int legendre;        // (x/p)
    unsigned p_mod4;
    Natural rank;        // alpha(x+1, x, p) = ord_p(x)
    unsigned rank_mod4;
    bool table_consistent;
};

// classifies (x, p) against the four rank-mod-4 cases; requires p odd prime
// with p not dividing x or x-1
Eq29Record eq29_classification(const Natural& x, const Natural& p);

struct DivisibilityRuleReport {
    LucasParams params;
    Natural p;
    unsigned long n_max = 0;
    int applied_rule = 0;  // 1: p|a,p|b  2: p|a only  3: p|D only  4: p∤abD
    bool holds = false;
    std::vector<unsigned long> violations;
    Natural rule4_index;  // p - (D/p), when rule 4 applies
};

DivisibilityRuleReport divisibility_rules_check(const LucasParams& params,
                                                const Natural& p,
                                                unsigned long n_max);

struct PerfectPowerHit {
    Natural a;
    Natural x;
    unsigned long n = 0;
    Natural y;
    unsigned long m = 0;  // maximal exponent >= 2
    bool in_paper_list = false;

    bool operator==(const PerfectPowerHit&) const = default;
};

// re-verifies a * repunit(x, n) == y^m; throws std::logic_error on mismatch
PerfectPowerHit checked_hit(Natural a, Natural x, unsigned long n, Natural y,
                            unsigned long m);

// maximal m >= 2 with v = y^m, y minimal; absent when v is not a perfect
// power (v >= 2 required)
std::optional<std::pair<Natural, unsigned long>> perfect_power(
    const Natural& v);

// square repunits with n >= 3 (Eq. 12 with y^2); hits carry a = 1, m = 2
std::vector<PerfectPowerHit> nagell_ljunggren_scan(unsigned long x_max,
                                                   unsigned long n_max);
// the trivial n = 2 family x = y^2 - 1
std::vector<PerfectPowerHit> nagell_ljunggren_n2_family(unsigned long x_max);

struct InkeriRange {
    unsigned long a_min = 1;
    unsigned long a_max = 100;
    unsigned long x_min = 2;
    unsigned long x_max = 100;
    bool a_less_than_x = true;  // the paper's 1 <= a < x constraint
};

// all a * repunit(x, n) = y^m with m >= 2 in range; hits outside the
// paper's n = 3 / n = 4 lists keep in_paper_list = false
std::vector<PerfectPowerHit> inkeri_scan(const InkeriRange& range,
                                         const std::vector<unsigned long>& n_set);
const std::vector<PerfectPowerHit>& known_inkeri_hits(unsigned long n);

struct RepunitCoincidence {
    Natural value;
    Natural x;
    unsigned long m = 0;  // value = repunit(x, m), x < y
    Natural y;
    unsigned long n = 0;  // value = repunit(y, n)

    bool operator==(const RepunitCoincidence&) const = default;
};

// equal repunit values with both lengths >= 3, value <= value_cap
// (bases range as far as the cap allows unless x_max narrows them)
std::vector<RepunitCoincidence> repunit_coincidence_scan(
    const Natural& value_cap, unsigned long n_max = 64,
    std::optional<Natural> x_max = std::nullopt);

struct EqualDigitEntry {
    Natural y;
    Natural d;
    unsigned long l = 0;
    bool trivial = false;       // the always-present (N-1, 1, 2)
    bool pure_repunit = false;  // d == 1
    std::optional<unsigned long> l_eq26;  // l' with N-1 = y*(y^l'-1)/(y-1)
    bool l_eq26_odd = false;
};

// every base y in which N reads as d repeated l times (l >= 2, 1 <= d < y)
std::vector<EqualDigitEntry> equal_digit_bases(const Natural& N);

// pairs m < n <= n_max with U_m * U_n a positive perfect square
std::vector<std::pair<unsigned long, unsigned long>> square_class_pairs(
    const LucasParams& params, unsigned long n_max);

struct Eq32Report {
    Natural x;
    unsigned long n_max = 0;
    bool hypothesis_holds = false;  // x = 0 or 3 (mod 4)
    std::vector<unsigned long> violations;  // odd n with repunit = n * square
};

// repunit(x, n) != n * (rational square) for odd n in [3, n_max]
Eq32Report eq32_check(const Natural& x, unsigned long n_max);

}  // namespace msl::lucas
