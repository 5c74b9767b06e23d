#pragma once

#include <optional>
#include <vector>

#include "msl/exact_arith.hpp"

namespace msl::pell {

struct ContinuedFraction {
    Natural D;
    Natural a0;                   // floor(sqrt(D))
    std::vector<Natural> period;  // minimal; last element is 2*a0
};

// minimal-period continued fraction of sqrt(D); D must be a non-square >= 2
ContinuedFraction continued_fraction_sqrt(const Natural& D);

struct PellUnit {
    Natural x;
    Natural y;
    Natural D;  // x^2 - D y^2 = 1
};

// least positive solution of x^2 - D y^2 = 1, from the convergents
PellUnit pell_fundamental(const Natural& D);

struct PellSolution {
    Integer z;
    Natural r;
    Natural D;  // z^2 - D r^2 = -3
    unsigned class_id = 0;

    bool operator==(const PellSolution&) const = default;
};

// verifies z^2 - D r^2 = -3; throws std::logic_error on mismatch
PellSolution checked_solution(Integer z, Natural r, Natural D,
                              unsigned class_id = 0);

// Solutions (z, r) and (z', r') belong to the same class when one maps to
// the other under multiplication by a power of the fundamental Pell unit:
// equivalently 3 | (z z' - D r r') and 3 | (z r' - z' r).
bool same_class(const PellSolution& s1, const PellSolution& s2);

// One canonical representative per class of z^2 - D r^2 = -3: z >= 0, r > 0,
// minimal z + r sqrt(D) (exact comparison). Empty when unsolvable.
std::vector<PellSolution> neg3_fundamental_solutions(const Natural& D);

// fund, then count successive unit multiplications (z, r) ->
// (z x + r y D, z y + r x); output has count + 1 entries
std::vector<PellSolution> generate_solutions(const PellSolution& fund,
                                             const PellUnit& unit,
                                             unsigned count);

struct Repunit3Correspondence {
    Natural x;      // (z - 1) / 2
    Natural value;  // x^2 + x + 1 = (z^2 + 3) / 4
    bool degenerate = false;  // x <= 1: not a genuine repunit base
};

// present exactly when z is odd (z >= 0 required)
std::optional<Repunit3Correspondence> repunit3_correspondence(
    const PellSolution& s);

struct Eq23Product {
    Natural product;  // repunit(x1, 3) * repunit(x2, 3)
    Rational root;    // D r1 r2 / 4
    bool verified = false;    // root^2 == product, exactly
    bool degenerate = false;  // either side has x <= 1
};

// both solutions must share D and have odd z
Eq23Product eq23_product_square(const PellSolution& s1, const PellSolution& s2);

struct IrrationalityReport {
    Natural z_max;
    uint64_t checked = 0;
    std::vector<Natural> square_hits;  // z >= 2 with z^2 + 3 square: expected none
};

IrrationalityReport irrationality_check(const Natural& z_max);

// class-count rule bookkeeping (D <= some bound), for reports and tests
struct ClassCountEntry {
    Natural D;
    bool solvable = false;
    unsigned classes = 0;
    // expected count per the rules: 0 = no prediction (D = 1 mod 4), else 1/2
    unsigned predicted = 0;
    bool rule_ok = true;
};

ClassCountEntry class_count_entry(const Natural& D);

}  // namespace msl::pell
