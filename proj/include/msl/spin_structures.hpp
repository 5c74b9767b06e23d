#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "msl/exact_arith.hpp"

namespace msl::spin {

// A theta characteristic on a genus-g surface: one sign pair per handle,
// encoded with + <-> 1. Parity (the Arf invariant) is
// sum_i xi'_i xi''_i (mod 2), so the odd genus-one structure is (++).
struct SpinStructure {
    unsigned g = 1;
    uint32_t xi_prime = 0;   // bit i-1 holds xi'_i
    uint32_t xi_dprime = 0;  // bit i-1 holds xi''_i

    unsigned parity() const;  // 0 even, 1 odd
    bool operator==(const SpinStructure&) const = default;
    // dense index in [0, 4^g): used for bitset bookkeeping
    uint64_t index() const;
};

// The four genus-one structures as handle labels. e1 = (+-) is the even
// label occurring in the Ramond sector.
enum class HandleLabel : uint8_t { odd = 0, e1 = 1, e2 = 2, e3 = 3 };

HandleLabel handle_label(const SpinStructure& s, unsigned handle);
SpinStructure from_labels(const std::vector<HandleLabel>& labels);

inline constexpr unsigned kMaxEnumerationGenus = 12;
inline constexpr unsigned kMaxOrbitGenus = 8;

// all 2^{2g} structures, g <= 12
std::vector<SpinStructure> enumerate(unsigned g);

struct ParityCount {
    Natural even;  // 2^{g-1}(2^g + 1)
    Natural odd;   // 2^{g-1}(2^g - 1)
};
ParityCount count_by_parity(unsigned g);

// 1 + C(g,2) 3^2 + C(g,4) 3^4 + ...  (all even indices up to g)
//   = (4^g + (-2)^g) / 2
Natural eq5_binomial_sum(unsigned g);

// Ramond-sector structures (every handle odd or e1) of odd parity;
// cardinality 2^{g-1}
std::vector<SpinStructure> ramond_odd(unsigned g);

// Product of genus-one transformations: per handle a permutation of the
// three even labels, the odd label always fixed. perm[k] is the image of
// even label k (0 = e1, 1 = e2, 2 = e3).
struct HandleTransformation {
    unsigned g = 1;
    std::vector<std::array<uint8_t, 3>> perms;

    static HandleTransformation identity(unsigned g);
    unsigned support_size() const;
    bool moves_e1_on_support() const;
};

// genus-one generators acting on a single handle: T swaps e2 and e3
// (fixes e1), S swaps e1 and e2 (fixes e3); together they generate the
// full permutation group of the even labels
HandleTransformation t_generator(unsigned g, unsigned handle);
HandleTransformation s_generator(unsigned g, unsigned handle);
HandleTransformation compose(const HandleTransformation& first,
                             const HandleTransformation& second);

SpinStructure apply(const HandleTransformation& t, const SpinStructure& s);

struct OrbitCoverReport {
    unsigned g = 0;
    uint64_t ramond_odd_size = 0;   // 2^{g-1}
    uint64_t odd_total = 0;         // 2^{g-1}(2^g - 1)
    uint64_t generated_maps = 0;    // non-identity effective maps: 3^g - 1
    uint64_t maps_keeping_e1 = 0;   // paper's rho_r count: 3^g - 2^g - 1
    Natural paper_rho_count;        // 3^g - 2^g - 1, from the closed form
    bool union_covers_all_odd = false;
    // union restricted to the rho_r family (maps keeping e1 somewhere)
    bool rho_family_covers_all_odd = false;
    uint64_t images_containing_all_plus = 0;  // the fixed (++...++) structure
    uint64_t total_image_incidences = 0;      // sum over maps of |image|
    // sigma_r search: largest family of maps with pairwise disjoint images,
    // all disjoint from R_o; full cover needs 2^g - 2 of them
    uint64_t zero_overlap_family = 0;
    uint64_t zero_overlap_needed = 0;
    bool zero_overlap_cover_found = false;
};

OrbitCoverReport orbit_cover_check(unsigned g);

struct AlteredUnchangedReport {
    unsigned g = 0;
    unsigned ell = 0;
    Natural altered;             // # s in R_o with t(s) != s, by enumeration
    Natural unchanged;           // # s in R_o fixed by t
    Natural unchanged_ambient;   // same count over the full Ramond sector
    Natural paper_altered_formula;    // 2^{g-l}(2^{l-1} - 1)
    Natural paper_unchanged_formula;  // 2^{g-l}
    bool matches_paper_altered = false;
    bool matches_paper_unchanged = false;
    bool support_moves_e1 = false;
};

AlteredUnchangedReport altered_unchanged_counts(unsigned g, unsigned ell,
                                                const HandleTransformation& t);

// quadratic refinement attached to s, evaluated on a homology class
// (t', t''):  q(t) = sum (t'_i + xi'_i)(t''_i + xi''_i) - sum xi'_i xi''_i
unsigned quadratic_refinement(const SpinStructure& s, uint32_t t_prime,
                              uint32_t t_dprime);
// mod-2 intersection pairing of two homology classes
unsigned intersection_form(uint32_t a_prime, uint32_t a_dprime,
                           uint32_t b_prime, uint32_t b_dprime);

}  // namespace msl::spin
