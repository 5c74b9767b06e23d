#include "msl/spin_structures.hpp"

#include <algorithm>
#include <bit>

namespace msl::spin {

namespace {

void check_genus(unsigned g, unsigned cap) {
    if (g < 1 || g > cap) throw std::domain_error("spin: genus out of range");
}

// label <-> (xi', xi'') bit pair
constexpr uint8_t label_prime_bit(HandleLabel l) {
    return (l == HandleLabel::odd || l == HandleLabel::e1) ? 1 : 0;
}
constexpr uint8_t label_dprime_bit(HandleLabel l) {
    return (l == HandleLabel::odd || l == HandleLabel::e2) ? 1 : 0;
}

HandleLabel label_from_bits(uint8_t prime, uint8_t dprime) {
    if (prime && dprime) return HandleLabel::odd;
    if (prime) return HandleLabel::e1;
    if (dprime) return HandleLabel::e2;
    return HandleLabel::e3;
}

uint64_t pow3(unsigned g) {
    uint64_t r = 1;
    while (g--) r *= 3;
    return r;
}

}  // namespace

unsigned SpinStructure::parity() const {
    return std::popcount(xi_prime & xi_dprime) & 1u;
}

uint64_t SpinStructure::index() const {
    return (uint64_t(xi_prime) << g) | xi_dprime;
}

HandleLabel handle_label(const SpinStructure& s, unsigned handle) {
    if (handle >= s.g) throw std::domain_error("handle out of range");
    return label_from_bits((s.xi_prime >> handle) & 1u,
                           (s.xi_dprime >> handle) & 1u);
}

SpinStructure from_labels(const std::vector<HandleLabel>& labels) {
    SpinStructure s;
    s.g = static_cast<unsigned>(labels.size());
    check_genus(s.g, kMaxEnumerationGenus);
    for (unsigned i = 0; i < s.g; ++i) {
        s.xi_prime |= uint32_t(label_prime_bit(labels[i])) << i;
        s.xi_dprime |= uint32_t(label_dprime_bit(labels[i])) << i;
    }
    return s;
}

std::vector<SpinStructure> enumerate(unsigned g) {
    check_genus(g, kMaxEnumerationGenus);
    const uint32_t top = 1u << g;
    std::vector<SpinStructure> out;
    out.reserve(uint64_t(top) * top);
    for (uint32_t xp = 0; xp < top; ++xp)
        for (uint32_t xd = 0; xd < top; ++xd)
            out.push_back({g, xp, xd});
    return out;
}

ParityCount count_by_parity(unsigned g) {
    if (g < 1) throw std::domain_error("count_by_parity: g >= 1");
    Natural half = Natural(1) << (g - 1);
    Natural full = Natural(1) << g;
    return {half * (full + 1), half * (full - 1)};
}

Natural eq5_binomial_sum(unsigned g) {
    if (g < 1) throw std::domain_error("eq5_binomial_sum: g >= 1");
    Natural sum = 0;
    for (unsigned j = 0; j <= g; j += 2) {
        Natural binom;
        mpz_bin_uiui(binom.get_mpz_t(), g, j);
        sum += binom * arith::pow_ui(3, j);
    }
    return sum;
}

std::vector<SpinStructure> ramond_odd(unsigned g) {
    check_genus(g, kMaxEnumerationGenus);
    const uint32_t all = (1u << g) - 1;
    std::vector<SpinStructure> out;
    out.reserve(1u << (g - 1));
    // xi' = 1...1; handles are (++) where xi'' is set, (+-) elsewhere,
    // so the parity is the popcount of xi''
    for (uint32_t xd = 0; xd <= all; ++xd)
        if (std::popcount(xd) & 1u) out.push_back({g, all, xd});
    return out;
}

HandleTransformation HandleTransformation::identity(unsigned g) {
    check_genus(g, kMaxEnumerationGenus);
    HandleTransformation t;
    t.g = g;
    t.perms.assign(g, {0, 1, 2});
    return t;
}

unsigned HandleTransformation::support_size() const {
    unsigned n = 0;
    for (const auto& p : perms)
        if (p != std::array<uint8_t, 3>{0, 1, 2}) ++n;
    return n;
}

bool HandleTransformation::moves_e1_on_support() const {
    for (const auto& p : perms)
        if (p != std::array<uint8_t, 3>{0, 1, 2} && p[0] == 0) return false;
    return true;
}

HandleTransformation t_generator(unsigned g, unsigned handle) {
    auto t = HandleTransformation::identity(g);
    if (handle >= g) throw std::domain_error("handle out of range");
    t.perms[handle] = {0, 2, 1};  // swap e2, e3
    return t;
}

HandleTransformation s_generator(unsigned g, unsigned handle) {
    auto t = HandleTransformation::identity(g);
    if (handle >= g) throw std::domain_error("handle out of range");
    t.perms[handle] = {1, 0, 2};  // swap e1, e2
    return t;
}

HandleTransformation compose(const HandleTransformation& first,
                             const HandleTransformation& second) {
    if (first.g != second.g) throw std::domain_error("genus mismatch");
    HandleTransformation t = HandleTransformation::identity(first.g);
    for (unsigned i = 0; i < first.g; ++i)
        for (uint8_t k = 0; k < 3; ++k)
            t.perms[i][k] = second.perms[i][first.perms[i][k]];
    return t;
}

SpinStructure apply(const HandleTransformation& t, const SpinStructure& s) {
    if (t.g != s.g) throw std::domain_error("apply: genus mismatch");
    SpinStructure out;
    out.g = s.g;
    for (unsigned i = 0; i < s.g; ++i) {
        HandleLabel l = handle_label(s, i);
        if (l != HandleLabel::odd) {
            uint8_t k = static_cast<uint8_t>(l) - 1;
            l = static_cast<HandleLabel>(t.perms[i][k] + 1);
        }
        out.xi_prime |= uint32_t(label_prime_bit(l)) << i;
        out.xi_dprime |= uint32_t(label_dprime_bit(l)) << i;
    }
    return out;
}

namespace {

// Effective action of a per-handle product on the Ramond sector: only the
// image of e1 per handle matters. v[i] in {0,1,2} = image label e1/e2/e3.
// The image set of R_o under the map v, as structure indices.
std::vector<uint64_t> image_of_ramond_odd(unsigned g,
                                          const std::vector<uint8_t>& v) {
    const uint32_t all = (1u << g) - 1;
    std::vector<uint64_t> idx;
    idx.reserve(1u << (g - 1));
    for (uint32_t xd = 0; xd <= all; ++xd) {
        if (!(std::popcount(xd) & 1u)) continue;  // need odd # of (++)
        // handles with xd bit set stay (++); the rest become v[i]
        uint32_t xp = 0, xdd = 0;
        for (unsigned i = 0; i < g; ++i) {
            if (xd >> i & 1u) {
                xp |= 1u << i;
                xdd |= 1u << i;
            } else {
                HandleLabel l = static_cast<HandleLabel>(v[i] + 1);
                xp |= uint32_t(label_prime_bit(l)) << i;
                xdd |= uint32_t(label_dprime_bit(l)) << i;
            }
        }
        idx.push_back((uint64_t(xp) << g) | xdd);
    }
    return idx;
}

}  // namespace

OrbitCoverReport orbit_cover_check(unsigned g) {
    check_genus(g, kMaxOrbitGenus);
    if (g < 2) throw std::domain_error("orbit_cover_check: g >= 2");

    OrbitCoverReport rep;
    rep.g = g;
    rep.ramond_odd_size = 1u << (g - 1);
    rep.odd_total = (uint64_t(1) << (g - 1)) * ((uint64_t(1) << g) - 1);
    rep.paper_rho_count =
        arith::pow_ui(3, g) - arith::pow_ui(2, g) - 1;
    rep.zero_overlap_needed = (uint64_t(1) << g) - 2;

    const uint64_t all_plus_index =
        SpinStructure{g, (1u << g) - 1, (1u << g) - 1}.index();
    const uint64_t maps = pow3(g);
    std::vector<bool> covered(uint64_t(1) << (2 * g), false);
    std::vector<bool> covered_rho(uint64_t(1) << (2 * g), false);

    // R_o itself
    for (uint64_t i : image_of_ramond_odd(g, std::vector<uint8_t>(g, 0))) {
        covered[i] = true;
        covered_rho[i] = true;
    }

    std::vector<std::vector<uint64_t>> no_e1_images;
    std::vector<uint8_t> v(g, 0);
    for (uint64_t code = 1; code < maps; ++code) {
        uint64_t c = code;
        bool has_e1 = false;
        for (unsigned i = 0; i < g; ++i) {
            v[i] = static_cast<uint8_t>(c % 3);
            if (v[i] == 0) has_e1 = true;
            c /= 3;
        }
        auto img = image_of_ramond_odd(g, v);
        rep.generated_maps += 1;
        rep.total_image_incidences += img.size();
        bool contains_fixed = false;
        for (uint64_t i : img) {
            covered[i] = true;
            if (has_e1) covered_rho[i] = true;
            if (i == all_plus_index) contains_fixed = true;
        }
        if (contains_fixed) rep.images_containing_all_plus += 1;
        if (has_e1)
            rep.maps_keeping_e1 += 1;
        else
            no_e1_images.push_back(std::move(img));
    }

    uint64_t covered_odd = 0, covered_rho_odd = 0;
    for (const auto& s : enumerate(g)) {
        if (s.parity() != 1) continue;
        if (covered[s.index()]) ++covered_odd;
        if (covered_rho[s.index()]) ++covered_rho_odd;
    }
    rep.union_covers_all_odd = (covered_odd == rep.odd_total);
    rep.rho_family_covers_all_odd = (covered_rho_odd == rep.odd_total);

    // greedy search for a pairwise-disjoint family among the no-e1 maps
    // (their images are automatically disjoint from R_o when g is even)
    std::vector<std::vector<uint64_t>> family;
    if (g % 2 == 0) {
        for (auto& img : no_e1_images) {
            bool ok = true;
            for (const auto& kept : family) {
                for (uint64_t i : img) {
                    if (std::find(kept.begin(), kept.end(), i) != kept.end()) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
            if (ok) family.push_back(std::move(img));
        }
    }
    rep.zero_overlap_family = family.size();
    rep.zero_overlap_cover_found =
        (rep.zero_overlap_family == rep.zero_overlap_needed);
    return rep;
}

AlteredUnchangedReport altered_unchanged_counts(
    unsigned g, unsigned ell, const HandleTransformation& t) {
    check_genus(g, 10);
    if (t.g != g) throw std::domain_error("genus mismatch");
    if (t.support_size() != ell)
        throw std::domain_error("support size does not match ell");

    AlteredUnchangedReport rep;
    rep.g = g;
    rep.ell = ell;
    rep.support_moves_e1 = t.moves_e1_on_support();

    Natural altered = 0, unchanged = 0, unchanged_ambient = 0;
    for (const auto& s : ramond_odd(g)) {
        if (apply(t, s) == s)
            unchanged += 1;
        else
            altered += 1;
    }
    // full Ramond sector: xi' all ones, any xi''
    const uint32_t all = (1u << g) - 1;
    for (uint32_t xd = 0; xd <= all; ++xd) {
        SpinStructure s{g, all, xd};
        if (apply(t, s) == s) unchanged_ambient += 1;
    }
    rep.altered = altered;
    rep.unchanged = unchanged;
    rep.unchanged_ambient = unchanged_ambient;
    rep.paper_altered_formula =
        arith::pow_ui(2, g - ell) * (arith::pow_ui(2, ell >= 1 ? ell - 1 : 0) - 1);
    rep.paper_unchanged_formula = arith::pow_ui(2, g - ell);
    rep.matches_paper_altered = (rep.altered == rep.paper_altered_formula);
    rep.matches_paper_unchanged = (rep.unchanged == rep.paper_unchanged_formula);
    return rep;
}

unsigned quadratic_refinement(const SpinStructure& s, uint32_t t_prime,
                              uint32_t t_dprime) {
    unsigned a = std::popcount((t_prime ^ s.xi_prime) & (t_dprime ^ s.xi_dprime));
    unsigned b = std::popcount(s.xi_prime & s.xi_dprime);
    return (a + b) & 1u;
}

unsigned intersection_form(uint32_t a_prime, uint32_t a_dprime,
                           uint32_t b_prime, uint32_t b_dprime) {
    return (std::popcount(a_prime & b_dprime) +
            std::popcount(a_dprime & b_prime)) &
           1u;
}

}  // namespace msl::spin
