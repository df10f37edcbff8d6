#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcode/abelian.hpp"
#include "homcode/cell_complex.hpp"
#include "homcode/int_matrix.hpp"

namespace homcode {

// An element of a finitely generated abelian group G, as a coordinate tuple
// over G's generators: free coordinates first, then one coordinate per
// torsion factor (reduced into [0, d_i)).
using GroupElement = std::vector<std::int64_t>;

GroupElement zero_element(const FgAbelianGroup& g);
GroupElement reduce_element(GroupElement x, const FgAbelianGroup& g);
GroupElement add_elements(const GroupElement& a, const GroupElement& b, const FgAbelianGroup& g);
GroupElement scale_element(const GroupElement& a, std::int64_t s, const FgAbelianGroup& g);
bool is_zero_element(const GroupElement& a);
// Unit-violation count of a value: |v| on free coordinates, min(v, d-v) on
// torsion coordinates (a degree-l violation counts as l degree-1 ones).
std::int64_t element_degree(const GroupElement& a, const FgAbelianGroup& g);

/**
 * The change of trivialization applied to a k-cell's encoded value when a
 * (k+1)-cell reads it: x -> automorphism * x + offset. The automorphism
 * must be invertible over G.
 */
struct TransitionMap {
    IntMatrix automorphism; // generator_count x generator_count
    GroupElement offset;

    static TransitionMap identity(const FgAbelianGroup& g);
    GroupElement apply(const GroupElement& x, const FgAbelianGroup& g) const;
    bool is_identity(const FgAbelianGroup& g) const;
};

/**
 * A fiber-bundle check system over a base complex: coefficient group
 * G = pi_k(F), one transition per ((k+1)-cell, boundary k-cell) incidence,
 * and the reference obstruction cochain f (the check values of the zero
 * section). Transitions are explicit caller data; the library never infers
 * trivializations from geometry.
 */
struct BundleSpec {
    CellComplex base;
    int k = 1;
    FgAbelianGroup group;
    std::map<std::pair<std::string, std::string>, TransitionMap> transitions;
    std::map<std::string, GroupElement> reference_obstruction;

    // Cube-example metadata: transition offsets tau and rotation angles
    // theta (in quarter turns) per ordered face pair, when applicable.
    std::map<std::pair<std::string, std::string>, std::int64_t> tau_table;
    std::map<std::pair<std::string, std::string>, std::int64_t> theta_quarter_turns;

    GroupElement reference_at(const std::string& gamma) const;
    const TransitionMap& transition_at(const std::string& gamma, const std::string& beta) const;
};

// k-cell -> encoded section value; missing cells read as zero.
using SectionCochain = std::map<std::string, GroupElement>;

struct ObstructionCochain {
    int degree = 2;
    std::map<std::string, GroupElement> values; // only nonzero check values

    long violated_cells() const { return static_cast<long>(values.size()); }
    std::int64_t total_degree(const FgAbelianGroup& g) const;
};

/**
 * The tangent circle bundle of the cube-shaped sphere. Transitions carry
 * identity automorphisms; the paper's per-face-pair rotation table theta and
 * winding adjustments tau are kept as metadata, and the reference
 * obstruction is derived from the theta table as the net clockwise winding
 * of the transition angles around each face boundary: +1 on the top and
 * bottom faces, 0 on the side belt, total 2 = chi(S^2).
 */
BundleSpec build_cube_tangent_bundle();

// All-identity transitions, zero reference obstruction: the checks reduce
// to plain coboundary syndromes.
BundleSpec trivial_bundle(const CellComplex& base, int k, const FgAbelianGroup& g);

// s_gamma(a) = sum_{beta in bd(gamma)} O(gamma,beta) * t_{gamma,beta}(a_beta)
//            + f_gamma, evaluated in G. Violated iff nonzero.
GroupElement adjusted_check(const BundleSpec& spec, const std::string& gamma,
                            const SectionCochain& a);

// All nonzero checks of a section.
ObstructionCochain evaluate_checks(const BundleSpec& spec, const SectionCochain& a);

struct CocycleCheck {
    bool ok = true;
    std::optional<std::string> witness; // violating (k+2)-cell
};

// delta f = 0 on every (k+2)-cell (vacuous when none exist). Valid for
// identity-automorphism transitions; value transport across higher cells is
// not part of the data model.
CocycleCheck obstruction_is_cocycle(const BundleSpec& spec);

struct SearchLimits {
    // Per-cell range for free coordinates: values in [-range, range].
    // Defaults to max(1, 2 * max |f|) when unset.
    std::optional<std::int64_t> free_value_range;
    // Abort after this many visited configurations per factor.
    std::int64_t config_cap = 500'000'000;
};

struct ViolationSearchResult {
    SectionCochain section;
    ObstructionCochain obstruction;
    long violated_cells = 0;
    std::int64_t total_degree = 0;
    bool exhausted_cap = false; // best-found-so-far when true
};

/**
 * Branch-and-bound search for the section minimizing the total violation
 * degree sum |s_gamma| (unit-violation count; a degree-l violation counts
 * as l degree-1 violations), ties resolved toward the first candidate in
 * enumeration order (zero first, so the zero section wins among equals).
 * Factors of G separate, so each coordinate is searched independently.
 */
ViolationSearchResult minimal_violation_search(const BundleSpec& spec,
                                               const SearchLimits& limits = {});

/**
 * Crossing-parity rule for S^k-bundle adjustments: tau = orientation sign
 * when the number of (k-1)-cells crossing the regular value is odd, else 0.
 */
struct SkCrossingRecord {
    std::string cell;                         // the k-cell beta
    std::string transition;                   // label of the target trivialization
    std::vector<std::string> crossing_cells;  // (k-1)-cells crossing the regular value
    int orientation = 1;                      // O(beta, F)
};

std::map<std::pair<std::string, std::string>, std::int64_t> sk_bundle_tau(
    const std::vector<SkCrossingRecord>& records);

// Homotopy re-sectioning at a (k-1)-cell: adds the coboundary of the
// G-valued cochain supported at alpha with value g. Check totals over
// closed fundamental cycles are unchanged.
SectionCochain v_obstr_action(const BundleSpec& spec, const std::string& alpha,
                              const GroupElement& g, const SectionCochain& a);

struct QuotientResult {
    FgAbelianGroup tensor_part; // H^k(B, G) (x) Z_m
    FgAbelianGroup tor_part;    // Tor_1(H^{k+1}(B, G), Z_m)
    bool m_coprime_to_torsion = false;
    std::vector<std::int64_t> coprime_suggestions; // small coprime moduli
};

// Universal-coefficient quotient of the code space by Z_m, m >= 2.
QuotientResult quotient_code_space(const CellComplex& base, int k, const FgAbelianGroup& g,
                                   std::int64_t m);

// Energy functional of an obstruction cochain: finite factors contribute
// 2 - 2cos(2 pi v / d_i), free factors 2 - 2cos(2 pi r v) with the
// configured irrational proxy r (affects energies only, never which checks
// are satisfied).
double obstruction_energy(const BundleSpec& spec, const ObstructionCochain& s,
                          double irrational_r = 0.41421356237309503);

} // namespace homcode
