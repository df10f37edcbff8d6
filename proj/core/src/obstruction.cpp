#include "homcode/obstruction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "homcode/builders.hpp"
#include "homcode/errors.hpp"
#include "homcode/homology.hpp"

namespace homcode {

namespace {

std::int64_t mod_pos_i64(std::int64_t v, std::int64_t d) {
    v %= d;
    return v < 0 ? v + d : v;
}

} // namespace

GroupElement zero_element(const FgAbelianGroup& g) {
    return GroupElement(static_cast<std::size_t>(g.generator_count()), 0);
}

GroupElement reduce_element(GroupElement x, const FgAbelianGroup& g) {
    if (static_cast<long>(x.size()) != g.generator_count())
        throw SpecError("group element has wrong coordinate count");
    for (std::size_t i = 0; i < g.torsion().size(); ++i) {
        auto& coord = x[g.free_rank() + i];
        coord = mod_pos_i64(coord, g.torsion()[i]);
    }
    return x;
}

GroupElement add_elements(const GroupElement& a, const GroupElement& b, const FgAbelianGroup& g) {
    GroupElement out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return reduce_element(std::move(out), g);
}

GroupElement scale_element(const GroupElement& a, std::int64_t s, const FgAbelianGroup& g) {
    GroupElement out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
    return reduce_element(std::move(out), g);
}

bool is_zero_element(const GroupElement& a) {
    for (auto v : a)
        if (v != 0) return false;
    return true;
}

std::int64_t element_degree(const GroupElement& a, const FgAbelianGroup& g) {
    std::int64_t deg = 0;
    for (long i = 0; i < g.free_rank(); ++i) deg += std::abs(a[i]);
    for (std::size_t i = 0; i < g.torsion().size(); ++i) {
        std::int64_t v = mod_pos_i64(a[g.free_rank() + i], g.torsion()[i]);
        deg += std::min(v, g.torsion()[i] - v);
    }
    return deg;
}

TransitionMap TransitionMap::identity(const FgAbelianGroup& g) {
    TransitionMap t;
    t.automorphism = IntMatrix::identity(g.generator_count());
    t.offset = zero_element(g);
    return t;
}

GroupElement TransitionMap::apply(const GroupElement& x, const FgAbelianGroup& g) const {
    const long n = g.generator_count();
    GroupElement out(n, 0);
    for (long r = 0; r < n; ++r) {
        std::int64_t acc = offset[r];
        for (long c = 0; c < n; ++c)
            acc += static_cast<std::int64_t>(automorphism.at(r, c)) * x[c];
        out[r] = acc;
    }
    return reduce_element(std::move(out), g);
}

bool TransitionMap::is_identity(const FgAbelianGroup& g) const {
    if (!is_zero_element(offset)) return false;
    return automorphism == IntMatrix::identity(g.generator_count());
}

GroupElement BundleSpec::reference_at(const std::string& gamma) const {
    auto it = reference_obstruction.find(gamma);
    return it == reference_obstruction.end() ? zero_element(group) : it->second;
}

const TransitionMap& BundleSpec::transition_at(const std::string& gamma,
                                               const std::string& beta) const {
    auto it = transitions.find({gamma, beta});
    if (it == transitions.end())
        throw SpecError("bundle spec has no transition for (" + gamma + ", " + beta + ")");
    return it->second;
}

std::int64_t ObstructionCochain::total_degree(const FgAbelianGroup& g) const {
    std::int64_t deg = 0;
    for (const auto& [cell, v] : values) deg += element_degree(v, g);
    return deg;
}

namespace {

// Signed crossings of the marked fiber point (sitting between quarter
// values 0 and 1) along the arc from angle a to angle b; pi jumps are
// routed through the arc containing quarter 1, matching the unfolding.
std::int64_t quarter_walk_crossings(std::int64_t a, std::int64_t b) {
    std::int64_t diff = mod_pos_i64(b - a, 4);
    if (diff == 0) return 0;
    auto up = [](std::int64_t from) { return from == 0 ? 1 : 0; };
    auto down = [](std::int64_t from) { return from == 1 ? -1 : 0; };
    if (diff == 1) return up(a);
    if (diff == 3) return down(a);
    // pi jump
    std::int64_t up_mid = mod_pos_i64(a + 1, 4);
    std::int64_t down_mid = mod_pos_i64(a - 1, 4);
    if (up_mid == 1 || up_mid == 2) return up(a) + up(up_mid);
    return down(a) + down(down_mid);
}

} // namespace

BundleSpec build_cube_tangent_bundle() {
    BundleSpec spec;
    spec.base = builders::sphere_cube();
    spec.k = 1;
    spec.group = FgAbelianGroup::integers(1);

    const std::vector<std::string> faces = {"F", "Ba", "L", "R", "T", "Bo"};
    // Rotation between trivializations, in quarter turns, from the unfolding
    // with F at the center of the side belt.
    auto set_theta = [&](const std::string& i, const std::string& j, std::int64_t q) {
        spec.theta_quarter_turns[{i, j}] = mod_pos_i64(q, 4);
        spec.theta_quarter_turns[{j, i}] = mod_pos_i64(-q, 4);
    };
    set_theta("F", "L", 0);
    set_theta("L", "Ba", 0);
    set_theta("Ba", "R", 0);
    set_theta("R", "F", 0);
    set_theta("F", "T", 0);
    set_theta("F", "Bo", 0);
    set_theta("L", "T", 1);
    set_theta("Ba", "T", 2);
    set_theta("R", "T", 3);
    set_theta("L", "Bo", 3);
    set_theta("Ba", "Bo", 2);
    set_theta("R", "Bo", 1);

    // Winding adjustments from re-identifying the marked point: only the
    // front<->top and front<->bottom changes of trivialization move it.
    for (const auto& i : faces)
        for (const auto& j : faces) {
            if (i == j) continue;
            std::int64_t tau = 0;
            if (i == "F" && (j == "T" || j == "Bo")) tau = -1;
            if ((i == "T" || i == "Bo") && j == "F") tau = 1;
            spec.tau_table[{i, j}] = tau;
        }

    // Explicit identity transitions for every (face, boundary edge) pair.
    for (const auto& face : faces)
        for (const auto& entry : spec.base.cell(face).boundary)
            spec.transitions[{face, entry.cell}] = TransitionMap::identity(spec.group);

    // Reference obstruction of the zero section: walk each face's boundary
    // loop reading the neighbour-to-face transition angles; the winding is
    // minus the marked-point crossing count. Comes out +1 on T and Bo, 0 on
    // the belt, total 2 = chi(S^2).
    for (const auto& face : faces) {
        const auto& loop = spec.base.cell(face).boundary;
        std::vector<std::int64_t> angles;
        for (const auto& entry : loop) {
            std::string neighbour;
            for (const auto& other : faces)
                if (other != face && spec.base.incidence(other, entry.cell) != 0)
                    neighbour = other;
            angles.push_back(spec.theta_quarter_turns.at({neighbour, face}));
        }
        std::int64_t crossings = 0;
        for (std::size_t i = 0; i < angles.size(); ++i)
            crossings += quarter_walk_crossings(angles[i], angles[(i + 1) % angles.size()]);
        if (crossings != 0) spec.reference_obstruction[face] = GroupElement{-crossings};
    }
    return spec;
}

BundleSpec trivial_bundle(const CellComplex& base, int k, const FgAbelianGroup& g) {
    if (k < 0 || k + 1 > base.dimension())
        throw std::out_of_range("bundle degree needs (k+1)-cells in the base");
    BundleSpec spec;
    spec.base = base;
    spec.k = k;
    spec.group = g;
    for (const auto& gamma : base.cells_of_dim(k + 1))
        for (const auto& beta : base.cells_of_dim(k))
            if (base.incidence(gamma, beta) != 0)
                spec.transitions[{gamma, beta}] = TransitionMap::identity(g);
    return spec;
}

GroupElement adjusted_check(const BundleSpec& spec, const std::string& gamma,
                            const SectionCochain& a) {
    if (!spec.base.has_cell(gamma) || spec.base.cell(gamma).dim != spec.k + 1)
        throw SpecError("'" + gamma + "' is not a (k+1)-cell of the base");
    GroupElement s = spec.reference_at(gamma);
    for (const auto& beta : spec.base.cells_of_dim(spec.k)) {
        std::int64_t o = static_cast<std::int64_t>(spec.base.incidence(gamma, beta));
        if (o == 0) continue;
        auto it = a.find(beta);
        GroupElement value = it == a.end() ? zero_element(spec.group) : it->second;
        GroupElement transported = spec.transition_at(gamma, beta).apply(value, spec.group);
        s = add_elements(s, scale_element(transported, o, spec.group), spec.group);
    }
    return s;
}

ObstructionCochain evaluate_checks(const BundleSpec& spec, const SectionCochain& a) {
    ObstructionCochain out;
    out.degree = spec.k + 1;
    for (const auto& gamma : spec.base.cells_of_dim(spec.k + 1)) {
        GroupElement s = adjusted_check(spec, gamma, a);
        if (!is_zero_element(s)) out.values[gamma] = std::move(s);
    }
    return out;
}

CocycleCheck obstruction_is_cocycle(const BundleSpec& spec) {
    CocycleCheck result;
    const int eta_dim = spec.k + 2;
    if (eta_dim > spec.base.dimension()) return result; // vacuously a cocycle
    for (const auto& eta : spec.base.cells_of_dim(eta_dim)) {
        GroupElement acc = zero_element(spec.group);
        for (const auto& gamma : spec.base.cells_of_dim(spec.k + 1)) {
            std::int64_t o = static_cast<std::int64_t>(spec.base.incidence(eta, gamma));
            if (o == 0) continue;
            acc = add_elements(acc, scale_element(spec.reference_at(gamma), o, spec.group),
                               spec.group);
        }
        if (!is_zero_element(acc)) {
            result.ok = false;
            result.witness = eta;
            return result;
        }
    }
    return result;
}

namespace {

struct SearchContext {
    const BundleSpec* spec = nullptr;
    std::vector<std::string> cells;  // assignment order
    std::vector<std::string> checks; // (k+1)-cells
    std::vector<std::vector<std::int64_t>> candidate_values; // per coordinate
    std::vector<std::int64_t> target_totals; // sum of f per coordinate
    bool telescoping = false; // check totals are section-independent

    std::int64_t best_degree = -1;
    SectionCochain best_section;
    std::int64_t visited = 0;
    std::int64_t cap = 0;
    bool exhausted = false;
};

std::int64_t tuple_degree(const std::vector<std::int64_t>& v, const FgAbelianGroup& g) {
    GroupElement e(v.begin(), v.end());
    return element_degree(reduce_element(std::move(e), g), g);
}

void search_dfs(SearchContext& ctx, std::size_t cell_index, SectionCochain& current,
                std::vector<int>& remaining_edges, std::int64_t completed_degree,
                const std::vector<std::int64_t>& completed_signed) {
    if (ctx.exhausted) return;
    if (++ctx.visited > ctx.cap) {
        ctx.exhausted = true;
        return;
    }
    if (ctx.best_degree >= 0) {
        std::int64_t bound = completed_degree;
        if (ctx.telescoping) {
            std::vector<std::int64_t> rest(ctx.target_totals.size());
            for (std::size_t i = 0; i < rest.size(); ++i)
                rest[i] = ctx.target_totals[i] - completed_signed[i];
            bound += tuple_degree(rest, ctx.spec->group);
        }
        if (bound >= ctx.best_degree) return;
    }
    if (cell_index == ctx.cells.size()) {
        ctx.best_degree = completed_degree;
        ctx.best_section = current;
        return;
    }

    const std::string& cell = ctx.cells[cell_index];
    const long gens = ctx.spec->group.generator_count();
    std::vector<std::size_t> odometer(gens, 0);
    while (!ctx.exhausted) {
        GroupElement value(gens);
        for (long i = 0; i < gens; ++i) value[i] = ctx.candidate_values[i][odometer[i]];
        if (is_zero_element(value)) {
            current.erase(cell);
        } else {
            current[cell] = value;
        }

        std::int64_t new_degree = completed_degree;
        std::vector<std::int64_t> new_signed = completed_signed;
        std::vector<std::size_t> decremented;
        for (std::size_t ci = 0; ci < ctx.checks.size(); ++ci) {
            if (remaining_edges[ci] == 0) continue;
            if (ctx.spec->base.incidence(ctx.checks[ci], cell) == 0) continue;
            decremented.push_back(ci);
            if (--remaining_edges[ci] == 0) {
                GroupElement s = adjusted_check(*ctx.spec, ctx.checks[ci], current);
                new_degree += element_degree(s, ctx.spec->group);
                for (long i = 0; i < gens; ++i) new_signed[i] += s[i];
            }
        }
        search_dfs(ctx, cell_index + 1, current, remaining_edges, new_degree, new_signed);
        for (auto ci : decremented) ++remaining_edges[ci];

        long i = gens - 1;
        while (i >= 0 && odometer[i] + 1 == ctx.candidate_values[i].size()) {
            odometer[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++odometer[i];
    }
    current.erase(cell);
}

} // namespace

ViolationSearchResult minimal_violation_search(const BundleSpec& spec,
                                               const SearchLimits& limits) {
    const FgAbelianGroup& g = spec.group;
    const long gens = g.generator_count();

    SearchContext ctx;
    ctx.spec = &spec;
    ctx.cells = spec.base.cells_of_dim(spec.k);
    ctx.checks = spec.base.cells_of_dim(spec.k + 1);
    ctx.cap = limits.config_cap;

    // Candidate values per coordinate, zero first so the zero section wins
    // ties; free coordinates range over [-range, range] with the default
    // range 2 * max |f|.
    std::int64_t max_f = 0;
    for (const auto& [cell, v] : spec.reference_obstruction)
        for (auto coord : v) max_f = std::max(max_f, std::abs(coord));
    std::int64_t range = limits.free_value_range.value_or(std::max<std::int64_t>(1, 2 * max_f));
    for (long i = 0; i < gens; ++i) {
        std::vector<std::int64_t> vals{0};
        if (i < g.free_rank()) {
            for (std::int64_t v = 1; v <= range; ++v) {
                vals.push_back(v);
                vals.push_back(-v);
            }
        } else {
            std::int64_t d = g.torsion()[i - g.free_rank()];
            for (std::int64_t v = 1; v < d; ++v) vals.push_back(v);
        }
        ctx.candidate_values.push_back(std::move(vals));
    }

    // The gauge bound applies when transitions are identities and every
    // k-cell's oriented check memberships cancel; then sum_gamma s_gamma is
    // the same for every section.
    ctx.telescoping = true;
    for (const auto& [key, t] : spec.transitions)
        if (!t.is_identity(g)) ctx.telescoping = false;
    if (ctx.telescoping)
        for (const auto& beta : ctx.cells) {
            Int total = 0;
            for (const auto& gamma : ctx.checks) total += spec.base.incidence(gamma, beta);
            if (total != 0) {
                ctx.telescoping = false;
                break;
            }
        }
    ctx.target_totals.assign(gens, 0);
    for (const auto& gamma : ctx.checks) {
        GroupElement f = spec.reference_at(gamma);
        for (long i = 0; i < gens; ++i) ctx.target_totals[i] += f[i];
    }

    // Assign cells in an order that completes checks early; ties fall back
    // to the lexicographic order.
    {
        std::map<std::string, int> remaining;
        for (const auto& gamma : ctx.checks) {
            int count = 0;
            for (const auto& beta : ctx.cells)
                if (spec.base.incidence(gamma, beta) != 0) ++count;
            remaining[gamma] = count;
        }
        std::vector<std::string> ordered;
        std::vector<std::string> pool = ctx.cells;
        while (!pool.empty()) {
            std::string pick;
            int best_score = std::numeric_limits<int>::min();
            for (const auto& beta : pool) {
                int score = std::numeric_limits<int>::min();
                for (const auto& gamma : ctx.checks)
                    if (spec.base.incidence(gamma, beta) != 0)
                        score = std::max(score, -remaining[gamma]);
                if (score > best_score) {
                    best_score = score;
                    pick = beta;
                }
            }
            if (pick.empty()) pick = pool.front(); // cells on no check at all
            ordered.push_back(pick);
            pool.erase(std::find(pool.begin(), pool.end(), pick));
            for (const auto& gamma : ctx.checks)
                if (spec.base.incidence(gamma, pick) != 0) --remaining[gamma];
        }
        ctx.cells = std::move(ordered);
    }

    std::vector<int> remaining_edges;
    for (const auto& gamma : ctx.checks) {
        int count = 0;
        for (const auto& beta : ctx.cells)
            if (spec.base.incidence(gamma, beta) != 0) ++count;
        remaining_edges.push_back(count);
    }
    SectionCochain current;
    std::vector<std::int64_t> signed_start(gens, 0);
    std::int64_t start_degree = 0;
    // Checks touching no k-cell are constant; fold them in up front.
    for (std::size_t ci = 0; ci < ctx.checks.size(); ++ci)
        if (remaining_edges[ci] == 0) {
            GroupElement s = adjusted_check(spec, ctx.checks[ci], current);
            start_degree += element_degree(s, g);
            for (long i = 0; i < gens; ++i) signed_start[i] += s[i];
        }
    search_dfs(ctx, 0, current, remaining_edges, start_degree, signed_start);

    ViolationSearchResult result;
    result.section = ctx.best_section;
    result.obstruction = evaluate_checks(spec, ctx.best_section);
    result.violated_cells = result.obstruction.violated_cells();
    result.total_degree = result.obstruction.total_degree(g);
    result.exhausted_cap = ctx.exhausted;
    return result;
}

std::map<std::pair<std::string, std::string>, std::int64_t> sk_bundle_tau(
    const std::vector<SkCrossingRecord>& records) {
    std::map<std::pair<std::string, std::string>, std::int64_t> table;
    for (const auto& r : records)
        table[{r.cell, r.transition}] = (r.crossing_cells.size() % 2 == 1) ? r.orientation : 0;
    return table;
}

SectionCochain v_obstr_action(const BundleSpec& spec, const std::string& alpha,
                              const GroupElement& g, const SectionCochain& a) {
    if (!spec.base.has_cell(alpha) || spec.base.cell(alpha).dim != spec.k - 1)
        throw SpecError("'" + alpha + "' is not a (k-1)-cell of the base");
    SectionCochain out = a;
    for (const auto& beta : spec.base.cells_of_dim(spec.k)) {
        std::int64_t o = static_cast<std::int64_t>(spec.base.incidence(beta, alpha));
        if (o == 0) continue;
        GroupElement current = out.count(beta) ? out.at(beta) : zero_element(spec.group);
        GroupElement shifted = add_elements(current, scale_element(g, o, spec.group), spec.group);
        if (is_zero_element(shifted)) {
            out.erase(beta);
        } else {
            out[beta] = shifted;
        }
    }
    return out;
}

QuotientResult quotient_code_space(const CellComplex& base, int k, const FgAbelianGroup& g,
                                   std::int64_t m) {
    if (m < 2) throw std::invalid_argument("quotient modulus must be >= 2");
    QuotientResult result;
    FgAbelianGroup hk = cohomology(base, k, g);
    FgAbelianGroup hk1 = cohomology(base, k + 1, g);
    result.tensor_part = hk.tensor_with_cyclic(m);
    result.tor_part = hk1.tor_with_cyclic(m);
    auto coprime_to_torsion = [&](std::int64_t candidate) {
        for (auto t : hk1.torsion())
            if (std::gcd(candidate, t) != 1) return false;
        return true;
    };
    result.m_coprime_to_torsion = coprime_to_torsion(m);
    for (std::int64_t candidate = 2; candidate <= 12; ++candidate)
        if (coprime_to_torsion(candidate)) result.coprime_suggestions.push_back(candidate);
    return result;
}

double obstruction_energy(const BundleSpec& spec, const ObstructionCochain& s,
                          double irrational_r) {
    double energy = 0;
    const FgAbelianGroup& g = spec.group;
    for (const auto& [cell, v] : s.values) {
        for (long i = 0; i < g.free_rank(); ++i)
            energy += 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * irrational_r *
                                           static_cast<double>(v[i]));
        for (std::size_t i = 0; i < g.torsion().size(); ++i)
            energy += 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi *
                                           static_cast<double>(v[g.free_rank() + i]) /
                                           static_cast<double>(g.torsion()[i]));
    }
    return energy;
}

} // namespace homcode
