#include "homcode/error_analysis.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>
#include <stdexcept>

#include "homcode/errors.hpp"
#include "homcode/homology.hpp"
#include "homcode/smith.hpp"

namespace homcode {

namespace {

std::int64_t mod_pos_i64(std::int64_t v, std::int64_t d) {
    v %= d;
    return v < 0 ? v + d : v;
}

void check_error_shape(const HomologicalCode& code, const ErrorConfig& e) {
    if (e.d != code.modulus()) throw SpecError("error modulus does not match code");
    if (!e.x_part.coeffs.empty() && e.x_part.degree != code.degree())
        throw SpecError("x_part degree does not match code degree");
    if (!e.z_part.coeffs.empty() && e.z_part.degree != code.degree())
        throw SpecError("z_part degree does not match code degree");
    for (const auto& [cell, v] : e.x_part.coeffs)
        if (!code.complex().has_cell(cell) || code.complex().cell(cell).dim != code.degree())
            throw SpecError("x_part entry '" + cell + "' is not a k-cell");
    for (const auto& [cell, v] : e.z_part.coeffs)
        if (!code.complex().has_cell(cell) || code.complex().cell(cell).dim != code.degree())
            throw SpecError("z_part entry '" + cell + "' is not a k-cell");
}

} // namespace

ErrorConfig ErrorConfig::plus(const ErrorConfig& other) const {
    ErrorConfig out = *this;
    for (const auto& [cell, v] : other.x_part.coeffs) out.x_part.add(cell, v);
    for (const auto& [cell, v] : other.z_part.coeffs) out.z_part.add(cell, v);
    out.x_part.reduce_mod(d);
    out.z_part.reduce_mod(d);
    return out;
}

Syndrome syndrome(const HomologicalCode& code, const ErrorConfig& e) {
    check_error_shape(code, e);
    const CellComplex& c = code.complex();
    const std::int64_t d = code.modulus();
    Syndrome s;
    for (const auto& alpha : c.cells_of_dim(code.degree() - 1)) {
        std::int64_t v = 0;
        for (const auto& [cell, value] : e.x_part.coeffs)
            v += static_cast<std::int64_t>(c.incidence(cell, alpha)) *
                 static_cast<std::int64_t>(value % d);
        v = mod_pos_i64(v, d);
        if (v != 0) s.v_violations[alpha] = v;
    }
    for (const auto& gamma : c.cells_of_dim(code.degree() + 1)) {
        std::int64_t v = 0;
        for (const auto& [cell, value] : e.z_part.coeffs)
            v += static_cast<std::int64_t>(c.incidence(gamma, cell)) *
                 static_cast<std::int64_t>(value % d);
        v = mod_pos_i64(v, d);
        if (v != 0) s.p_violations[gamma] = v;
    }
    return s;
}

namespace {

struct AdjacencyView {
    // check cell -> incident error-carrying cells with signs
    std::map<std::string, std::vector<std::pair<std::string, std::int64_t>>> by_check;
    // error cell -> its checks with signs
    std::map<std::string, std::vector<std::pair<std::string, std::int64_t>>> by_cell;
};

AdjacencyView chain_adjacency(const CellComplex& c, int k) {
    AdjacencyView view;
    for (const auto& alpha : c.cells_of_dim(k - 1))
        for (const auto& site : c.cells_of_dim(k)) {
            auto s = static_cast<std::int64_t>(c.incidence(site, alpha));
            if (s == 0) continue;
            view.by_check[alpha].push_back({site, s});
            view.by_cell[site].push_back({alpha, s});
        }
    return view;
}

AdjacencyView cochain_adjacency(const CellComplex& c, int k) {
    AdjacencyView view;
    for (const auto& gamma : c.cells_of_dim(k + 1))
        for (const auto& site : c.cells_of_dim(k)) {
            auto s = static_cast<std::int64_t>(c.incidence(gamma, site));
            if (s == 0) continue;
            view.by_check[gamma].push_back({site, s});
            view.by_cell[site].push_back({gamma, s});
        }
    return view;
}

std::vector<ErrorComponent> grow_components(const ChainVector& part, const AdjacencyView& adj,
                                            std::int64_t d, ErrorComponent::Kind kind) {
    std::map<std::string, std::int64_t> residual;
    for (const auto& [cell, v] : part.coeffs) {
        std::int64_t r = mod_pos_i64(static_cast<std::int64_t>(v % d), d);
        if (r != 0) residual[cell] = r;
    }

    auto sign_at = [&](const std::string& cell, const std::string& check) -> std::int64_t {
        auto it = adj.by_cell.find(cell);
        if (it == adj.by_cell.end()) return 0;
        for (const auto& [chk, s] : it->second)
            if (chk == check) return s;
        return 0;
    };

    std::vector<ErrorComponent> components;
    while (!residual.empty()) {
        // Seed at the lexicographically smallest remaining cell, oriented +1.
        auto seed = residual.begin()->first;
        std::map<std::string, int> orientation; // component cells -> +-1
        orientation[seed] = 1;
        if (--residual[seed] == 0) residual.erase(seed);

        std::set<std::string> frontier{seed};
        while (!frontier.empty()) {
            std::string cell = *frontier.begin();
            frontier.erase(frontier.begin());
            auto cell_checks = adj.by_cell.find(cell);
            if (cell_checks == adj.by_cell.end()) continue;
            for (const auto& [check, cell_sign] : cell_checks->second) {
                // Pseudo-manifold rule: at most two component cells share a
                // check, with cancelling oriented contributions.
                const auto& incident = adj.by_check.at(check);
                int in_component = 0;
                for (const auto& [other, s] : incident)
                    if (orientation.count(other)) ++in_component;
                if (in_component != 1) continue;
                for (const auto& [candidate, cand_sign] : incident) {
                    if (orientation.count(candidate)) continue;
                    auto rit = residual.find(candidate);
                    if (rit == residual.end()) continue;
                    int needed = static_cast<int>(-orientation[cell] * cell_sign * cand_sign);
                    // A +1 paste consumes one agreeing copy; a -1 paste
                    // re-expresses one copy as d-1 opposite copies, which is
                    // admitted only when it annihilates the cell.
                    if (needed == -1 && rit->second != d - 1) continue;
                    // Orientations must also cancel at every other check the
                    // candidate shares with the component.
                    bool consistent = true;
                    for (const auto& [chk2, s2] : adj.by_cell.at(candidate)) {
                        const auto& inc2 = adj.by_check.at(chk2);
                        int count2 = 0;
                        std::string member;
                        for (const auto& [other, s3] : inc2)
                            if (orientation.count(other)) {
                                ++count2;
                                member = other;
                            }
                        if (count2 > 1) {
                            consistent = false;
                            break;
                        }
                        if (count2 == 1 &&
                            needed * s2 != -orientation[member] * sign_at(member, chk2)) {
                            consistent = false;
                            break;
                        }
                    }
                    if (!consistent) continue;
                    orientation[candidate] = needed;
                    if (needed == 1) {
                        if (--rit->second == 0) residual.erase(rit);
                    } else {
                        residual.erase(rit); // r was d-1; absorbing zeroes it
                    }
                    frontier.insert(candidate);
                    break; // the shared check is now saturated
                }
            }
        }

        ErrorComponent comp;
        comp.kind = kind;
        for (const auto& [cell, sigma] : orientation)
            comp.support[cell] = mod_pos_i64(sigma, d);
        for (const auto& [cell, sigma] : orientation)
            for (const auto& [check, s] : adj.by_cell.at(cell)) {
                std::int64_t v = mod_pos_i64(sigma * s, d);
                if (v == 0) continue;
                auto [it, inserted] = comp.erb.emplace(check, v);
                if (!inserted) {
                    it->second = mod_pos_i64(it->second + v, d);
                    if (it->second == 0) comp.erb.erase(it);
                }
            }
        components.push_back(std::move(comp));
    }
    return components;
}

} // namespace

std::vector<ErrorComponent> decompose_error(const HomologicalCode& code, const ErrorConfig& e) {
    check_error_shape(code, e);
    const CellComplex& c = code.complex();
    const int k = code.degree();
    std::vector<ErrorComponent> out;
    auto v_components =
        grow_components(e.x_part, chain_adjacency(c, k), code.modulus(), ErrorComponent::Kind::V);
    auto p_components = grow_components(e.z_part, cochain_adjacency(c, k), code.modulus(),
                                        ErrorComponent::Kind::P);
    out.insert(out.end(), v_components.begin(), v_components.end());
    out.insert(out.end(), p_components.begin(), p_components.end());
    return out;
}

namespace {

// Shared machinery for increasing-weight exhaustive searches over sparse
// Z_d vectors with support in the code's sites.
struct WeightSearch {
    const std::vector<std::string>* sites;
    std::int64_t d;

    // Visit supports in lexicographic index order and values in odometer
    // order; `visit` returns true to stop the search.
    template <typename Visit>
    bool run(long weight, Visit&& visit) const {
        const long n = static_cast<long>(sites->size());
        if (weight > n) return false;
        std::vector<long> support(weight);
        for (long i = 0; i < weight; ++i) support[i] = i;
        while (true) {
            std::vector<std::int64_t> values(weight, 1);
            while (true) {
                if (visit(support, values)) return true;
                long j = weight - 1;
                while (j >= 0 && values[j] == d - 1) {
                    values[j] = 1;
                    --j;
                }
                if (j < 0) break;
                ++values[j];
            }
            // next combination
            long i = weight - 1;
            while (i >= 0 && support[i] == n - weight + i) --i;
            if (i < 0) return false;
            ++support[i];
            for (long j = i + 1; j < weight; ++j) support[j] = support[j - 1] + 1;
        }
    }
};

struct SystoleSide {
    IntMatrix cycle_matrix;    // candidate must be in its kernel mod d
    SnfResult boundary_snf;    // ... and not in this image mod d
    std::vector<std::string> cells;
};

std::optional<ChainVector> side_systole(const SystoleSide& side, std::int64_t d, long cap,
                                        int degree, long* found_weight) {
    WeightSearch search{&side.cells, d};
    const long n = static_cast<long>(side.cells.size());
    for (long w = 1; w <= std::min(cap, n); ++w) {
        ChainVector hit;
        bool stop = search.run(w, [&](const std::vector<long>& support,
                                      const std::vector<std::int64_t>& values) {
            // cycle test
            for (long r = 0; r < side.cycle_matrix.rows(); ++r) {
                Int acc = 0;
                for (long j = 0; j < w; ++j)
                    acc += side.cycle_matrix.at(r, support[j]) * values[j];
                if (acc % d != 0) return false;
            }
            std::vector<Int> vec(n);
            for (long j = 0; j < w; ++j) vec[support[j]] = values[j];
            if (solve_mod_with(side.boundary_snf, vec, d).has_value()) return false;
            hit = vector_to_chain(vec, side.cells, degree);
            return true;
        });
        if (stop) {
            *found_weight = w;
            return hit;
        }
    }
    return std::nullopt;
}

} // namespace

DistanceResult code_distance(const HomologicalCode& code, long cap) {
    if (cap < 1) throw std::invalid_argument("distance cap must be >= 1");
    DistanceResult result;
    if (code_dimension(code) == 1) {
        result.status = DistanceResult::Status::no_logicals;
        return result;
    }
    const CellComplex& c = code.complex();
    const int k = code.degree();
    const std::int64_t d = code.modulus();

    SystoleSide x_side{
        c.boundary_matrix(k),
        smith_normal_form(k < c.dimension() ? c.boundary_matrix(k + 1)
                                            : IntMatrix(c.cell_count(k), 0)),
        c.cells_of_dim(k)};
    SystoleSide z_side{
        c.coboundary_matrix(k),
        smith_normal_form(k > 0 ? c.coboundary_matrix(k - 1) : IntMatrix(c.cell_count(k), 0)),
        c.cells_of_dim(k)};

    long wx = 0, wz = 0;
    auto x_hit = side_systole(x_side, d, cap, k, &wx);
    auto z_hit = side_systole(z_side, d, cap, k, &wz);
    if (x_hit) result.x_systole = wx;
    if (z_hit) result.z_systole = wz;
    if (!x_hit && !z_hit) {
        result.status = DistanceResult::Status::lower_bound;
        result.value = cap + 1;
        return result;
    }
    result.status = DistanceResult::Status::exact;
    if (x_hit && (!z_hit || wx <= wz)) {
        result.value = wx;
        result.witness = x_hit;
        result.witness_side = 'X';
    } else {
        result.value = wz;
        result.witness = z_hit;
        result.witness_side = 'Z';
    }
    return result;
}

namespace {

std::optional<ChainVector> side_decode(const IntMatrix& check_matrix, const SnfResult& check_snf,
                                       const std::vector<std::string>& check_cells,
                                       const std::vector<std::string>& sites,
                                       const std::map<std::string, std::int64_t>& target,
                                       std::int64_t d, long cap, int degree) {
    std::vector<Int> rhs(check_cells.size());
    for (std::size_t i = 0; i < check_cells.size(); ++i) {
        auto it = target.find(check_cells[i]);
        rhs[i] = it == target.end() ? 0 : it->second;
    }
    if (!solve_mod_with(check_snf, rhs, d).has_value())
        throw SpecError("syndrome is not consistent with any error");
    if (target.empty()) {
        ChainVector zero;
        zero.degree = degree;
        return zero;
    }
    WeightSearch search{&sites, d};
    const long n = static_cast<long>(sites.size());
    for (long w = 1; w <= std::min(cap, n); ++w) {
        ChainVector hit;
        bool stop = search.run(
            w, [&](const std::vector<long>& support, const std::vector<std::int64_t>& values) {
                for (long r = 0; r < check_matrix.rows(); ++r) {
                    Int acc = -rhs[r];
                    for (long j = 0; j < w; ++j)
                        acc += check_matrix.at(r, support[j]) * values[j];
                    if (acc % d != 0) return false;
                }
                std::vector<Int> vec(n);
                for (long j = 0; j < w; ++j) vec[support[j]] = values[j];
                hit = vector_to_chain(vec, sites, degree);
                return true;
            });
        if (stop) return hit;
    }
    return std::nullopt;
}

} // namespace

DecodeResult decode_min_weight(const HomologicalCode& code, const Syndrome& s, long cap) {
    if (cap < 0) throw std::invalid_argument("decode cap must be >= 0");
    const CellComplex& c = code.complex();
    const int k = code.degree();
    const std::int64_t d = code.modulus();

    DecodeResult result;
    result.correction.d = d;
    result.correction.x_part.degree = k;
    result.correction.z_part.degree = k;

    IntMatrix bd = c.boundary_matrix(k);
    auto x = side_decode(bd, smith_normal_form(bd), c.cells_of_dim(k - 1), c.cells_of_dim(k),
                         s.v_violations, d, cap, k);
    IntMatrix cb = c.coboundary_matrix(k);
    auto z = side_decode(cb, smith_normal_form(cb), c.cells_of_dim(k + 1), c.cells_of_dim(k),
                         s.p_violations, d, cap, k);
    result.found = x.has_value() && z.has_value();
    if (x) result.correction.x_part = *x;
    if (z) result.correction.z_part = *z;
    return result;
}

bool decode_success(const HomologicalCode& code, const ErrorConfig& injected,
                    const ErrorConfig& correction) {
    const std::int64_t d = code.modulus();
    ChainVector dx = injected.x_part.minus(correction.x_part);
    dx.degree = code.degree();
    dx.reduce_mod(d);
    ChainVector dz = injected.z_part.minus(correction.z_part);
    dz.degree = code.degree();
    dz.reduce_mod(d);
    return is_boundary(dx, code.complex(), d) && is_coboundary(dz, code.complex(), d);
}

namespace {

struct BarrierSide {
    std::vector<std::uint32_t> site_masks; // per site: violated-check bits
    SnfResult boundary_snf;                // GF(2) membership for triviality
    std::vector<std::string> sites;
    long check_count = 0;
};

std::optional<long> side_barrier(const BarrierSide& side) {
    const int n = static_cast<int>(side.sites.size());
    const std::uint32_t states = 1u << n;

    auto syndrome_weight = [&](std::uint32_t state) {
        std::uint32_t acc = 0;
        for (int j = 0; j < n; ++j)
            if (state & (1u << j)) acc ^= side.site_masks[j];
        return std::popcount(acc);
    };
    auto syndrome_bits = [&](std::uint32_t state) {
        std::uint32_t acc = 0;
        for (int j = 0; j < n; ++j)
            if (state & (1u << j)) acc ^= side.site_masks[j];
        return acc;
    };
    auto nontrivial_cycle = [&](std::uint32_t state) {
        if (state == 0 || syndrome_bits(state) != 0) return false;
        std::vector<Int> vec(n);
        for (int j = 0; j < n; ++j) vec[j] = (state >> j) & 1u;
        return !solve_mod_with(side.boundary_snf, vec, 2).has_value();
    };

    const long inf = std::numeric_limits<long>::max();
    std::vector<long> dist(states, inf);
    const long max_cost = side.check_count + 1;
    std::vector<std::vector<std::uint32_t>> buckets(max_cost + 1);
    dist[0] = 0;
    buckets[0].push_back(0);
    for (long cost = 0; cost <= max_cost; ++cost) {
        for (std::size_t i = 0; i < buckets[cost].size(); ++i) {
            std::uint32_t s = buckets[cost][i];
            if (dist[s] != cost) continue;
            if (nontrivial_cycle(s)) return cost;
            for (int j = 0; j < n; ++j) {
                std::uint32_t t = s ^ (1u << j);
                long nc = std::max(cost, static_cast<long>(syndrome_weight(t)));
                if (nc < dist[t]) {
                    dist[t] = nc;
                    buckets[nc].push_back(t);
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

BarrierResult energy_barrier(const HomologicalCode& code, int site_guard) {
    if (code.modulus() != 2)
        throw std::invalid_argument("energy barrier is implemented for d = 2 only");
    const CellComplex& c = code.complex();
    const int k = code.degree();
    const long n = c.cell_count(k);
    if (n > site_guard)
        throw CapacityError("energy barrier state space 2^" + std::to_string(n) +
                            " exceeds the guard 2^" + std::to_string(site_guard));

    BarrierResult result;
    result.has_logicals = code_dimension(code) > 1;
    if (!result.has_logicals) return result;

    const auto& sites = c.cells_of_dim(k);
    const auto& v_cells = c.cells_of_dim(k - 1);
    if (v_cells.size() > 32)
        throw CapacityError("energy barrier check masks limited to 32 checks");

    // Chain-side barrier: paths build an X-error one cell at a time and the
    // intermediate energy proxy is the number of violated V-checks.
    BarrierSide side;
    side.sites = sites;
    side.check_count = static_cast<long>(v_cells.size());
    for (const auto& site : sites) {
        std::uint32_t mask = 0;
        for (std::size_t a = 0; a < v_cells.size(); ++a)
            if (c.incidence(site, v_cells[a]) % 2 != 0) mask |= (1u << a);
        side.site_masks.push_back(mask);
    }
    side.boundary_snf =
        smith_normal_form(k < c.dimension() ? c.boundary_matrix(k + 1) : IntMatrix(n, 0));

    auto w = side_barrier(side);
    if (!w) {
        result.has_logicals = false; // no nontrivial cycle reachable
        return result;
    }
    result.barrier = *w;
    return result;
}

} // namespace homcode
