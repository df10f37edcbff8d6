#include "homcode/dense_sim.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "homcode/errors.hpp"
#include "homcode/homology.hpp"
#include "homcode/smith.hpp"

namespace homcode {

namespace {

using Complex = std::complex<double>;

Complex root_of_unity(std::int64_t d, std::int64_t exponent) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(((exponent % d) + d) % d) /
                   static_cast<double>(d);
    return {std::cos(angle), std::sin(angle)};
}

std::vector<std::int64_t> digits_of(std::int64_t index, std::int64_t d, std::size_t n) {
    std::vector<std::int64_t> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        out[j] = index % d;
        index /= d;
    }
    return out;
}

long rank_with_threshold(const Eigen::MatrixXcd& m, double tolerance) {
    if (m.size() == 0) return 0;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    double cutoff = tolerance * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
    long rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return rank;
}

Eigen::MatrixXcd basis_with_threshold(const Eigen::MatrixXcd& m, double tolerance) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    double cutoff = tolerance * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
    long rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return svd.matrixU().leftCols(rank);
}

// Group-average (1/d) sum_m S^m applied to one state.
DenseState check_average(const DenseState& state, const QuditPauliOperator& s) {
    DenseState acc = state;
    DenseState power = state;
    for (std::int64_t m = 1; m < state.d; ++m) {
        power = apply_pauli(power, s);
        acc.amplitudes += power.amplitudes;
    }
    acc.amplitudes /= static_cast<double>(state.d);
    return acc;
}

Eigen::MatrixXcd joint_fixed_matrix(const HomologicalCode& code, std::int64_t matrix_guard) {
    std::int64_t n = state_dimension(code.modulus(), code.sites().size());
    if (n > matrix_guard)
        throw CapacityError("full-basis operation needs " + std::to_string(n) +
                            " columns, above the guard of " + std::to_string(matrix_guard));
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
    DenseState work;
    work.d = code.modulus();
    work.sites = code.sites();
    auto checks = code.all_stabilizers();
    for (Eigen::Index col = 0; col < n; ++col) {
        work.amplitudes = m.col(col);
        for (const auto& s : checks) work = check_average(work, s);
        m.col(col) = work.amplitudes;
    }
    return m;
}

} // namespace

std::int64_t state_dimension(std::int64_t d, std::size_t sites) {
    std::int64_t n = 1;
    for (std::size_t i = 0; i < sites; ++i) {
        if (n > kStateDimensionGuard / d)
            throw CapacityError("state dimension d^" + std::to_string(sites) +
                                " exceeds the 2^20 guard");
        n *= d;
    }
    return n;
}

DenseState basis_state(const HomologicalCode& code, const ChainVector& chain) {
    DenseState st;
    st.d = code.modulus();
    st.sites = code.sites();
    std::int64_t n = state_dimension(st.d, st.sites.size());
    st.amplitudes = Eigen::VectorXcd::Zero(n);
    st.amplitudes(chain_to_index(st, chain)) = 1.0;
    return st;
}

DenseState zero_state(const HomologicalCode& code) {
    ChainVector zero;
    zero.degree = code.degree();
    return basis_state(code, zero);
}

std::int64_t chain_to_index(const DenseState& ref, const ChainVector& chain) {
    std::int64_t index = 0;
    std::int64_t weight = 1;
    for (const auto& site : ref.sites) {
        auto it = chain.coeffs.find(site);
        std::int64_t digit = 0;
        if (it != chain.coeffs.end())
            digit = static_cast<std::int64_t>(((it->second % ref.d) + ref.d) % ref.d);
        index += digit * weight;
        weight *= ref.d;
    }
    return index;
}

ChainVector index_to_chain(const DenseState& ref, std::int64_t index, int degree) {
    ChainVector chain;
    chain.degree = degree;
    for (const auto& site : ref.sites) {
        std::int64_t digit = index % ref.d;
        index /= ref.d;
        if (digit != 0) chain.coeffs[site] = digit;
    }
    return chain;
}

DenseState apply_pauli(const DenseState& state, const QuditPauliOperator& op) {
    if (op.modulus() != state.d) throw SpecError("operator modulus does not match state");
    const std::int64_t d = state.d;
    const std::size_t n = state.sites.size();
    std::int64_t dim = state_dimension(d, n);

    std::vector<std::int64_t> xs(n, 0), zs(n, 0), weight(n, 1);
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) weight[j] = weight[j - 1] * d;
        xs[j] = op.x_exponent(state.sites[j]);
        zs[j] = op.z_exponent(state.sites[j]);
    }
    auto known_site = [&](const std::string& cell) {
        return std::find(state.sites.begin(), state.sites.end(), cell) != state.sites.end();
    };
    for (const auto& [cell, e] : op.x_exponents())
        if (!known_site(cell)) throw SpecError("operator acts on '" + cell + "' which is not a site");
    for (const auto& [cell, e] : op.z_exponents())
        if (!known_site(cell)) throw SpecError("operator acts on '" + cell + "' which is not a site");

    DenseState out = state;
    out.amplitudes = Eigen::VectorXcd::Zero(dim);
    for (std::int64_t v = 0; v < dim; ++v) {
        Complex amp = state.amplitudes(v);
        if (amp == Complex(0, 0)) continue;
        auto dig = digits_of(v, d, n);
        std::int64_t phase = op.phase_exponent();
        std::int64_t target = v;
        for (std::size_t j = 0; j < n; ++j) {
            phase += zs[j] * dig[j];
            if (xs[j] != 0) {
                std::int64_t nd = (dig[j] + xs[j]) % d;
                target += (nd - dig[j]) * weight[j];
            }
        }
        out.amplitudes(target) += root_of_unity(d, phase) * amp;
    }
    return out;
}

double state_energy(const DenseState& state, const HomologicalCode& code) {
    double norm2 = state.amplitudes.squaredNorm();
    if (norm2 == 0.0) throw std::invalid_argument("energy of the zero vector");
    double energy = 0;
    for (const auto& s : code.all_stabilizers()) {
        DenseState sv = apply_pauli(state, s);
        Complex overlap = state.amplitudes.dot(sv.amplitudes);
        energy += 2.0 - 2.0 * overlap.real() / norm2;
    }
    return energy;
}

long ground_space_dimension(const HomologicalCode& code, double tolerance,
                            std::int64_t matrix_guard) {
    return rank_with_threshold(joint_fixed_matrix(code, matrix_guard), tolerance);
}

Eigen::MatrixXcd ground_space_basis(const HomologicalCode& code, double tolerance,
                                    std::int64_t matrix_guard) {
    return basis_with_threshold(joint_fixed_matrix(code, matrix_guard), tolerance);
}

SpectrumReport hamiltonian_spectrum_check(const HomologicalCode& code, int trials,
                                          std::uint64_t seed, double tolerance) {
    SpectrumReport report;
    const std::int64_t d = code.modulus();
    std::int64_t dim = state_dimension(d, code.sites().size());

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    report.min_random_energy = std::numeric_limits<double>::infinity();
    DenseState psi;
    psi.d = d;
    psi.sites = code.sites();
    for (int t = 0; t < trials; ++t) {
        psi.amplitudes = Eigen::VectorXcd::Zero(dim);
        for (std::int64_t i = 0; i < dim; ++i) psi.amplitudes(i) = {gauss(rng), gauss(rng)};
        psi.amplitudes.normalize();
        report.min_random_energy = std::min(report.min_random_energy, state_energy(psi, code));
    }

    // Ground vector: project |0> through every check average (the zero chain
    // is a cycle, so the projection never vanishes).
    DenseState ground = zero_state(code);
    for (const auto& s : code.all_stabilizers()) ground = check_average(ground, s);
    ground.amplitudes.normalize();

    // Injected errors: all single-site paulis plus a few random products.
    std::vector<QuditPauliOperator> errors;
    for (const auto& site : code.sites())
        for (std::int64_t e = 1; e < d; ++e) {
            errors.push_back(QuditPauliOperator::x_on(d, site, e));
            errors.push_back(QuditPauliOperator::z_on(d, site, e));
        }
    std::uniform_int_distribution<std::int64_t> exp_dist(0, d - 1);
    for (int t = 0; t < trials; ++t) {
        QuditPauliOperator op(d);
        for (const auto& site : code.sites()) {
            op.multiply_x(site, exp_dist(rng));
            op.multiply_z(site, exp_dist(rng));
        }
        errors.push_back(op);
    }

    auto term_energy = [d](std::int64_t syn) {
        return 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(syn) / d);
    };
    auto run_checks = [&](const std::map<std::string, QuditPauliOperator>& checks,
                          const QuditPauliOperator& err, const DenseState& state,
                          double& expected) {
        for (const auto& [cell, s] : checks) {
            std::int64_t syn = symplectic_phase(s, err);
            expected += term_energy(syn);
            DenseState sv = apply_pauli(state, s);
            double term = 2.0 - 2.0 * state.amplitudes.dot(sv.amplitudes).real();
            report.max_term_deviation =
                std::max(report.max_term_deviation, std::abs(term - term_energy(syn)));
        }
    };
    for (const auto& err : errors) {
        DenseState state = apply_pauli(ground, err);
        double expected = 0;
        run_checks(code.v_stabilizers(), err, state, expected);
        run_checks(code.p_stabilizers(), err, state, expected);
        double measured = state_energy(state, code);
        report.max_additivity_deviation =
            std::max(report.max_additivity_deviation, std::abs(measured - expected));
    }

    report.passed = report.min_random_energy >= -tolerance &&
                    report.max_additivity_deviation <= tolerance &&
                    report.max_term_deviation <= tolerance;
    return report;
}

ProjectorStabilizers::ProjectorStabilizers(const HomologicalCode& code) : code_(&code) {
    const CellComplex& c = code.complex();
    const int k = code.degree();
    diagonal_is_v_ = code.mode() == CodeMode::homology;
    v_cells_ = c.cells_of_dim(k - 1);
    p_cells_ = c.cells_of_dim(k + 1);
    const auto& sites = code.sites();
    for (const auto& alpha : v_cells_) {
        std::vector<std::int64_t> signs(sites.size());
        for (std::size_t j = 0; j < sites.size(); ++j)
            signs[j] = static_cast<std::int64_t>(c.incidence(sites[j], alpha));
        v_signs_.push_back(std::move(signs));
    }
    for (const auto& gamma : p_cells_) {
        std::vector<std::int64_t> signs(sites.size());
        for (std::size_t j = 0; j < sites.size(); ++j)
            signs[j] = static_cast<std::int64_t>(c.incidence(gamma, sites[j]));
        p_signs_.push_back(std::move(signs));
    }
}

namespace {

// Diagonal indicator: keep basis chains whose oriented sum at the check
// cell vanishes mod d.
DenseState indicator_projector(const DenseState& state, const std::vector<std::int64_t>& signs) {
    const std::int64_t d = state.d;
    const std::size_t n = state.sites.size();
    DenseState out = state;
    for (std::int64_t v = 0; v < state.dimension(); ++v) {
        auto dig = digits_of(v, d, n);
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < n; ++j) sum += signs[j] * dig[j];
        if (((sum % d) + d) % d != 0) out.amplitudes(v) = 0;
    }
    return out;
}

// Uniform average over the orbit of adding the signed shift chain; exactly
// the projector onto the span of the orbit sums h(v).
DenseState orbit_projector(const DenseState& state, const std::vector<std::int64_t>& signs) {
    const std::int64_t d = state.d;
    const std::size_t n = state.sites.size();
    const std::int64_t dim = state.dimension();
    std::vector<std::int64_t> weight(n, 1);
    for (std::size_t j = 1; j < n; ++j) weight[j] = weight[j - 1] * d;
    auto shift = [&](std::int64_t v) {
        auto dig = digits_of(v, d, n);
        std::int64_t target = v;
        for (std::size_t j = 0; j < n; ++j) {
            if (signs[j] == 0) continue;
            std::int64_t nd = ((dig[j] + signs[j]) % d + d) % d;
            target += (nd - dig[j]) * weight[j];
        }
        return target;
    };
    DenseState out = state;
    std::vector<bool> visited(dim, false);
    std::vector<std::int64_t> orbit;
    for (std::int64_t v = 0; v < dim; ++v) {
        if (visited[v]) continue;
        orbit.clear();
        std::int64_t w = v;
        do {
            orbit.push_back(w);
            visited[w] = true;
            w = shift(w);
        } while (w != v);
        Complex mean = 0;
        for (auto u : orbit) mean += state.amplitudes(u);
        mean /= static_cast<double>(orbit.size());
        for (auto u : orbit) out.amplitudes(u) = mean;
    }
    return out;
}

} // namespace

DenseState ProjectorStabilizers::apply_v(const std::string& alpha, const DenseState& state) const {
    for (std::size_t i = 0; i < v_cells_.size(); ++i)
        if (v_cells_[i] == alpha)
            return diagonal_is_v_ ? indicator_projector(state, v_signs_[i])
                                  : orbit_projector(state, v_signs_[i]);
    throw SpecError("unknown V-check cell '" + alpha + "'");
}

DenseState ProjectorStabilizers::apply_p(const std::string& gamma, const DenseState& state) const {
    for (std::size_t i = 0; i < p_cells_.size(); ++i)
        if (p_cells_[i] == gamma)
            return diagonal_is_v_ ? orbit_projector(state, p_signs_[i])
                                  : indicator_projector(state, p_signs_[i]);
    throw SpecError("unknown P-check cell '" + gamma + "'");
}

DenseState ProjectorStabilizers::apply_all(const DenseState& state) const {
    DenseState out = state;
    for (std::size_t i = 0; i < v_signs_.size(); ++i)
        out = diagonal_is_v_ ? indicator_projector(out, v_signs_[i])
                             : orbit_projector(out, v_signs_[i]);
    for (std::size_t i = 0; i < p_signs_.size(); ++i)
        out = diagonal_is_v_ ? orbit_projector(out, p_signs_[i])
                             : indicator_projector(out, p_signs_[i]);
    return out;
}

namespace {

Eigen::MatrixXcd projector_fixed_matrix(const ProjectorStabilizers& ps,
                                        const HomologicalCode& code, std::int64_t matrix_guard) {
    std::int64_t n = state_dimension(code.modulus(), code.sites().size());
    if (n > matrix_guard)
        throw CapacityError("full-basis operation needs " + std::to_string(n) +
                            " columns, above the guard of " + std::to_string(matrix_guard));
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
    DenseState work;
    work.d = code.modulus();
    work.sites = code.sites();
    for (Eigen::Index col = 0; col < n; ++col) {
        work.amplitudes = m.col(col);
        work = ps.apply_all(work);
        m.col(col) = work.amplitudes;
    }
    return m;
}

} // namespace

long ProjectorStabilizers::fixed_space_dimension(double tolerance,
                                                 std::int64_t matrix_guard) const {
    return rank_with_threshold(projector_fixed_matrix(*this, *code_, matrix_guard), tolerance);
}

Eigen::MatrixXcd ProjectorStabilizers::fixed_space_basis(double tolerance,
                                                         std::int64_t matrix_guard) const {
    return basis_with_threshold(projector_fixed_matrix(*this, *code_, matrix_guard), tolerance);
}

DenseState uniform_class_state(const HomologicalCode& code, const ChainVector& rep) {
    const CellComplex& c = code.complex();
    const int k = code.degree();
    const std::int64_t d = code.modulus();
    DenseState st;
    st.d = d;
    st.sites = code.sites();
    std::int64_t dim = state_dimension(d, st.sites.size());
    st.amplitudes = Eigen::VectorXcd::Zero(dim);

    const bool chain_side = code.mode() == CodeMode::homology;
    IntMatrix membership = chain_side
                               ? (k < c.dimension() ? c.boundary_matrix(k + 1)
                                                    : IntMatrix(c.cell_count(k), 0))
                               : (k > 0 ? c.coboundary_matrix(k - 1)
                                        : IntMatrix(c.cell_count(k), 0));
    SnfResult snf = smith_normal_form(membership);
    auto rep_vec = chain_to_vector(rep, st.sites);
    for (std::int64_t v = 0; v < dim; ++v) {
        ChainVector chain = index_to_chain(st, v, k);
        auto vec = chain_to_vector(chain, st.sites);
        std::vector<Int> diff(vec.size());
        for (std::size_t i = 0; i < vec.size(); ++i) diff[i] = vec[i] - rep_vec[i];
        if (solve_mod_with(snf, diff, d).has_value()) st.amplitudes(v) = 1.0;
    }
    st.amplitudes.normalize();
    return st;
}

} // namespace homcode
