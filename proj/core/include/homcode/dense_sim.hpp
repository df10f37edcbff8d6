#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "homcode/code.hpp"

namespace homcode {

// Hard cap on the state-vector length d^{n_k}; operations refuse loudly
// beyond it so the dense layer stays an honest desk-scale oracle.
inline constexpr std::int64_t kStateDimensionGuard = std::int64_t(1) << 20;
// Full-basis operations (ground-space rank, subspace comparisons) build
// N x N matrices and get a tighter default guard.
inline constexpr std::int64_t kBasisMatrixGuard = std::int64_t(1) << 12;

/**
 * Dense state over (C^d)^{(x) n}. Site j is digit j of the basis index in
 * base d (site 0 least significant), sites ordered like the code's k-cells;
 * basis index <-> k-chain is the coefficient-tuple bijection.
 */
struct DenseState {
    std::int64_t d = 2;
    std::vector<std::string> sites;
    Eigen::VectorXcd amplitudes;

    std::int64_t dimension() const { return amplitudes.size(); }
};

std::int64_t state_dimension(std::int64_t d, std::size_t sites); // guarded

// |chain>: the basis vector for a k-chain (coefficients reduced mod d).
DenseState basis_state(const HomologicalCode& code, const ChainVector& chain);
DenseState zero_state(const HomologicalCode& code);

std::int64_t chain_to_index(const DenseState& ref, const ChainVector& chain);
ChainVector index_to_chain(const DenseState& ref, std::int64_t index, int degree);

// Exact action: Z first (phase zeta^{sum z_j v_j + phase_exp}), then the X
// block shifts each digit by x_j mod d.
DenseState apply_pauli(const DenseState& state, const QuditPauliOperator& op);

// Sum over checks of <psi|(2 - S - S^dag)|psi> / <psi|psi>.
double state_energy(const DenseState& state, const HomologicalCode& code);

/**
 * Dimension of the joint fixed space of all stabilizers, found by running
 * every standard basis vector through each check's group average
 * (1/d) sum_m S^m and thresholding singular values at `tolerance`.
 */
long ground_space_dimension(const HomologicalCode& code, double tolerance = 1e-9,
                            std::int64_t matrix_guard = kBasisMatrixGuard);

// An orthonormal basis of the joint fixed space (columns).
Eigen::MatrixXcd ground_space_basis(const HomologicalCode& code, double tolerance = 1e-9,
                                    std::int64_t matrix_guard = kBasisMatrixGuard);

struct SpectrumReport {
    double min_random_energy = 0;        // min <psi|H|psi> over random trials
    double max_additivity_deviation = 0; // |energy - sum_checks(2-2cos(2 pi s/d))|
    double max_term_deviation = 0;       // per-check expectation vs 2-2cos(2 pi s/d)
    bool passed = false;
};

// Random-state positivity plus the per-syndrome energy identity, using
// basis errors injected on a ground vector. Deterministic for a fixed seed.
SpectrumReport hamiltonian_spectrum_check(const HomologicalCode& code, int trials,
                                          std::uint64_t seed = 12345,
                                          double tolerance = 1e-9);

/**
 * The non-tensor-product stabilizer variant: V-checks become diagonal
 * indicator projectors (keep basis chains whose oriented sum at the check
 * cell vanishes) and P-checks become uniform averages over the orbit of
 * shifting by the check cell's boundary chain. Built directly from the
 * combinatorics, independently of the Pauli operators.
 */
class ProjectorStabilizers {
public:
    explicit ProjectorStabilizers(const HomologicalCode& code);

    DenseState apply_v(const std::string& alpha, const DenseState& state) const;
    DenseState apply_p(const std::string& gamma, const DenseState& state) const;
    DenseState apply_all(const DenseState& state) const;

    long fixed_space_dimension(double tolerance = 1e-9,
                               std::int64_t matrix_guard = kBasisMatrixGuard) const;
    Eigen::MatrixXcd fixed_space_basis(double tolerance = 1e-9,
                                       std::int64_t matrix_guard = kBasisMatrixGuard) const;

    const std::vector<std::string>& v_cells() const { return v_cells_; }
    const std::vector<std::string>& p_cells() const { return p_cells_; }

private:
    const HomologicalCode* code_;
    std::vector<std::string> v_cells_, p_cells_;
    // Signed membership of each site in each check, precomputed per check.
    std::vector<std::vector<std::int64_t>> v_signs_, p_signs_;
    bool diagonal_is_v_ = true; // homology mode; swapped in cohomology mode
};

// Uniform superposition over the homology class of `rep` (all chains
// homologous to it), normalized; the structural ground vectors.
DenseState uniform_class_state(const HomologicalCode& code, const ChainVector& rep);

} // namespace homcode
