#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homcode/abelian.hpp"
#include "homcode/cell_complex.hpp"
#include "homcode/chain.hpp"
#include "homcode/pauli.hpp"

namespace homcode {

enum class CodeMode { homology, cohomology };

/**
 * The stabilizer code of a complex at degree k with qudit dimension d.
 *
 * In homology mode each (k-1)-cell alpha carries the check
 * V_alpha = prod_{i in cob(alpha)} Z_i^{O(i,alpha)} and each (k+1)-cell
 * gamma carries P_gamma = prod_{i in bd(gamma)} X_i^{O(gamma,i)}; cohomology
 * mode swaps the X/Z roles. Logical representatives come from homology /
 * cohomology class generators, paired so that the symplectic pairing matrix
 * is the identity whenever it is unimodular mod d (composite d over torsion
 * can pair degenerately; that is surfaced via logicals_paired()).
 */
class HomologicalCode {
public:
    HomologicalCode(CellComplex complex, int k, std::int64_t d, CodeMode mode);

    const CellComplex& complex() const { return complex_; }
    int degree() const { return k_; }
    std::int64_t modulus() const { return d_; }
    CodeMode mode() const { return mode_; }

    // Ordered k-cells carrying qudits (lexicographic; fixes site indexing).
    const std::vector<std::string>& sites() const;
    long site_count() const;

    const std::map<std::string, QuditPauliOperator>& v_stabilizers() const { return v_stabs_; }
    const std::map<std::string, QuditPauliOperator>& p_stabilizers() const { return p_stabs_; }
    std::vector<QuditPauliOperator> all_stabilizers() const;

    const std::vector<QuditPauliOperator>& x_logicals() const { return x_logicals_; }
    const std::vector<QuditPauliOperator>& z_logicals() const { return z_logicals_; }
    const std::vector<ChainVector>& x_logical_chains() const { return x_chains_; }
    const std::vector<ChainVector>& z_logical_chains() const { return z_chains_; }
    bool logicals_paired() const { return logicals_paired_; }

    // H_k(T, Z_d) (homology mode) or H^k(T, Z_d) (cohomology mode).
    const FgAbelianGroup& code_group() const { return group_; }

private:
    CellComplex complex_;
    int k_;
    std::int64_t d_;
    CodeMode mode_;
    std::map<std::string, QuditPauliOperator> v_stabs_, p_stabs_;
    std::vector<QuditPauliOperator> x_logicals_, z_logicals_;
    std::vector<ChainVector> x_chains_, z_chains_;
    bool logicals_paired_ = false;
    FgAbelianGroup group_;
};

// Requires a code-admissible complex (validated here), 0 <= k <= n, d >= 2.
HomologicalCode build_code(const CellComplex& c, int k, std::int64_t d,
                           CodeMode mode = CodeMode::homology);

// |H_k(T, Z_d)| resp. |H^k(T, Z_d)|: the ground-space dimension predicted
// by the homology engine.
Int code_dimension(const HomologicalCode& code);

/**
 * Combinatorial shadow of applying chain-moving stabilizers: in homology
 * mode the power map is keyed by (k+1)-cells and sends c to
 * c + sum_gamma m_gamma * bd(gamma) (mod d); diagonal checks leave chains
 * unchanged. Cohomology mode moves cochains by coboundaries of (k-1)-cells.
 */
ChainVector apply_stabilizer_product(const HomologicalCode& code,
                                     const std::map<std::string, Int>& powers,
                                     const ChainVector& chain);

// "[[n_qudits, n_logical, distance?]]_d"; distance is filled in by the
// error-analysis layer when computed.
std::string code_summary(const HomologicalCode& code,
                         const std::optional<long>& distance = std::nullopt);

} // namespace homcode
