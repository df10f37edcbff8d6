#include "homcode/code.hpp"

#include <sstream>
#include <stdexcept>

#include "homcode/errors.hpp"
#include "homcode/homology.hpp"
#include "homcode/smith.hpp"

namespace homcode {

namespace {

std::int64_t to_i64(const Int& v) { return static_cast<std::int64_t>(v); }

// Invert a g x g matrix mod d by solving M * col_i = e_i for each i via the
// integer Smith solver; returns nullopt when the pairing is degenerate.
std::optional<IntMatrix> invert_mod(const IntMatrix& m, std::int64_t d) {
    if (m.rows() != m.cols()) return std::nullopt;
    const long g = m.rows();
    IntMatrix inv(g, g);
    for (long i = 0; i < g; ++i) {
        std::vector<Int> e(g);
        e[i] = 1;
        auto col = solve_mod(m, e, d);
        if (!col) return std::nullopt;
        for (long r = 0; r < g; ++r) inv.at(r, i) = (*col)[r];
    }
    return inv;
}

QuditPauliOperator x_type_from_chain(const ChainVector& chain, std::int64_t d) {
    QuditPauliOperator op(d);
    for (const auto& [cell, e] : chain.coeffs) op.multiply_x(cell, to_i64(e));
    return op;
}

QuditPauliOperator z_type_from_chain(const ChainVector& chain, std::int64_t d) {
    QuditPauliOperator op(d);
    for (const auto& [cell, e] : chain.coeffs) op.multiply_z(cell, to_i64(e));
    return op;
}

} // namespace

HomologicalCode::HomologicalCode(CellComplex complex, int k, std::int64_t d, CodeMode mode)
    : complex_(std::move(complex)), k_(k), d_(d), mode_(mode) {
    if (k_ < 0 || k_ > complex_.dimension()) throw std::out_of_range("code degree out of range");
    if (d_ < 2) throw std::invalid_argument("code modulus must be >= 2");

    const bool hom = mode_ == CodeMode::homology;
    // V_alpha acts on the coboundary of each (k-1)-cell; Z-type in homology
    // mode, X-type in cohomology mode.
    for (const auto& alpha : complex_.cells_of_dim(k_ - 1)) {
        QuditPauliOperator op(d_);
        for (const auto& site : complex_.cells_of_dim(k_)) {
            std::int64_t e = to_i64(complex_.incidence(site, alpha));
            if (e == 0) continue;
            if (hom) {
                op.multiply_z(site, e);
            } else {
                op.multiply_x(site, e);
            }
        }
        v_stabs_.emplace(alpha, std::move(op));
    }
    // P_gamma acts on the boundary of each (k+1)-cell.
    for (const auto& gamma : complex_.cells_of_dim(k_ + 1)) {
        QuditPauliOperator op(d_);
        for (const auto& site : complex_.cells_of_dim(k_)) {
            std::int64_t e = to_i64(complex_.incidence(gamma, site));
            if (e == 0) continue;
            if (hom) {
                op.multiply_x(site, e);
            } else {
                op.multiply_z(site, e);
            }
        }
        p_stabs_.emplace(gamma, std::move(op));
    }

    group_ = hom ? homology(complex_, k_, FgAbelianGroup::cyclic(d_))
                 : cohomology(complex_, k_, FgAbelianGroup::cyclic(d_));

    // Chain-moving logicals pair with cochain-type logicals; in homology
    // mode X-logicals are cycle representatives and Z-logicals cocycle
    // representatives, in cohomology mode the roles swap.
    std::vector<ChainVector> cycle_reps = class_representatives(complex_, k_, d_);
    std::vector<ChainVector> cocycle_reps = cocycle_representatives(complex_, k_, d_);
    if (hom) {
        x_chains_ = std::move(cycle_reps);
        z_chains_ = std::move(cocycle_reps);
    } else {
        x_chains_ = std::move(cocycle_reps);
        z_chains_ = std::move(cycle_reps);
    }
    for (const auto& chain : x_chains_) x_logicals_.push_back(x_type_from_chain(chain, d_));
    for (const auto& chain : z_chains_) z_logicals_.push_back(z_type_from_chain(chain, d_));

    // Pairing normalization: diagonalize M_ij = phase([Z_i, X_j]) to the
    // identity by a basis change on the Z side when M is unimodular mod d.
    const long g = static_cast<long>(x_logicals_.size());
    if (g != static_cast<long>(z_logicals_.size())) {
        logicals_paired_ = false;
        return;
    }
    if (g == 0) {
        logicals_paired_ = true;
        return;
    }
    IntMatrix pairing(g, g);
    for (long i = 0; i < g; ++i)
        for (long j = 0; j < g; ++j)
            pairing.at(i, j) = symplectic_phase(z_logicals_[i], x_logicals_[j]);
    auto inv = invert_mod(pairing, d_);
    if (!inv) {
        logicals_paired_ = false;
        return;
    }
    std::vector<ChainVector> new_chains(g);
    for (long i = 0; i < g; ++i) {
        ChainVector combo;
        combo.degree = k_;
        for (long j = 0; j < g; ++j) {
            const Int coeff = inv->at(i, j);
            if (coeff == 0) continue;
            for (const auto& [cell, v] : z_chains_[j].coeffs) combo.add(cell, coeff * v);
        }
        combo.reduce_mod(d_);
        new_chains[i] = std::move(combo);
    }
    z_chains_ = std::move(new_chains);
    z_logicals_.clear();
    for (const auto& chain : z_chains_) z_logicals_.push_back(z_type_from_chain(chain, d_));
    logicals_paired_ = true;
}

const std::vector<std::string>& HomologicalCode::sites() const {
    return complex_.cells_of_dim(k_);
}

long HomologicalCode::site_count() const { return complex_.cell_count(k_); }

std::vector<QuditPauliOperator> HomologicalCode::all_stabilizers() const {
    std::vector<QuditPauliOperator> out;
    out.reserve(v_stabs_.size() + p_stabs_.size());
    for (const auto& [cell, op] : v_stabs_) out.push_back(op);
    for (const auto& [cell, op] : p_stabs_) out.push_back(op);
    return out;
}

HomologicalCode build_code(const CellComplex& c, int k, std::int64_t d, CodeMode mode) {
    ValidationReport report = validate_complex(c);
    if (!report.admissible()) {
        std::string why = report.structural.empty()
                              ? (report.dd_failures.empty() ? "non-unit incidence entries"
                                                            : "boundary of boundary is nonzero")
                              : report.structural.front();
        throw SpecError("complex '" + c.label() + "' is not code-admissible: " + why);
    }
    return HomologicalCode(c, k, d, mode);
}

Int code_dimension(const HomologicalCode& code) {
    const FgAbelianGroup& g = code.code_group();
    Int dim = 1;
    for (auto f : g.torsion()) dim *= f;
    if (g.free_rank() > 0)
        throw std::logic_error("finite-d code group has free part"); // unreachable for d >= 2
    return dim;
}

ChainVector apply_stabilizer_product(const HomologicalCode& code,
                                     const std::map<std::string, Int>& powers,
                                     const ChainVector& chain) {
    if (chain.degree != code.degree())
        throw SpecError("chain degree does not match code degree");
    const bool hom = code.mode() == CodeMode::homology;
    ChainVector out = chain;
    for (const auto& [cell_id, m] : powers) {
        if (hom) {
            if (!code.complex().has_cell(cell_id) ||
                code.complex().cell(cell_id).dim != code.degree() + 1)
                throw SpecError("'" + cell_id + "' is not a (k+1)-cell");
            for (const auto& e : code.complex().cell(cell_id).boundary)
                out.add(e.cell, m * e.sign);
        } else {
            if (!code.complex().has_cell(cell_id) ||
                code.complex().cell(cell_id).dim != code.degree() - 1)
                throw SpecError("'" + cell_id + "' is not a (k-1)-cell");
            for (const auto& site : code.sites()) {
                Int s = code.complex().incidence(site, cell_id);
                if (s != 0) out.add(site, m * s);
            }
        }
    }
    out.reduce_mod(code.modulus());
    return out;
}

std::string code_summary(const HomologicalCode& code, const std::optional<long>& distance) {
    std::ostringstream os;
    os << "[[" << code.site_count() << ", " << code.code_group().generator_count() << ", ";
    if (distance) {
        os << *distance;
    } else {
        os << "?";
    }
    os << "]]_" << code.modulus();
    return os.str();
}

} // namespace homcode
