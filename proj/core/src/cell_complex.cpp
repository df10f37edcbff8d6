#include "homcode/cell_complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "homcode/errors.hpp"

namespace homcode {

CellComplex::CellComplex(std::string label, int dimension, std::vector<Cell> cells)
    : label_(std::move(label)), dimension_(dimension), cells_(std::move(cells)) {
    if (dimension_ < 0) throw SpecError("complex dimension must be non-negative");
    std::stable_sort(cells_.begin(), cells_.end(), [](const Cell& a, const Cell& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.id < b.id;
    });
    by_dim_.assign(dimension_ + 1, {});
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        const Cell& c = cells_[i];
        if (c.dim < 0 || c.dim > dimension_)
            throw SpecError("cell '" + c.id + "' has dimension outside [0, " +
                            std::to_string(dimension_) + "]");
        if (!cell_lookup_.emplace(c.id, i).second)
            throw SpecError("duplicate cell id '" + c.id + "'");
        dim_index_[c.id] = static_cast<long>(by_dim_[c.dim].size());
        by_dim_[c.dim].push_back(c.id);
    }
}

const std::vector<std::string>& CellComplex::cells_of_dim(int k) const {
    static const std::vector<std::string> empty;
    if (k < 0 || k >= static_cast<int>(by_dim_.size())) return empty;
    return by_dim_[k];
}

long CellComplex::cell_count(int k) const { return static_cast<long>(cells_of_dim(k).size()); }

long CellComplex::total_cells() const { return static_cast<long>(cells_.size()); }

bool CellComplex::has_cell(const std::string& id) const { return cell_lookup_.count(id) != 0; }

const Cell& CellComplex::cell(const std::string& id) const {
    auto it = cell_lookup_.find(id);
    if (it == cell_lookup_.end()) throw SpecError("unknown cell id '" + id + "'");
    return cells_[it->second];
}

long CellComplex::index_of(const std::string& id) const {
    auto it = dim_index_.find(id);
    if (it == dim_index_.end()) throw SpecError("unknown cell id '" + id + "'");
    return it->second;
}

Int CellComplex::incidence(const std::string& parent, const std::string& face) const {
    Int total = 0;
    for (const auto& e : cell(parent).boundary)
        if (e.cell == face) total += e.sign;
    return total;
}

IntMatrix CellComplex::boundary_matrix(int k) const {
    if (k < 0 || k > dimension_) throw std::out_of_range("boundary degree out of range");
    const auto& cols = cells_of_dim(k);
    const auto& rows = cells_of_dim(k - 1);
    IntMatrix m(static_cast<long>(rows.size()), static_cast<long>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (const auto& e : cell(cols[j]).boundary) {
            auto it = dim_index_.find(e.cell);
            if (it == dim_index_.end() || cell(e.cell).dim != k - 1)
                throw SpecError("cell '" + cols[j] + "' has invalid boundary reference '" +
                                e.cell + "'");
            m.at(it->second, static_cast<long>(j)) += e.sign;
        }
    }
    return m;
}

IntMatrix CellComplex::coboundary_matrix(int k) const {
    if (k < 0 || k > dimension_) throw std::out_of_range("coboundary degree out of range");
    if (k == dimension_) {
        return IntMatrix(0, cell_count(k));
    }
    return boundary_matrix(k + 1).transposed();
}

long CellComplex::euler_characteristic() const {
    long chi = 0;
    for (int k = 0; k <= dimension_; ++k) chi += (k % 2 == 0 ? 1 : -1) * cell_count(k);
    return chi;
}

ValidationReport validate_complex(const CellComplex& c) {
    ValidationReport report;
    // Structural pass: references must exist, drop exactly one dimension,
    // and carry nonzero coefficients.
    for (const Cell& cell : c.all_cells()) {
        for (const auto& e : cell.boundary) {
            if (!c.has_cell(e.cell)) {
                report.structural.push_back("cell '" + cell.id + "' references missing cell '" +
                                            e.cell + "'");
                continue;
            }
            if (c.cell(e.cell).dim != cell.dim - 1)
                report.structural.push_back("cell '" + cell.id + "' (dim " +
                                            std::to_string(cell.dim) + ") references '" + e.cell +
                                            "' of dim " + std::to_string(c.cell(e.cell).dim));
            if (e.sign == 0)
                report.structural.push_back("cell '" + cell.id + "' has zero coefficient on '" +
                                            e.cell + "'");
        }
    }
    if (!report.structural.empty()) return report;

    // Summed incidence must land in {-1, 0, +1}.
    for (const Cell& cell : c.all_cells()) {
        std::set<std::string> faces;
        for (const auto& e : cell.boundary) faces.insert(e.cell);
        for (const auto& f : faces) {
            Int v = c.incidence(cell.id, f);
            if (v < -1 || v > 1)
                report.non_unit_incidence.push_back({cell.id, f, v});
        }
    }

    // boundary_k o boundary_{k+1} = 0 for every consecutive pair.
    for (int k = 1; k < c.dimension(); ++k) {
        IntMatrix prod = c.boundary_matrix(k) * c.boundary_matrix(k + 1);
        for (long r = 0; r < prod.rows(); ++r)
            for (long col = 0; col < prod.cols(); ++col)
                if (prod.at(r, col) != 0)
                    report.dd_failures.push_back({k, c.cells_of_dim(k - 1)[r],
                                                  c.cells_of_dim(k + 1)[col], prod.at(r, col)});
    }
    return report;
}

namespace {

// Closure of the set of free (n-1)-cells: the boundary subcomplex.
std::set<std::string> boundary_subcomplex(const CellComplex& c) {
    const int n = c.dimension();
    std::set<std::string> result;
    if (n == 0) return result;
    for (const auto& f : c.cells_of_dim(n - 1)) {
        int incident = 0;
        for (const auto& top : c.cells_of_dim(n))
            if (c.incidence(top, f) != 0) ++incident;
        if (incident == 1) result.insert(f);
    }
    // Close downward.
    std::vector<std::string> frontier(result.begin(), result.end());
    while (!frontier.empty()) {
        std::string id = frontier.back();
        frontier.pop_back();
        for (const auto& e : c.cell(id).boundary)
            if (result.insert(e.cell).second) frontier.push_back(e.cell);
    }
    return result;
}

} // namespace

CellComplex dual_complex(const CellComplex& c, bool closed) {
    const int n = c.dimension();
    std::vector<Cell> cells;

    // Open dual: k-cells are duals of (n-k)-cells; the dual boundary of
    // d_<Delta> collects d_<i> over the coboundary of Delta with the same sign.
    for (const Cell& orig : c.all_cells()) {
        Cell dual;
        dual.id = "d_" + orig.id;
        dual.dim = n - orig.dim;
        if (orig.dim < n) {
            for (const auto& up : c.cells_of_dim(orig.dim + 1)) {
                Int s = c.incidence(up, orig.id);
                if (s != 0) dual.boundary.push_back({"d_" + up, static_cast<int>(s)});
            }
        }
        cells.push_back(std::move(dual));
    }

    if (closed) {
        std::set<std::string> bd = boundary_subcomplex(c);
        // Appended cells: for i in the boundary subcomplex of dimension l,
        // b_<i> is the dual of i taken inside that (n-1)-complex, glued into
        // the boundary of d_<i> with a sign alternating in l so that the
        // composite boundary still squares to zero.
        for (const auto& id : bd) {
            const Cell& orig = c.cell(id);
            Cell app;
            app.id = "b_" + id;
            app.dim = n - 1 - orig.dim;
            for (const auto& up : c.cells_of_dim(orig.dim + 1)) {
                if (!bd.count(up)) continue;
                Int s = c.incidence(up, id);
                if (s != 0) app.boundary.push_back({"b_" + up, static_cast<int>(s)});
            }
            cells.push_back(std::move(app));
        }
        for (Cell& dual : cells) {
            if (dual.id.rfind("d_", 0) != 0) continue;
            std::string orig_id = dual.id.substr(2);
            if (!bd.count(orig_id)) continue;
            int l = c.cell(orig_id).dim;
            dual.boundary.push_back({"b_" + orig_id, (l % 2 == 0) ? -1 : 1});
        }
    }

    std::string label = (closed ? "cl_dual(" : "dual(") + c.label() + ")";
    return CellComplex(std::move(label), n, std::move(cells));
}

} // namespace homcode
