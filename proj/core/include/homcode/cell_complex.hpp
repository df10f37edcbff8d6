#pragma once

#include <map>
#include <string>
#include <vector>

#include "homcode/int_matrix.hpp"

namespace homcode {

struct BoundaryEntry {
    std::string cell;
    int sign = 0;
    bool operator==(const BoundaryEntry&) const = default;
};

/**
 * One oriented cell. The boundary list is ordered (builders keep face
 * boundaries in loop order, which the bundle constructions rely on) and may
 * reference the same cell twice with cancelling signs (e.g. a loop edge).
 */
struct Cell {
    std::string id;
    int dim = 0;
    std::vector<BoundaryEntry> boundary;
    bool operator==(const Cell&) const = default;
};

struct ValidationReport {
    // Dangling or wrong-dimension boundary references, zero coefficients.
    std::vector<std::string> structural;
    // Degree pairs k with boundary_k * boundary_{k+1} != 0, with a witness entry.
    struct DdFailure {
        int k;
        std::string row_cell, col_cell;
        Int value;
    };
    std::vector<DdFailure> dd_failures;
    // Summed incidence entries outside {-1, 0, +1}.
    struct IncidenceIssue {
        std::string parent, face;
        Int value;
    };
    std::vector<IncidenceIssue> non_unit_incidence;

    bool admissible() const {
        return structural.empty() && dd_failures.empty() && non_unit_incidence.empty();
    }
};

/**
 * A finite graded cell complex with signed boundary incidence. Immutable
 * after construction; cells are kept sorted lexicographically by id inside
 * each dimension, which fixes all downstream matrix indexing, syndrome
 * ordering and tie-breaking.
 */
class CellComplex {
public:
    CellComplex() = default; // empty 0-dimensional complex
    CellComplex(std::string label, int dimension, std::vector<Cell> cells);

    const std::string& label() const { return label_; }
    int dimension() const { return dimension_; }

    // Ids of k-cells in index order (lexicographic). Empty for out-of-range k.
    const std::vector<std::string>& cells_of_dim(int k) const;
    long cell_count(int k) const;
    long total_cells() const;

    bool has_cell(const std::string& id) const;
    const Cell& cell(const std::string& id) const;
    // Index of a cell within its own dimension's ordering.
    long index_of(const std::string& id) const;

    // Summed signed incidence of `parent` (dim l) on `face` (dim l-1);
    // 0 when the face does not appear or its signed occurrences cancel.
    Int incidence(const std::string& parent, const std::string& face) const;

    // Signed incidence matrix from k-chains to (k-1)-chains. Rows are
    // (k-1)-cells, columns k-cells; k = 0 gives a matrix with zero rows.
    // Throws std::out_of_range unless 0 <= k <= dimension.
    IntMatrix boundary_matrix(int k) const;
    // Transpose of boundary_matrix(k+1): k-cochains to (k+1)-cochains.
    IntMatrix coboundary_matrix(int k) const;

    long euler_characteristic() const;

    const std::vector<Cell>& all_cells() const { return cells_; }

private:
    std::string label_;
    int dimension_ = 0;
    std::vector<Cell> cells_; // sorted by (dim, id)
    std::vector<std::vector<std::string>> by_dim_;
    std::map<std::string, std::size_t> cell_lookup_; // id -> index into cells_
    std::map<std::string, long> dim_index_;          // id -> index within its dimension
};

// Reports every violated admissibility condition; an empty report means the
// complex can back the code constructions.
ValidationReport validate_complex(const CellComplex& c);

/**
 * Dual complex: each (n-k)-cell maps to a dual k-cell named "d_<id>" with
 * dual incidence O^(Delta, i) = O(i, Delta). With closed = true (the
 * default), duals of boundary cells of the input are appended (named
 * "b_<id>") and pasted into the boundaries of their open dual cells, making
 * the result a valid complex for inputs with boundary. The open dual is a
 * formal chain complex only.
 *
 * The caller asserts the input is a manifold cellulation; this is not
 * verified.
 */
CellComplex dual_complex(const CellComplex& c, bool closed = true);

} // namespace homcode
