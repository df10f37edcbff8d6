#include "homcode/homology.hpp"

#include <numeric>
#include <stdexcept>

#include "homcode/errors.hpp"
#include "homcode/smith.hpp"

namespace homcode {

namespace {

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// H = ker(out) / im(in) for one slot of an integer chain complex.
FgAbelianGroup integer_slot_homology(const IntMatrix& out, const IntMatrix& in) {
    SnfResult s_in = smith_normal_form(in);
    long rank_out = smith_normal_form(out).rank();
    long free_rank = out.cols() - rank_out - s_in.rank();
    std::vector<std::int64_t> torsion;
    for (const Int& f : s_in.diagonal)
        if (f > 1) torsion.push_back(static_cast<std::int64_t>(f));
    return FgAbelianGroup(free_rank, std::move(torsion));
}

struct ComplexSlot {
    IntMatrix out; // differential leaving the slot
    IntMatrix in;  // differential entering the slot
};

ComplexSlot chain_slot(const CellComplex& c, int k) {
    const int n = c.dimension();
    ComplexSlot s;
    s.out = c.boundary_matrix(k);
    s.in = k < n ? c.boundary_matrix(k + 1) : IntMatrix(c.cell_count(k), 0);
    return s;
}

ComplexSlot cochain_slot(const CellComplex& c, int k) {
    ComplexSlot s;
    s.out = c.coboundary_matrix(k);
    s.in = k > 0 ? c.coboundary_matrix(k - 1) : IntMatrix(c.cell_count(k), 0);
    return s;
}

// UCT from the integer groups at this slot and the neighbouring slot that
// feeds the Tor term.
FgAbelianGroup coefficient_homology(const FgAbelianGroup& here, const FgAbelianGroup& neighbour,
                                    const FgAbelianGroup& coeff) {
    FgAbelianGroup result = FgAbelianGroup::trivial();
    for (long i = 0; i < coeff.free_rank(); ++i) result = result.direct_sum(here);
    for (std::int64_t d : coeff.torsion())
        result = result.direct_sum(here.tensor_with_cyclic(d))
                     .direct_sum(neighbour.tor_with_cyclic(d));
    return result;
}

} // namespace

FgAbelianGroup homology(const CellComplex& c, int k, const FgAbelianGroup& coeff) {
    if (k < 0) throw std::out_of_range("homology degree must be non-negative");
    if (k > c.dimension()) return FgAbelianGroup::trivial();
    ComplexSlot slot = chain_slot(c, k);
    FgAbelianGroup here = integer_slot_homology(slot.out, slot.in);
    if (coeff.torsion().empty()) {
        FgAbelianGroup result = FgAbelianGroup::trivial();
        for (long i = 0; i < coeff.free_rank(); ++i) result = result.direct_sum(here);
        return result;
    }
    FgAbelianGroup neighbour = FgAbelianGroup::trivial();
    if (k > 0) {
        ComplexSlot prev = chain_slot(c, k - 1);
        neighbour = integer_slot_homology(prev.out, prev.in);
    }
    return coefficient_homology(here, neighbour, coeff);
}

FgAbelianGroup cohomology(const CellComplex& c, int k, const FgAbelianGroup& coeff) {
    if (k < 0) throw std::out_of_range("cohomology degree must be non-negative");
    if (k > c.dimension()) return FgAbelianGroup::trivial();
    ComplexSlot slot = cochain_slot(c, k);
    FgAbelianGroup here = integer_slot_homology(slot.out, slot.in);
    if (coeff.torsion().empty()) {
        FgAbelianGroup result = FgAbelianGroup::trivial();
        for (long i = 0; i < coeff.free_rank(); ++i) result = result.direct_sum(here);
        return result;
    }
    FgAbelianGroup neighbour = FgAbelianGroup::trivial();
    if (k < c.dimension()) {
        ComplexSlot next = cochain_slot(c, k + 1);
        neighbour = integer_slot_homology(next.out, next.in);
    }
    return coefficient_homology(here, neighbour, coeff);
}

std::vector<Int> chain_to_vector(const ChainVector& v, const std::vector<std::string>& cells) {
    std::vector<Int> out(cells.size());
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < cells.size(); ++i) pos[cells[i]] = i;
    for (const auto& [cell, value] : v.coeffs) {
        auto it = pos.find(cell);
        if (it == pos.end()) throw SpecError("chain references cell '" + cell + "' of wrong degree");
        out[it->second] = value;
    }
    return out;
}

ChainVector vector_to_chain(const std::vector<Int>& vec, const std::vector<std::string>& cells,
                            int degree) {
    ChainVector out;
    out.degree = degree;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (vec[i] != 0) out.coeffs[cells[i]] = vec[i];
    return out;
}

namespace {

std::vector<Int> apply_matrix(const IntMatrix& m, const std::vector<Int>& x) {
    std::vector<Int> out(m.rows());
    for (long r = 0; r < m.rows(); ++r)
        for (long c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0 && x[c] != 0) out[r] += m.at(r, c) * x[c];
    return out;
}

bool all_zero_mod(const std::vector<Int>& v, const Int& modulus) {
    for (const Int& x : v) {
        if (modulus == 0) {
            if (x != 0) return false;
        } else if (x % modulus != 0) {
            return false;
        }
    }
    return true;
}

void check_degree(const ChainVector& v, const CellComplex& c) {
    if (v.degree < 0 || v.degree > c.dimension())
        throw SpecError("chain degree " + std::to_string(v.degree) + " outside complex range");
    for (const auto& [cell, value] : v.coeffs)
        if (!c.has_cell(cell) || c.cell(cell).dim != v.degree)
            throw SpecError("chain entry '" + cell + "' is not a cell of degree " +
                            std::to_string(v.degree));
}

bool membership(const IntMatrix& gens, const std::vector<Int>& target, const Int& modulus) {
    if (modulus == 0) return solve_integer(gens, target).has_value();
    return solve_mod(gens, target, modulus).has_value();
}

} // namespace

bool is_cycle(const ChainVector& v, const CellComplex& c, const Int& modulus) {
    check_degree(v, c);
    auto vec = chain_to_vector(v, c.cells_of_dim(v.degree));
    return all_zero_mod(apply_matrix(c.boundary_matrix(v.degree), vec), modulus);
}

bool is_boundary(const ChainVector& v, const CellComplex& c, const Int& modulus) {
    check_degree(v, c);
    auto vec = chain_to_vector(v, c.cells_of_dim(v.degree));
    if (v.degree == c.dimension()) return all_zero_mod(vec, modulus);
    return membership(c.boundary_matrix(v.degree + 1), vec, modulus);
}

bool is_cocycle(const ChainVector& v, const CellComplex& c, const Int& modulus) {
    check_degree(v, c);
    auto vec = chain_to_vector(v, c.cells_of_dim(v.degree));
    return all_zero_mod(apply_matrix(c.coboundary_matrix(v.degree), vec), modulus);
}

bool is_coboundary(const ChainVector& v, const CellComplex& c, const Int& modulus) {
    check_degree(v, c);
    auto vec = chain_to_vector(v, c.cells_of_dim(v.degree));
    if (v.degree == 0) return all_zero_mod(vec, modulus);
    return membership(c.coboundary_matrix(v.degree - 1), vec, modulus);
}

namespace {

struct QuotientGenerators {
    std::vector<std::vector<Int>> generators; // one vector per nontrivial factor
    std::vector<Int> orders;                  // matching invariant factors (> 1)
};

/**
 * Generators of (ker out mod d) / (im in + d * Z^n) as explicit vectors.
 *
 * The mod-d cycle lattice is spanned by columns of V_out scaled so the
 * diagonal relation d_i * y_i = 0 (mod d) holds; relations are the columns
 * of [in | d*I] rewritten in that basis, and a second Smith pass on the
 * relation matrix yields invariant factors and generator directions.
 */
QuotientGenerators quotient_generators(const IntMatrix& out, const IntMatrix& in, const Int& d) {
    const long n = out.cols();
    QuotientGenerators result;
    if (n == 0) return result;

    SnfResult s_out = smith_normal_form(out);
    IntMatrix lattice(n, n); // columns span the mod-d cycle lifts
    for (long i = 0; i < n; ++i) {
        Int scale = 1;
        if (i < s_out.rank()) scale = d / gcd_int(s_out.d.at(i, i), d);
        for (long r = 0; r < n; ++r) lattice.at(r, i) = s_out.v.at(r, i) * scale;
    }

    // Relations: image of the incoming differential plus d * identity.
    IntMatrix relations(n, in.cols() + n);
    for (long r = 0; r < n; ++r) {
        for (long c = 0; c < in.cols(); ++c) relations.at(r, c) = in.at(r, c);
        relations.at(r, in.cols() + r) = d;
    }

    // Rewrite relations in lattice coordinates (exact; the lattice contains
    // every relation column).
    SnfResult s_lat = smith_normal_form(lattice);
    IntMatrix x(n, relations.cols());
    for (long c = 0; c < relations.cols(); ++c) {
        std::vector<Int> b(n);
        for (long r = 0; r < n; ++r) b[r] = relations.at(r, c);
        // lattice * col = b  =>  D y = U b, col = V y
        std::vector<Int> ub(n);
        for (long r = 0; r < n; ++r)
            for (long k2 = 0; k2 < n; ++k2) ub[r] += s_lat.u.at(r, k2) * b[k2];
        std::vector<Int> y(n);
        for (long i = 0; i < n; ++i) {
            if (s_lat.d.at(i, i) == 0) {
                if (ub[i] != 0) throw std::logic_error("relation outside cycle lattice");
                continue;
            }
            if (ub[i] % s_lat.d.at(i, i) != 0)
                throw std::logic_error("relation outside cycle lattice");
            y[i] = ub[i] / s_lat.d.at(i, i);
        }
        for (long r = 0; r < n; ++r) {
            Int acc = 0;
            for (long k2 = 0; k2 < n; ++k2)
                if (s_lat.v.at(r, k2) != 0 && y[k2] != 0) acc += s_lat.v.at(r, k2) * y[k2];
            x.at(r, c) = acc;
        }
    }

    SnfResult s_x = smith_normal_form(x);
    // Generator basis: lattice * inverse(U_x). U_x is unimodular, so the
    // inverse columns solve U_x * col = e_i exactly.
    IntMatrix u_inv(n, n);
    for (long i = 0; i < n; ++i) {
        std::vector<Int> e(n);
        e[i] = 1;
        auto col = solve_integer(s_x.u, e);
        if (!col) throw std::logic_error("failed to invert unimodular transform");
        for (long r = 0; r < n; ++r) u_inv.at(r, i) = (*col)[r];
    }
    IntMatrix basis(n, n);
    for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c) {
            Int acc = 0;
            for (long k2 = 0; k2 < n; ++k2)
                if (lattice.at(r, k2) != 0 && u_inv.at(k2, c) != 0)
                    acc += lattice.at(r, k2) * u_inv.at(k2, c);
            basis.at(r, c) = acc;
        }

    for (long i = 0; i < n; ++i) {
        Int f = s_x.d.at(i, i);
        if (f == 0 || f == 1) continue;
        std::vector<Int> gen(n);
        for (long r = 0; r < n; ++r) {
            Int v = basis.at(r, i) % d;
            if (v < 0) v += d;
            gen[r] = v;
        }
        result.generators.push_back(std::move(gen));
        result.orders.push_back(f);
    }
    return result;
}

long vector_weight(const std::vector<Int>& v) {
    long w = 0;
    for (const Int& x : v)
        if (x != 0) ++w;
    return w;
}

// First-improving greedy weight reduction by adding multiples of the
// incoming differential's columns, all arithmetic mod d.
void reduce_weight(std::vector<Int>& gen, const IntMatrix& in, const Int& d) {
    const long n = static_cast<long>(gen.size());
    bool improved = true;
    while (improved) {
        improved = false;
        for (long c = 0; c < in.cols() && !improved; ++c) {
            for (Int s = 1; s < d && !improved; ++s) {
                std::vector<Int> candidate = gen;
                for (long r = 0; r < n; ++r) {
                    Int v = (candidate[r] + s * in.at(r, c)) % d;
                    if (v < 0) v += d;
                    candidate[r] = v;
                }
                if (vector_weight(candidate) < vector_weight(gen)) {
                    gen = std::move(candidate);
                    improved = true;
                }
            }
        }
    }
}

std::vector<ChainVector> representatives_impl(const IntMatrix& out, const IntMatrix& in,
                                              const Int& d,
                                              const std::vector<std::string>& cells, int degree,
                                              std::vector<Int>* orders_out) {
    if (d < 2) throw std::invalid_argument("representatives need a finite modulus d >= 2");
    QuotientGenerators q = quotient_generators(out, in, d);
    std::vector<ChainVector> reps;
    for (auto& gen : q.generators) {
        reduce_weight(gen, in, d);
        reps.push_back(vector_to_chain(gen, cells, degree));
    }
    if (orders_out) *orders_out = q.orders;
    return reps;
}

} // namespace

std::vector<ChainVector> class_representatives(const CellComplex& c, int k, const Int& d) {
    if (k < 0) throw std::out_of_range("degree must be non-negative");
    if (k > c.dimension()) return {};
    ComplexSlot slot = chain_slot(c, k);
    return representatives_impl(slot.out, slot.in, d, c.cells_of_dim(k), k, nullptr);
}

std::vector<ChainVector> cocycle_representatives(const CellComplex& c, int k, const Int& d) {
    if (k < 0) throw std::out_of_range("degree must be non-negative");
    if (k > c.dimension()) return {};
    ComplexSlot slot = cochain_slot(c, k);
    return representatives_impl(slot.out, slot.in, d, c.cells_of_dim(k), k, nullptr);
}

std::vector<Int> class_representative_orders(const CellComplex& c, int k, const Int& d) {
    if (k < 0) throw std::out_of_range("degree must be non-negative");
    if (k > c.dimension()) return {};
    ComplexSlot slot = chain_slot(c, k);
    std::vector<Int> orders;
    representatives_impl(slot.out, slot.in, d, c.cells_of_dim(k), k, &orders);
    return orders;
}

std::vector<Int> cocycle_representative_orders(const CellComplex& c, int k, const Int& d) {
    if (k < 0) throw std::out_of_range("degree must be non-negative");
    if (k > c.dimension()) return {};
    ComplexSlot slot = cochain_slot(c, k);
    std::vector<Int> orders;
    representatives_impl(slot.out, slot.in, d, c.cells_of_dim(k), k, &orders);
    return orders;
}

} // namespace homcode
