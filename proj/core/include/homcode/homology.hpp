#pragma once

#include <vector>

#include "homcode/abelian.hpp"
#include "homcode/cell_complex.hpp"
#include "homcode/chain.hpp"

namespace homcode {

/**
 * Exact homology of a cell complex over Z, Z_d, or a finite direct sum
 * (handled factor-wise). Computed from integer Smith normal forms; the mod-d
 * groups come out of the universal coefficient theorem
 *
 *     H_k(T, Z_d) = H_k(T, Z) (x) Z_d  (+)  Tor(H_{k-1}(T, Z), Z_d).
 *
 * k beyond the dimension gives the trivial group; negative k is an error.
 */
FgAbelianGroup homology(const CellComplex& c, int k, const FgAbelianGroup& coeff);

// Cohomology of the transposed (coboundary) complex; mod-d version uses
// H^k(Z_d) = H^k(Z) (x) Z_d (+) Tor(H^{k+1}(Z), Z_d).
FgAbelianGroup cohomology(const CellComplex& c, int k, const FgAbelianGroup& coeff);

// Cycle / boundary membership. modulus = 0 means over the integers,
// modulus >= 2 works mod d. Chains must have matching degree in [0, n].
bool is_cycle(const ChainVector& v, const CellComplex& c, const Int& modulus);
bool is_boundary(const ChainVector& v, const CellComplex& c, const Int& modulus);

// Cochain-side analogues (kernel of the coboundary / image of the previous
// coboundary).
bool is_cocycle(const ChainVector& v, const CellComplex& c, const Int& modulus);
bool is_coboundary(const ChainVector& v, const CellComplex& c, const Int& modulus);

/**
 * One cycle representative per generator of H_k(c, Z_d), d >= 2 finite.
 * Extracted from Smith transform columns of the mod-d cycle lattice, then
 * greedily weight-reduced by boundary generators (first improving move in
 * index order; deterministic). Pairwise non-homologous; the product of the
 * generator orders equals |H_k(c, Z_d)|.
 */
std::vector<ChainVector> class_representatives(const CellComplex& c, int k, const Int& d);

// Same construction on the cochain complex: generators of H^k(c, Z_d).
std::vector<ChainVector> cocycle_representatives(const CellComplex& c, int k, const Int& d);

// Orders of the generators returned by class_representatives (same index
// order); useful for pairing torsion classes.
std::vector<Int> class_representative_orders(const CellComplex& c, int k, const Int& d);
std::vector<Int> cocycle_representative_orders(const CellComplex& c, int k, const Int& d);

// Chain <-> dense vector helpers against a fixed cell ordering.
std::vector<Int> chain_to_vector(const ChainVector& v, const std::vector<std::string>& cells);
ChainVector vector_to_chain(const std::vector<Int>& vec, const std::vector<std::string>& cells,
                            int degree);

} // namespace homcode
