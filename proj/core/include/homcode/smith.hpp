#pragma once

#include <optional>
#include <vector>

#include "homcode/int_matrix.hpp"

namespace homcode {

/**
 * Smith normal form U * M * V = D with U, V unimodular and D diagonal
 * satisfying the divisibility chain d1 | d2 | ... All arithmetic is exact.
 */
struct SnfResult {
    IntMatrix d; // diagonal, same shape as the input
    IntMatrix u; // rows x rows, |det| = 1
    IntMatrix v; // cols x cols, |det| = 1
    std::vector<Int> diagonal; // the nonzero invariant factors, ascending chain

    long rank() const { return static_cast<long>(diagonal.size()); }
};

// Pivoting picks the smallest nonzero magnitude in the remaining block,
// which keeps entry growth tame on the small matrices seen here.
SnfResult smith_normal_form(const IntMatrix& m);

// Exact determinant (Bareiss), used to check unimodularity of transforms.
Int determinant(const IntMatrix& m);

// Solve m * x = b over the integers. Returns one solution or nullopt.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b);

// Solve m * x = b (mod modulus), modulus >= 2. Returns one solution or nullopt.
std::optional<std::vector<Int>> solve_mod(const IntMatrix& m, const std::vector<Int>& b,
                                          const Int& modulus);

// Same solvers against a precomputed decomposition (search loops solve many
// right-hand sides against one matrix).
std::optional<std::vector<Int>> solve_integer_with(const SnfResult& s, const std::vector<Int>& b);
std::optional<std::vector<Int>> solve_mod_with(const SnfResult& s, const std::vector<Int>& b,
                                               const Int& modulus);

} // namespace homcode
