#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace homcode {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix with arbitrary-precision entries. The matrices in
// this project are small (boundary maps of desk-scale complexes), so a
// dense row-major layout is fine; exactness is what matters.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(long rows, long cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static IntMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Int& at(long r, long c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& at(long r, long c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& other) const;
    bool is_zero() const;

    bool operator==(const IntMatrix& other) const = default;

    void swap_rows(long a, long b);
    void swap_cols(long a, long b);
    // row[a] += f * row[b], col[a] += f * col[b]
    void add_row(long a, long b, const Int& f);
    void add_col(long a, long b, const Int& f);
    void negate_row(long a);
    void negate_col(long a);

    // Rank over the rationals (fraction-free Gaussian elimination; exact).
    long rank() const;

private:
    long rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

} // namespace homcode
