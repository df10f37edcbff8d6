#include "homcode/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace homcode {

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (long r = 0; r < rows_; ++r)
        for (long c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix dimension mismatch in product");
    IntMatrix out(rows_, other.cols_);
    for (long r = 0; r < rows_; ++r)
        for (long k = 0; k < cols_; ++k) {
            const Int& v = at(r, k);
            if (v == 0) continue;
            for (long c = 0; c < other.cols_; ++c) out.at(r, c) += v * other.at(k, c);
        }
    return out;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

void IntMatrix::swap_rows(long a, long b) {
    if (a == b) return;
    for (long c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(long a, long b) {
    if (a == b) return;
    for (long r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::add_row(long a, long b, const Int& f) {
    for (long c = 0; c < cols_; ++c) at(a, c) += f * at(b, c);
}

void IntMatrix::add_col(long a, long b, const Int& f) {
    for (long r = 0; r < rows_; ++r) at(r, a) += f * at(r, b);
}

void IntMatrix::negate_row(long a) {
    for (long c = 0; c < cols_; ++c) at(a, c) = -at(a, c);
}

void IntMatrix::negate_col(long a) {
    for (long r = 0; r < rows_; ++r) at(r, a) = -at(r, a);
}

long IntMatrix::rank() const {
    // Bareiss fraction-free elimination on a working copy.
    IntMatrix w = *this;
    long rank = 0;
    Int prev_pivot = 1;
    for (long c = 0; c < w.cols_ && rank < w.rows_; ++c) {
        long pr = -1;
        for (long r = rank; r < w.rows_; ++r)
            if (w.at(r, c) != 0) { pr = r; break; }
        if (pr < 0) continue;
        w.swap_rows(rank, pr);
        const Int pivot = w.at(rank, c);
        for (long r = rank + 1; r < w.rows_; ++r) {
            for (long cc = c + 1; cc < w.cols_; ++cc)
                w.at(r, cc) = (pivot * w.at(r, cc) - w.at(r, c) * w.at(rank, cc)) / prev_pivot;
            w.at(r, c) = 0;
        }
        prev_pivot = pivot;
        ++rank;
    }
    return rank;
}

} // namespace homcode
