#include "homcode/smith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace homcode {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Floor-free "nearest" quotient keeps remainders small during reduction.
Int round_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (abs_int(r) * 2 > abs_int(b)) q += (a < 0) == (b < 0) ? 1 : -1;
    return q;
}

Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// Extended gcd: g = gcd(a,b) with x*a + y*b = g, g >= 0.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = a < 0 ? -1 : 1;
        y = 0;
        return abs_int(a);
    }
    Int x1, y1;
    Int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int x, y;
    Int g = ext_gcd(mod_pos(a, m), m, x, y);
    if (g != 1) throw std::domain_error("element not invertible modulo m");
    return mod_pos(x, m);
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfResult res;
    res.d = m;
    res.u = IntMatrix::identity(m.rows());
    res.v = IntMatrix::identity(m.cols());
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    const long n = std::min(m.rows(), m.cols());
    long t = 0;
    while (t < n) {
        // Smallest nonzero magnitude in the trailing block becomes the pivot.
        long pr = -1, pc = -1;
        Int best;
        for (long r = t; r < m.rows(); ++r)
            for (long c = t; c < m.cols(); ++c) {
                const Int& e = d.at(r, c);
                if (e == 0) continue;
                Int a = abs_int(e);
                if (pr < 0 || a < best) { pr = r; pc = c; best = a; }
            }
        if (pr < 0) break; // trailing block is zero

        d.swap_rows(t, pr); u.swap_rows(t, pr);
        d.swap_cols(t, pc); v.swap_cols(t, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (long r = t + 1; r < m.rows(); ++r) {
                if (d.at(r, t) == 0) continue;
                Int q = round_div(d.at(r, t), d.at(t, t));
                d.add_row(r, t, -q); u.add_row(r, t, -q);
                if (d.at(r, t) != 0) {
                    // Remainder smaller than the pivot: promote it.
                    d.swap_rows(t, r); u.swap_rows(t, r);
                    clean = false;
                }
            }
            for (long c = t + 1; c < m.cols(); ++c) {
                if (d.at(t, c) == 0) continue;
                Int q = round_div(d.at(t, c), d.at(t, t));
                d.add_col(c, t, -q); v.add_col(c, t, -q);
                if (d.at(t, c) != 0) {
                    d.swap_cols(t, c); v.swap_cols(t, c);
                    clean = false;
                }
            }
            if (clean) {
                // Divisibility: the pivot must divide the trailing block.
                bool fixed = true;
                for (long r = t + 1; r < m.rows() && fixed; ++r)
                    for (long c = t + 1; c < m.cols() && fixed; ++c)
                        if (d.at(r, c) % d.at(t, t) != 0) {
                            d.add_row(t, r, 1); u.add_row(t, r, 1);
                            fixed = false;
                        }
                if (!fixed) clean = false;
            }
        }
        if (d.at(t, t) < 0) { d.negate_row(t); u.negate_row(t); }
        ++t;
    }
    for (long i = 0; i < n; ++i)
        if (d.at(i, i) != 0) res.diagonal.push_back(d.at(i, i));
    return res;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    IntMatrix w = m;
    const long n = w.rows();
    Int prev = 1;
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            long pr = -1;
            for (long r = k + 1; r < n; ++r)
                if (w.at(r, k) != 0) { pr = r; break; }
            if (pr < 0) return 0;
            w.swap_rows(k, pr);
            sign = -sign;
        }
        for (long r = k + 1; r < n; ++r) {
            for (long c = k + 1; c < n; ++c)
                w.at(r, c) = (w.at(k, k) * w.at(r, c) - w.at(r, k) * w.at(k, c)) / prev;
            w.at(r, k) = 0;
        }
        prev = w.at(k, k);
    }
    return n == 0 ? Int(1) : Int(sign) * w.at(n - 1, n - 1);
}

std::optional<std::vector<Int>> solve_integer_with(const SnfResult& s, const std::vector<Int>& b) {
    const long rows = s.u.rows();
    const long cols = s.v.rows();
    if (static_cast<long>(b.size()) != rows)
        throw std::invalid_argument("right-hand side length mismatch");
    // m x = b  <=>  d y = u b with x = v y.
    std::vector<Int> c(rows);
    for (long r = 0; r < rows; ++r)
        for (long k = 0; k < rows; ++k) c[r] += s.u.at(r, k) * b[k];
    std::vector<Int> y(cols);
    const long n = std::min(rows, cols);
    for (long i = 0; i < rows; ++i) {
        const Int di = i < n ? s.d.at(i, i) : Int(0);
        if (di == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % di != 0) return std::nullopt;
            y[i] = c[i] / di;
        }
    }
    std::vector<Int> x(cols);
    for (long r = 0; r < cols; ++r)
        for (long k = 0; k < cols; ++k)
            if (s.v.at(r, k) != 0 && y[k] != 0) x[r] += s.v.at(r, k) * y[k];
    return x;
}

std::optional<std::vector<Int>> solve_mod_with(const SnfResult& s, const std::vector<Int>& b,
                                               const Int& modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    const long rows = s.u.rows();
    const long cols = s.v.rows();
    if (static_cast<long>(b.size()) != rows)
        throw std::invalid_argument("right-hand side length mismatch");
    std::vector<Int> c(rows);
    for (long r = 0; r < rows; ++r) {
        for (long k = 0; k < rows; ++k) c[r] += s.u.at(r, k) * b[k];
        c[r] = mod_pos(c[r], modulus);
    }
    std::vector<Int> y(cols);
    const long n = std::min(rows, cols);
    for (long i = 0; i < rows; ++i) {
        const Int di = i < n ? s.d.at(i, i) : Int(0);
        if (di == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            // di * y = c (mod modulus) solvable iff gcd(di, modulus) | c.
            Int x0, y0;
            Int g = ext_gcd(di, modulus, x0, y0);
            if (c[i] % g != 0) return std::nullopt;
            Int md = modulus / g;
            y[i] = md == 1 ? Int(0) : mod_pos((c[i] / g) * mod_inverse(di / g, md), md);
        }
    }
    std::vector<Int> x(cols);
    for (long r = 0; r < cols; ++r) {
        for (long k = 0; k < cols; ++k)
            if (s.v.at(r, k) != 0 && y[k] != 0) x[r] += s.v.at(r, k) * y[k];
        x[r] = mod_pos(x[r], modulus);
    }
    return x;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b) {
    return solve_integer_with(smith_normal_form(m), b);
}

std::optional<std::vector<Int>> solve_mod(const IntMatrix& m, const std::vector<Int>& b,
                                          const Int& modulus) {
    return solve_mod_with(smith_normal_form(m), b, modulus);
}

} // namespace homcode
