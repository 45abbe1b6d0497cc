#ifndef LEF_MATRIX_HPP
#define LEF_MATRIX_HPP

#include "lef/errors.hpp"
#include "lef/scalar.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace lef {

/// Dense matrix over an exact scalar type (Rational or Fp).
///
/// Value-semantic and immutable once built by the algebra layers; all
/// rank/kernel routines below are pure functions of their inputs.
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
        if (rows.empty()) return Matrix(0, 0);
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw dimension_mismatch("from_rows: ragged row lengths");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    std::vector<K> row(std::size_t i) const {
        return std::vector<K>(a_.begin() + i * cols_,
                              a_.begin() + (i + 1) * cols_);
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const K& x : a_)
            if (!scalar_is_zero(x)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> a_;
};

template <class K>
Matrix<K> vstack(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
        throw dimension_mismatch("vstack: column counts differ");
    const std::size_t cols = a.rows() ? a.cols() : b.cols();
    Matrix<K> m(a.rows() + b.rows(), cols);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

template <class K>
Matrix<K> hstack(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.rows() != b.rows())
        throw dimension_mismatch("hstack: row counts differ");
    Matrix<K> m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

template <class K>
Matrix<K> matmul(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.cols() != b.rows())
        throw dimension_mismatch("matmul: inner dimensions differ");
    Matrix<K> m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (scalar_is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                m(i, j) += a(i, k) * b(k, j);
        }
    return m;
}

template <class K>
std::vector<K> mat_vec(const Matrix<K>& m, const std::vector<K>& x) {
    if (m.cols() != x.size())
        throw dimension_mismatch("mat_vec: vector length != column count");
    std::vector<K> y(m.rows(), K(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
    return y;
}

/// Reduced row echelon data of a matrix: the rank, the pivot columns in
/// increasing order, and the RREF rows (unit pivots, zeros above and below).
template <class K>
struct RowEchelon {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    Matrix<K> rref; // rank x cols
};

namespace detail {

/// Fraction-free (Bareiss) forward elimination over the integers.
///
/// Rows are updated lazily: a row whose entry in the pivot column is zero
/// is skipped, and the divisor it owes is remembered in div[i] (the pivot
/// value of the last step that touched it). Sylvester's identity keeps
/// every division exact; we verify that at runtime and treat a nonzero
/// remainder as an internal bug.
struct BareissResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> pivot_rows; // in pivot order
    std::vector<std::vector<Integer>> rows;
};

inline Integer exact_div(const Integer& num, const Integer& den) {
    Integer q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (!r.is_zero())
        throw internal_inconsistency("fraction-free elimination: inexact division");
    return q;
}

inline BareissResult bareiss_echelon(std::vector<std::vector<Integer>> rows,
                                     std::size_t cols) {
    BareissResult out;
    const std::size_t nrows = rows.size();
    std::vector<bool> used(nrows, false);
    std::vector<Integer> div(nrows, Integer(1));
    Integer current_pivot = 1;

    for (std::size_t c = 0; c < cols && out.rank < nrows; ++c) {
        // deterministic pivoting: first nonzero entry in column order
        std::size_t pr = nrows;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (!used[i] && !rows[i][c].is_zero()) { pr = i; break; }
        }
        if (pr == nrows) continue;

        // bring the pivot row up to the current elimination level
        if (div[pr] != current_pivot) {
            for (std::size_t j = c; j < cols; ++j)
                if (!rows[pr][j].is_zero())
                    rows[pr][j] = exact_div(rows[pr][j] * current_pivot, div[pr]);
            div[pr] = current_pivot;
        }
        const Integer pivot = rows[pr][c];

        for (std::size_t i = 0; i < nrows; ++i) {
            if (used[i] || i == pr || rows[i][c].is_zero()) continue;
            const Integer mult = rows[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                rows[i][j] = exact_div(pivot * rows[i][j] - mult * rows[pr][j],
                                       div[i]);
            }
            rows[i][c] = 0;
            div[i] = pivot;
        }

        used[pr] = true;
        out.pivot_cols.push_back(c);
        out.pivot_rows.push_back(pr);
        ++out.rank;
        current_pivot = pivot;
    }

    out.rows = std::move(rows);
    return out;
}

/// Clears denominators row by row; row scaling changes neither the rank
/// nor the right kernel.
inline std::vector<std::vector<Integer>> integer_rows(const Matrix<Rational>& m) {
    std::vector<std::vector<Integer>> rows(m.rows(),
                                           std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            l = lcm(l, Integer(denominator(m(i, j))));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m(i, j);
            rows[i][j] = Integer(numerator(q)) * (l / Integer(denominator(q)));
        }
    }
    return rows;
}

/// Plain Gaussian forward elimination over a field (prime mode).
template <class K>
struct GaussResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> pivot_rows;
    Matrix<K> rows;
};

template <class K>
GaussResult<K> gauss_echelon(Matrix<K> m) {
    GaussResult<K> out;
    const std::size_t nrows = m.rows(), cols = m.cols();
    std::vector<bool> used(nrows, false);
    for (std::size_t c = 0; c < cols && out.rank < nrows; ++c) {
        std::size_t pr = nrows;
        for (std::size_t i = 0; i < nrows; ++i)
            if (!used[i] && !scalar_is_zero(m(i, c))) { pr = i; break; }
        if (pr == nrows) continue;
        const K inv_pivot = K(1) / m(pr, c);
        for (std::size_t j = c; j < cols; ++j) m(pr, j) = m(pr, j) * inv_pivot;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (used[i] || i == pr || scalar_is_zero(m(i, c))) continue;
            const K f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                m(i, j) = m(i, j) - f * m(pr, j);
        }
        used[pr] = true;
        out.pivot_cols.push_back(c);
        out.pivot_rows.push_back(pr);
        ++out.rank;
    }
    out.rows = std::move(m);
    return out;
}

} // namespace detail

/// Exact rank over the active field. Rational mode uses fraction-free
/// Bareiss elimination; prime mode uses plain Gaussian elimination.
template <class K>
std::size_t rank(const Matrix<K>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if constexpr (is_rational_field_v<K>) {
        return detail::bareiss_echelon(detail::integer_rows(m), m.cols()).rank;
    } else {
        return detail::gauss_echelon(m).rank;
    }
}

/// Reduced row echelon form (unit pivots, zeros above and below each pivot).
template <class K>
RowEchelon<K> reduced_echelon(const Matrix<K>& m) {
    RowEchelon<K> out;
    if constexpr (is_rational_field_v<K>) {
        auto e = detail::bareiss_echelon(detail::integer_rows(m), m.cols());
        out.rank = e.rank;
        out.pivot_cols = e.pivot_cols;
        out.rref = Matrix<K>(e.rank, m.cols());
        for (std::size_t s = 0; s < e.rank; ++s) {
            const auto& r = e.rows[e.pivot_rows[s]];
            const Rational piv(r[e.pivot_cols[s]]);
            for (std::size_t j = e.pivot_cols[s]; j < m.cols(); ++j)
                out.rref(s, j) = Rational(r[j]) / piv;
        }
    } else {
        auto e = detail::gauss_echelon(m);
        out.rank = e.rank;
        out.pivot_cols = e.pivot_cols;
        out.rref = Matrix<K>(e.rank, m.cols());
        for (std::size_t s = 0; s < e.rank; ++s)
            for (std::size_t j = 0; j < m.cols(); ++j)
                out.rref(s, j) = e.rows(e.pivot_rows[s], j);
    }
    // back-eliminate above the pivots
    for (std::size_t s = out.rank; s-- > 0;) {
        const std::size_t pc = out.pivot_cols[s];
        for (std::size_t t = 0; t < s; ++t) {
            if (scalar_is_zero(out.rref(t, pc))) continue;
            const K f = out.rref(t, pc);
            for (std::size_t j = pc; j < m.cols(); ++j)
                out.rref(t, j) = out.rref(t, j) - f * out.rref(s, j);
        }
    }
    return out;
}

/// Basis of the right null space {x : M x = 0}, one basis vector per row.
/// Row count is always cols - rank; the basis derives deterministically
/// from the RREF (one vector per free column, in column order).
template <class K>
Matrix<K> kernel_basis(const Matrix<K>& m) {
    if (m.cols() == 0) return Matrix<K>(0, 0);
    const RowEchelon<K> e = reduced_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    Matrix<K> basis(m.cols() - e.rank, m.cols());
    std::size_t out_row = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        basis(out_row, f) = K(1);
        for (std::size_t s = 0; s < e.rank; ++s)
            basis(out_row, e.pivot_cols[s]) = -e.rref(s, f);
        ++out_row;
    }
    return basis;
}

/// Dimensions of the sum and the intersection of two row spaces with the
/// same ambient dimension.
template <class K>
std::pair<std::size_t, std::size_t>
row_space_dim_sum_and_intersection(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.cols() != b.cols())
        throw dimension_mismatch(
            "row spaces live in different ambient dimensions");
    const std::size_t ra = rank(a);
    const std::size_t rb = rank(b);
    const std::size_t rs = rank(vstack(a, b));
    return {rs, ra + rb - rs};
}

} // namespace lef

#endif // LEF_MATRIX_HPP
