#pragma once

#include "uqmn/qrat.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace uqmn {

/// Dense matrix over Q(q), row-major.
struct Matrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<QRat> data;

    Matrix() = default;
    Matrix(size_t r, size_t c) : rows(r), cols(c), data(r * c) {}

    QRat& at(size_t r, size_t c) { return data[r * cols + c]; }
    [[nodiscard]] const QRat& at(size_t r, size_t c) const { return data[r * cols + c]; }

    [[nodiscard]] Matrix transposed() const {
        Matrix t(cols, rows);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
        Matrix r(a.rows, b.cols);
        for (size_t i = 0; i < a.rows; ++i)
            for (size_t k = 0; k < a.cols; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (size_t j = 0; j < b.cols; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
                }
            }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }
};

struct RankResult {
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
};

namespace detail {

inline ZPoly poly_lcm(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    return (a * b).divexact(ZPoly::gcd(a, b));
}

/// Clear denominators row by row, returning an integer-polynomial matrix with
/// the same row space.
inline std::vector<std::vector<ZPoly>> to_integer_rows(const Matrix& m) {
    std::vector<std::vector<ZPoly>> rows(m.rows, std::vector<ZPoly>(m.cols));
    for (size_t r = 0; r < m.rows; ++r) {
        ZPoly l(Int(1));
        for (size_t c = 0; c < m.cols; ++c)
            if (!m.at(r, c).is_zero()) l = poly_lcm(l, m.at(r, c).den());
        for (size_t c = 0; c < m.cols; ++c) {
            const QRat& e = m.at(r, c);
            if (!e.is_zero()) rows[r][c] = e.num() * l.divexact(e.den());
        }
    }
    return rows;
}

} // namespace detail

/// Exact rank over Q(q): clears denominators to Z[q] and runs fraction-free
/// one-step Bareiss elimination with exact divisions.
inline RankResult bareiss_rank(const Matrix& m) {
    auto a = detail::to_integer_rows(m);
    RankResult res;
    if (m.rows == 0 || m.cols == 0) return res;
    ZPoly prev(Int(1));
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t pr = r;
        while (pr < m.rows && a[pr][c].is_zero()) ++pr;
        if (pr == m.rows) continue;
        std::swap(a[pr], a[r]);
        for (size_t i = r + 1; i < m.rows; ++i) {
            for (size_t j = c + 1; j < m.cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]).divexact(prev);
            a[i][c] = ZPoly();
        }
        prev = a[r][c];
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

/// Rank of the specialization at q0; throws pole_error if any entry has a
/// pole there.  Used as a consistency cross-check of the exact engine.
inline size_t rank_at(const Matrix& m, const Rational& q0) {
    std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols));
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < m.cols; ++c) a[r][c] = m.at(r, c).evaluate(q0);
    size_t rank = 0;
    for (size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        size_t pr = rank;
        while (pr < m.rows && a[pr][c] == 0) ++pr;
        if (pr == m.rows) continue;
        std::swap(a[pr], a[rank]);
        for (size_t i = rank + 1; i < m.rows; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[rank][c];
            for (size_t j = c; j < m.cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Solve A x = b for every right-hand side column of B, where A is T x n with
/// full column rank n and the system is consistent; returns the n x k matrix
/// of solutions.  Throws if rank-deficient or inconsistent.
inline Matrix solve_exact(const Matrix& A, const Matrix& B) {
    if (A.rows != B.rows) throw std::invalid_argument("solve_exact shape mismatch");
    const size_t T = A.rows, n = A.cols, k = B.cols;
    Matrix aug(T, n + k);
    for (size_t r = 0; r < T; ++r) {
        for (size_t c = 0; c < n; ++c) aug.at(r, c) = A.at(r, c);
        for (size_t c = 0; c < k; ++c) aug.at(r, n + c) = B.at(r, c);
    }
    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t c = 0; c < n && rank < T; ++c) {
        size_t pr = rank;
        while (pr < T && aug.at(pr, c).is_zero()) ++pr;
        if (pr == T) continue;
        for (size_t j = 0; j < n + k; ++j) std::swap(aug.at(pr, j), aug.at(rank, j));
        QRat inv = QRat(1) / aug.at(rank, c);
        for (size_t j = c; j < n + k; ++j) aug.at(rank, j) *= inv;
        for (size_t i = 0; i < T; ++i) {
            if (i == rank || aug.at(i, c).is_zero()) continue;
            QRat f = aug.at(i, c);
            for (size_t j = c; j < n + k; ++j) aug.at(i, j) -= f * aug.at(rank, j);
        }
        pivot_col.push_back(c);
        ++rank;
    }
    if (rank < n) throw std::invalid_argument("solve_exact: coefficient matrix is rank-deficient");
    for (size_t i = rank; i < T; ++i)
        for (size_t c = 0; c < k; ++c)
            if (!aug.at(i, n + c).is_zero()) throw std::invalid_argument("solve_exact: inconsistent system");
    Matrix x(n, k);
    for (size_t r = 0; r < rank; ++r)
        for (size_t c = 0; c < k; ++c) x.at(pivot_col[r], c) = aug.at(r, n + c);
    return x;
}

/// Is v in the column span of A?  Exact membership via rank comparison.
inline bool in_column_span(const Matrix& A, const std::vector<QRat>& v) {
    if (A.rows != v.size()) throw std::invalid_argument("in_column_span shape mismatch");
    Matrix ext(A.rows, A.cols + 1);
    for (size_t r = 0; r < A.rows; ++r) {
        for (size_t c = 0; c < A.cols; ++c) ext.at(r, c) = A.at(r, c);
        ext.at(r, A.cols) = v[r];
    }
    return bareiss_rank(A).rank == bareiss_rank(ext).rank;
}

} // namespace uqmn
