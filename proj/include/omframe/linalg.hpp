#ifndef OMFRAME_LINALG_HPP
#define OMFRAME_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "omframe/poly.hpp"

namespace omframe::linalg {

/// Reduced row-echelon form of a dense matrix over K, with its pivot columns.
template <Field K>
struct Echelon {
    ScalarMatrix<K> form;
    std::vector<std::size_t> pivot_cols;
    bool negated = false;  // odd number of row swaps
    typename K::Scalar scale;  // product of the pivots divided out
};

template <Field K>
Echelon<K> rref(ScalarMatrix<K> m, const K& k) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Echelon<K> e{{}, {}, false, k.one()};
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
            e.negated = !e.negated;
        }
        const auto lead = m(r, c);
        e.scale *= lead;
        const auto inv = lead.inverse();
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const auto f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
            }
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.form = std::move(m);
    return e;
}

template <Field K>
std::size_t rank(const ScalarMatrix<K>& m, const K& k) {
    return rref(m, k).pivot_cols.size();
}

template <Field K>
typename K::Scalar determinant(const ScalarMatrix<K>& m, const K& k) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::SizeMismatch, "determinant of a non-square matrix");
    auto e = rref(m, k);
    if (e.pivot_cols.size() < m.rows()) return k.zero();
    return e.negated ? -e.scale : e.scale;
}

/// One solution of M x = b, or nothing when the system is inconsistent.
template <Field K>
std::optional<CoeffVector<K>> solve(const ScalarMatrix<K>& m, const CoeffVector<K>& b, const K& k) {
    if (b.size() != m.rows()) throw Error(ErrorCode::SizeMismatch, "right-hand side has wrong length");
    ScalarMatrix<K> aug(m.rows(), m.cols() + 1, k.zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto e = rref(std::move(aug), k);
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
    CoeffVector<K> x(m.cols(), k.zero());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.form(r, m.cols());
    return x;
}

template <Field K>
ScalarMatrix<K> inverse(const ScalarMatrix<K>& m, const K& k) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw Error(ErrorCode::SizeMismatch, "inverse of a non-square matrix");
    ScalarMatrix<K> aug(n, 2 * n, k.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = k.one();
    }
    auto e = rref(std::move(aug), k);
    if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) {
        throw Error(ErrorCode::NotInvertible, "matrix is singular");
    }
    ScalarMatrix<K> out(n, n, k.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = e.form(i, n + j);
    return out;
}

template <Field K>
ScalarMatrix<K> multiply(const ScalarMatrix<K>& a, const ScalarMatrix<K>& b, const K& k) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::SizeMismatch, "matrix product dimension mismatch");
    ScalarMatrix<K> out(a.rows(), b.cols(), k.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (a(i, l).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, l) * b(l, j);
        }
    return out;
}

}  // namespace omframe::linalg

#endif
