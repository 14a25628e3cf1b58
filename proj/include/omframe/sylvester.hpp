#ifndef OMFRAME_SYLVESTER_HPP
#define OMFRAME_SYLVESTER_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omframe/poly.hpp"

namespace omframe {

/**
 * The augmented system W = [A | e1] for a row vector a of length n and degree
 * d. A is (2d+1) x n(d+1) and consists of d+1 copies of the (d+1) x n block of
 * coefficients of a, each shifted one row further down. Columns are produced
 * on demand from the block; W is never stored.
 *
 * Column indices in this interface are 1-based, matching the usual way the
 * pivot structure is reported. Index n(d+1)+1 is the augmented column e1.
 */
template <Field K>
class SylvesterSystem {
   public:
    using Scalar = typename K::Scalar;

    SylvesterSystem(K field, std::size_t n, int d, std::vector<std::vector<Scalar>> block)
        : field_(std::move(field)), n_(n), d_(d), block_(std::move(block)) {}

    const K& field() const { return field_; }
    std::size_t n() const { return n_; }
    int d() const { return d_; }
    std::size_t rows() const { return 2 * static_cast<std::size_t>(d_) + 1; }
    /// Columns of A (without e1).
    std::size_t a_cols() const { return n_ * (static_cast<std::size_t>(d_) + 1); }
    std::size_t augmented_index() const { return a_cols() + 1; }
    /// c_k as a row of length n.
    const std::vector<Scalar>& coefficient_row(int k) const { return block_[static_cast<std::size_t>(k)]; }

    /// Entry (i, j) of W, 0-based row, 1-based column.
    Scalar entry(std::size_t i, std::size_t j) const {
        if (j == augmented_index()) return i == 0 ? field_.one() : field_.zero();
        const std::size_t shift = (j - 1) / n_;
        const std::size_t comp = (j - 1) % n_;
        if (i < shift || i > shift + static_cast<std::size_t>(d_)) return field_.zero();
        return block_[i - shift][comp];
    }

    /// Column j of W as a dense list of length 2d+1.
    CoeffVector<K> column(std::size_t j) const {
        CoeffVector<K> out(rows(), field_.zero());
        for (std::size_t i = 0; i < rows(); ++i) out[i] = entry(i, j);
        return out;
    }

    /// Materialized W, for display and tests.
    ScalarMatrix<K> dense() const {
        ScalarMatrix<K> w(rows(), augmented_index(), field_.zero());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 1; j <= augmented_index(); ++j) w(i, j - 1) = entry(i, j);
        return w;
    }

   private:
    K field_;
    std::size_t n_;
    int d_;
    std::vector<std::vector<Scalar>> block_;
};

template <Field K>
SylvesterSystem<K> build_system(const PolyVec<K>& a) {
    if (a.size() <= 1) throw Error(ErrorCode::TooShort, "input vector must have length n > 1");
    if (a.is_zero()) throw Error(ErrorCode::ZeroVector, "input vector is zero");
    const K& k = a.field();
    const int d = a.degree();
    std::vector<std::vector<typename K::Scalar>> block(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        auto& row = block[static_cast<std::size_t>(i)];
        row.reserve(a.size());
        for (const auto& p : a) row.push_back(p.coeff(i));
    }
    return SylvesterSystem<K>(k, a.size(), d, std::move(block));
}

/// A v for v of length n(d+1). Its flat image equals a times the flat image of v.
template <Field K>
CoeffVector<K> apply_A(const SylvesterSystem<K>& sys, const CoeffVector<K>& v) {
    if (v.size() != sys.a_cols()) {
        throw Error(ErrorCode::SizeMismatch,
                    "apply_A expects length " + std::to_string(sys.a_cols()) + ", got " + std::to_string(v.size()));
    }
    const K& k = sys.field();
    CoeffVector<K> out(sys.rows(), k.zero());
    const std::size_t n = sys.n();
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        const std::size_t shift = j / n, comp = j % n;
        for (int l = 0; l <= sys.d(); ++l) {
            const auto& c = sys.coefficient_row(l)[comp];
            if (!c.is_zero()) out[shift + static_cast<std::size_t>(l)] += c * v[j];
        }
    }
    return out;
}

/**
 * Column classification of A produced by the partial Gauss-Jordan pass.
 *
 * `reduced` maps each basic non-pivotal index, and the augmented index, to its
 * coordinates over the pivot columns that precede it: for a basic index j the
 * list has one entry per pivot p_i < j, and for the augmented column one entry
 * per pivot.
 */
template <Field K>
struct PivotProfile {
    std::size_t n = 0;
    int d = 0;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> basic;
    std::vector<std::size_t> periodic;
    std::map<std::size_t, CoeffVector<K>> reduced;
    /// Set when e1 is not in the column span of A, i.e. gcd(a) != 1.
    bool gcd_nontrivial = false;

    std::size_t augmented_index() const { return n * (static_cast<std::size_t>(d) + 1) + 1; }

    friend bool operator==(const PivotProfile& x, const PivotProfile& y) {
        return x.n == y.n && x.d == y.d && x.pivots == y.pivots && x.basic == y.basic && x.periodic == y.periodic &&
               x.reduced == y.reduced && x.gcd_nontrivial == y.gcd_nontrivial;
    }
};

/**
 * Partial reduced row-echelon pass over W, left to right.
 *
 * A (2d+1)x(2d+1) transform T accumulates the row operations, so each
 * candidate column is reduced as T * A_j straight from the coefficient block.
 * Once a residue class mod n has produced a non-pivotal column, every later
 * column in that class is non-pivotal too and is classified without any
 * arithmetic.
 */
template <Field K>
PivotProfile<K> partial_rref(const SylvesterSystem<K>& sys) {
    using Scalar = typename K::Scalar;
    const K& k = sys.field();
    const std::size_t rows = sys.rows();
    const std::size_t n = sys.n();
    const int d = sys.d();

    PivotProfile<K> prof;
    prof.n = n;
    prof.d = d;

    std::vector<std::vector<Scalar>> t(rows, std::vector<Scalar>(rows, k.zero()));
    for (std::size_t i = 0; i < rows; ++i) t[i][i] = k.one();
    std::vector<bool> row_used(rows, false);
    std::vector<std::size_t> pivot_row;  // pivot_row[i] is the row of pivot i
    std::vector<bool> class_done(n, false);

    // T times column j.
    auto reduce = [&](std::size_t j) {
        std::vector<Scalar> y(rows, k.zero());
        if (j == sys.augmented_index()) {
            for (std::size_t i = 0; i < rows; ++i) y[i] = t[i][0];
            return y;
        }
        const std::size_t shift = (j - 1) / n, comp = (j - 1) % n;
        for (int l = 0; l <= d; ++l) {
            const Scalar& c = sys.coefficient_row(l)[comp];
            if (c.is_zero()) continue;
            const std::size_t col = shift + static_cast<std::size_t>(l);
            for (std::size_t i = 0; i < rows; ++i) {
                if (!t[i][col].is_zero()) y[i] += t[i][col] * c;
            }
        }
        return y;
    };

    auto coordinates = [&](const std::vector<Scalar>& y) {
        CoeffVector<K> alpha;
        alpha.reserve(pivot_row.size());
        for (std::size_t r : pivot_row) alpha.push_back(y[r]);
        return alpha;
    };

    for (std::size_t j = 1; j <= sys.a_cols(); ++j) {
        const std::size_t cls = (j - 1) % n;
        if (class_done[cls]) {
            prof.periodic.push_back(j);
            continue;
        }
        auto y = reduce(j);
        std::size_t piv = rows;
        if (pivot_row.size() < rows) {
            for (std::size_t i = 0; i < rows; ++i) {
                if (!row_used[i] && !y[i].is_zero()) {
                    piv = i;
                    break;
                }
            }
        }
        if (piv == rows) {
            class_done[cls] = true;
            prof.basic.push_back(j);
            prof.reduced.emplace(j, coordinates(y));
            continue;
        }
        // New pivot: normalize its row and clear the column elsewhere.
        const Scalar inv = y[piv].inverse();
        for (auto& x : t[piv]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == piv || y[i].is_zero()) continue;
            const Scalar f = y[i];
            for (std::size_t c = 0; c < rows; ++c) {
                if (!t[piv][c].is_zero()) t[i][c] -= f * t[piv][c];
            }
        }
        row_used[piv] = true;
        pivot_row.push_back(piv);
        prof.pivots.push_back(j);
    }

    auto y = reduce(sys.augmented_index());
    for (std::size_t i = 0; i < rows; ++i) {
        if (!row_used[i] && !y[i].is_zero()) {
            prof.gcd_nontrivial = true;
            break;
        }
    }
    if (!prof.gcd_nontrivial) prof.reduced.emplace(sys.augmented_index(), coordinates(y));
    return prof;
}

}  // namespace omframe

#endif
