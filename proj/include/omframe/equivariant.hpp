#ifndef OMFRAME_EQUIVARIANT_HPP
#define OMFRAME_EQUIVARIANT_HPP

#include <cassert>
#include <cstddef>
#include <mutex>
#include <vector>

#include "omframe/linalg.hpp"
#include "omframe/omf.hpp"

namespace omframe {

/// Lexicographically smallest set of coefficient rows c_i spanning K^n, and
/// the invertible matrix stacking them.
template <Field K>
struct CoefficientSection {
    std::vector<int> indices;
    ScalarMatrix<K> c_hat;
};

/**
 * Greedy scan over c_0, ..., c_d keeping each row that raises the rank. Every
 * independent set extends to a basis, so the kept indices form the smallest
 * tuple in lexicographic order.
 */
template <Field K>
CoefficientSection<K> coefficient_section(const PolyVec<K>& a) {
    const std::size_t n = a.size();
    if (n <= 1) throw Error(ErrorCode::TooShort, "input vector must have length n > 1");
    if (a.is_zero()) throw Error(ErrorCode::ZeroVector, "input vector is zero");
    const K& k = a.field();
    const int d = a.degree();

    // Rows kept so far, in reduced echelon form, with their pivot columns.
    std::vector<std::vector<typename K::Scalar>> basis;
    std::vector<std::size_t> pivot;
    CoefficientSection<K> sec;
    sec.c_hat = ScalarMatrix<K>(n, n, k.zero());

    for (int i = 0; i <= d && basis.size() < n; ++i) {
        std::vector<typename K::Scalar> row;
        for (const auto& p : a) row.push_back(p.coeff(i));
        const auto original = row;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const auto f = row[pivot[b]];
            if (f.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) row[c] -= f * basis[b][c];
        }
        std::size_t lead = n;
        for (std::size_t c = 0; c < n; ++c) {
            if (!row[c].is_zero()) {
                lead = c;
                break;
            }
        }
        if (lead == n) continue;
        const auto inv = row[lead].inverse();
        for (auto& x : row) x *= inv;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const auto f = basis[b][lead];
            if (f.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) basis[b][c] -= f * row[c];
        }
        for (std::size_t c = 0; c < n; ++c) sec.c_hat(basis.size(), c) = original[c];
        basis.push_back(std::move(row));
        pivot.push_back(lead);
        sec.indices.push_back(i);
    }
    if (basis.size() < n) {
        throw Error(ErrorCode::DependentComponents,
                    "components linearly dependent over the field; EOMF undefined (coefficient rank " +
                        std::to_string(basis.size()) + " < " + std::to_string(n) + ")");
    }
    return sec;
}

namespace detail {

// The equivariance argument needs omf to be a function of its input. Checked
// once per field type in debug builds.
template <Field K>
void check_omf_determinism(const K& k) {
#ifndef NDEBUG
    static std::once_flag once;
    std::call_once(once, [&k] {
        PolyVec<K> canary({Poly<K>(k, {2, 1, 0, 0, 1}), Poly<K>(k, {3, 0, 1, 0, 1}), Poly<K>(k, {6, 0, 0, 2, 1})});
        if (vec_gcd(canary).degree() != 0) return;
        auto x = omf(canary), y = omf(canary);
        assert(x.P == y.P && x.profile == y.profile);
    });
#else
    (void)k;
#endif
}

}  // namespace detail

/**
 * Equivariant degree-optimal frame: for every invertible constant g,
 * eomf(a g) = g^{-1} eomf(a). Defined for inputs whose components are
 * linearly independent over K.
 */
template <Field K>
MovingFrame<K> eomf(const PolyVec<K>& a) {
    const K& k = a.field();
    detail::check_omf_determinism(k);
    const auto sec = coefficient_section(a);
    const auto c_inv = linalg::inverse(sec.c_hat, k);
    auto frame = omf(row_times_scalar(a, c_inv));
    frame.P = scalar_times(c_inv, frame.P);
    return frame;
}

}  // namespace omframe

#endif
