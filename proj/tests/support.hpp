#ifndef OMFRAME_TESTS_SUPPORT_HPP
#define OMFRAME_TESTS_SUPPORT_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "omframe/poly.hpp"

namespace omframe::testing {

using Q = RationalField;
using QPoly = Poly<Q>;
using QVec = PolyVec<Q>;

template <Field K>
Poly<K> poly(const K& k, std::initializer_list<long long> c) {
    return Poly<K>(k, c);
}

inline QPoly qp(std::initializer_list<long long> c) { return QPoly(Q{}, c); }

template <Field K>
PolyVec<K> row(std::vector<Poly<K>> e) {
    return PolyVec<K>(std::move(e), Orientation::Row);
}

/// a = [2+s+s^4, 3+s^2+s^4, 6+2s^3+s^4]
template <Field K>
PolyVec<K> running_example(const K& k) {
    return row<K>({poly(k, {2, 1, 0, 0, 1}), poly(k, {3, 0, 1, 0, 1}), poly(k, {6, 0, 0, 2, 1})});
}

/// The degree-optimal frame at the running example, entries by increasing power.
template <Field K>
PolyMatrix<K> running_frame(const K& k) {
    PolyMatrix<K> p(3, 3, Poly<K>(k));
    p(0, 0) = poly(k, {2, -1});
    p(0, 1) = poly(k, {3, -3, -1});
    p(0, 2) = poly(k, {9, -12, -1});
    p(1, 0) = poly(k, {1, 2});
    p(1, 1) = poly(k, {2, 5, 1});
    p(1, 2) = poly(k, {8, 15});
    p(2, 0) = poly(k, {-1, -1});
    p(2, 1) = poly(k, {-2, -2});
    p(2, 2) = poly(k, {-7, -5, 1});
    return p;
}

template <Field K>
CoeffVector<K> scalars(const K& k, std::initializer_list<long long> v) {
    CoeffVector<K> out;
    for (long long x : v) out.push_back(k.from_int(x));
    return out;
}

/// Cofactor-expansion determinant; the independent check for det().
template <Field K>
Poly<K> cofactor_det(const PolyMatrix<K>& m) {
    const std::size_t n = m.rows();
    const K& k = m(0, 0).field();
    if (n == 1) return m(0, 0);
    Poly<K> out(k);
    for (std::size_t c = 0; c < n; ++c) {
        PolyMatrix<K> minor(n - 1, n - 1, Poly<K>(k));
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j) {
                if (j == c) continue;
                minor(i - 1, jj++) = m(i, j);
            }
        auto term = m(0, c) * cofactor_det(minor);
        if (c % 2) out -= term;
        else out += term;
    }
    return out;
}

}  // namespace omframe::testing

#endif
