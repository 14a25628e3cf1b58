#ifndef OMFRAME_REFERENCE_HPP
#define OMFRAME_REFERENCE_HPP

// Independent oracles, the two-step baseline frame, and generators for the
// extremal inputs. Nothing here uses the Sylvester elimination in
// sylvester.hpp: the oracles build their own coefficient matrices from
// polynomial products and solve them with the generic dense routines in
// linalg.hpp.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "omframe/linalg.hpp"
#include "omframe/omf.hpp"
#include "omframe/poly.hpp"

namespace omframe::reference {

/**
 * Matrix of h -> a*h on vectors of degree <= t, in coefficient coordinates:
 * (d+t+1) rows, n(t+1) columns, column k*n + r holding the coefficients of
 * a_r * s^k.
 */
template <Field K>
ScalarMatrix<K> coefficient_map_matrix(const PolyVec<K>& a, int t) {
    const K& k = a.field();
    const int d = a.degree();
    const std::size_t n = a.size();
    const std::size_t rows = static_cast<std::size_t>(d + t + 1);
    ScalarMatrix<K> m(rows, n * static_cast<std::size_t>(t + 1), k.zero());
    for (int power = 0; power <= t; ++power) {
        const auto shift = Poly<K>::monomial(k, k.one(), power);
        for (std::size_t r = 0; r < n; ++r) {
            const auto prod = a[r] * shift;
            const auto col = static_cast<std::size_t>(power) * n + r;
            for (int i = 0; i <= prod.degree(); ++i) m(static_cast<std::size_t>(i), col) = prod.coeff(i);
        }
    }
    return m;
}

template <Field K>
void require_unit_gcd(const PolyVec<K>& a) {
    if (a.size() <= 1) throw Error(ErrorCode::TooShort, "input vector must have length n > 1");
    if (vec_gcd(a).degree() != 0) throw Error(ErrorCode::GcdNontrivial, "oracle requires gcd(a) = 1");
}

template <Field K>
struct BezoutResult {
    int degree;
    PolyVec<K> vector;
};

/// Minimal-degree Bezout vector by trying degrees 0, 1, 2, ... in turn.
template <Field K>
BezoutResult<K> brute_min_bezout(const PolyVec<K>& a) {
    require_unit_gcd(a);
    const K& k = a.field();
    const int d = a.degree();
    for (int t = 0; t <= d; ++t) {
        auto m = coefficient_map_matrix(a, t);
        CoeffVector<K> rhs(m.rows(), k.zero());
        rhs[0] = k.one();
        if (auto x = linalg::solve(m, rhs, k)) {
            auto h = flat(*x, a.size(), k);
            return {t, h};
        }
    }
    throw std::logic_error("no Bezout vector of degree <= deg(a); the input must have gcd 1");
}

/**
 * mu-type from syzygy-space dimensions: dim syz_t(a) = sum_i max(0, t - mu_i + 1),
 * so its second difference in t counts the mu_i equal to t.
 */
template <Field K>
std::vector<int> brute_mu_type(const PolyVec<K>& a) {
    require_unit_gcd(a);
    const K& k = a.field();
    const int d = a.degree();
    const std::size_t n = a.size();
    std::vector<long long> dim;
    for (int t = 0; t <= d; ++t) {
        auto m = coefficient_map_matrix(a, t);
        dim.push_back(static_cast<long long>(m.cols() - linalg::rank(m, k)));
    }
    std::vector<int> mu;
    long long prev_delta = 0;
    for (int t = 0; t <= d; ++t) {
        const long long delta = dim[static_cast<std::size_t>(t)] - (t > 0 ? dim[static_cast<std::size_t>(t - 1)] : 0);
        for (long long c = 0; c < delta - prev_delta; ++c) mu.push_back(t);
        prev_delta = delta;
    }
    long long sum = 0;
    for (int m : mu) sum += m;
    if (mu.size() != n - 1 || sum != d) {
        throw std::logic_error("syzygy dimensions inconsistent with a mu-basis of total degree d");
    }
    return mu;
}

/// Some h of degree <= d with a*h = s^i, for 0 <= i <= 2d.
template <Field K>
PolyVec<K> monomial_representation(const PolyVec<K>& a, int i) {
    require_unit_gcd(a);
    const int d = a.degree();
    if (i < 0 || i > 2 * d) {
        throw Error(ErrorCode::DegreeBound, "exponent " + std::to_string(i) + " outside 0.." + std::to_string(2 * d));
    }
    const K& k = a.field();
    auto m = coefficient_map_matrix(a, d);
    CoeffVector<K> rhs(m.rows(), k.zero());
    rhs[static_cast<std::size_t>(i)] = k.one();
    auto x = linalg::solve(m, rhs, k);
    if (!x) throw std::logic_error("s^i not reachable with degree <= d although gcd(a) = 1");
    return flat(*x, a.size(), k);
}

template <Field K>
struct FqFrame {
    PolyMatrix<K> P;
    std::vector<long long> ks;  // k_3..k_n
};

/**
 * Non-optimal frame by the two-step construction: pick constants k_i with
 * gcd(a_1 + sum k_i a_i, a_2) = 1, solve the two-term Bezout identity with the
 * extended Euclidean algorithm, and multiply out three elementary matrices.
 */
template <Field K>
FqFrame<K> fq_frame(const PolyVec<K>& a, std::uint64_t seed, int k_bound = 5, int attempts = 100) {
    require_unit_gcd(a);
    const K& k = a.field();
    const std::size_t n = a.size();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> pick(-k_bound, k_bound);

    std::vector<long long> ks(n - 2, 0);
    auto combine = [&] {
        Poly<K> out = a[0];
        for (std::size_t i = 2; i < n; ++i) out += a[i] * k.from_int(ks[i - 2]);
        return out;
    };
    Poly<K> a1 = combine();
    auto coprime = [&](const Poly<K>& x) { return !(x.is_zero() && a[1].is_zero()) && poly_gcd(x, a[1]).degree() == 0; };
    int tries = 0;
    while (!coprime(a1)) {
        if (n == 2 || ++tries > attempts) {
            throw Error(ErrorCode::SearchExhausted, "no constants found making a_1' and a_2 coprime");
        }
        for (auto& v : ks) v = pick(rng);
        a1 = combine();
    }
    const auto eg = ext_gcd(a1, a[1]);

    auto lower = identity_matrix(k, n);
    for (std::size_t i = 2; i < n; ++i) lower(i, 0) = Poly<K>::constant(k, k.from_int(ks[i - 2]));
    auto euclid = identity_matrix(k, n);
    euclid(0, 0) = eg.u;
    euclid(0, 1) = -a[1];
    euclid(1, 0) = eg.v;
    euclid(1, 1) = a1;
    auto clear = identity_matrix(k, n);
    for (std::size_t i = 2; i < n; ++i) clear(0, i) = -a[i];

    return {lower * euclid * clear, ks};
}

enum class WitnessKind { BetaMu, LowerBound, UpperBound, DetC };

struct WitnessSpec {
    WitnessKind kind = WitnessKind::BetaMu;
    std::size_t n = 2;
    int d = 1;
    std::vector<int> mu;
    int j = 0;
};

inline void validate(const WitnessSpec& spec) {
    auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidWitness, why); };
    if (spec.n < 2) fail("witness needs n > 1");
    if (spec.kind == WitnessKind::BetaMu) {
        if (spec.mu.size() != spec.n - 1) fail("mu list must have n-1 entries");
        for (std::size_t i = 0; i < spec.mu.size(); ++i) {
            if (spec.mu[i] < 0) fail("mu entries must be nonnegative");
            if (i > 0 && spec.mu[i] < spec.mu[i - 1]) fail("mu list must be nondecreasing");
        }
        if (spec.mu.back() == 0) fail("largest mu must be nonzero");
        if (spec.j < 0 || spec.j > spec.mu.back() - 1) fail("j must lie in 0..mu_max-1");
    } else if (spec.d <= 0) {
        fail("bound witnesses need d > 0");
    }
}

namespace detail {

template <Field K>
Poly<K> mono(const K& k, int e) {
    return Poly<K>::monomial(k, k.one(), e);
}

// ceil(d/(n-1)) and the number of full shifts that stay below d.
inline std::pair<int, int> lower_bound_shape(int d, std::size_t n) {
    const int c = ceil_div(d, static_cast<int>(n) - 1);
    const int k = ceil_div(d, c) - 1;
    return {c, k};
}

}  // namespace detail

/// The extremal input for the requested construction. Always has gcd 1.
template <Field K>
PolyVec<K> gen_witness(const WitnessSpec& spec, const K& k) {
    validate(spec);
    const std::size_t n = spec.n;
    std::vector<Poly<K>> a;
    switch (spec.kind) {
        case WitnessKind::BetaMu: {
            // [s^{M-j}, s^{M-j+mu_1}, ..., s^{M-j+mu_1+...+mu_{n-2}}, s^{mu_1+...+mu_{n-1}} + 1]
            const int top = spec.mu.back();
            int e = top - spec.j;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                a.push_back(detail::mono(k, e));
                e += spec.mu[i];
            }
            int total = 0;
            for (int m : spec.mu) total += m;
            a.push_back(detail::mono(k, total) + Poly<K>::constant(k, k.one()));
            break;
        }
        case WitnessKind::LowerBound: {
            // [1, 0, ..., 0, s^{d-kc}, ..., s^{d-c}, s^d] with c = ceil(d/(n-1))
            const auto [c, shifts] = detail::lower_bound_shape(spec.d, n);
            a.push_back(Poly<K>::constant(k, k.one()));
            for (std::size_t i = 0; i + shifts + 2 < n; ++i) a.emplace_back(k);
            for (int i = shifts; i >= 0; --i) a.push_back(detail::mono(k, spec.d - i * c));
            break;
        }
        case WitnessKind::UpperBound: {
            a.push_back(Poly<K>::constant(k, k.one()));
            for (std::size_t i = 0; i + 2 < n; ++i) a.emplace_back(k);
            a.push_back(detail::mono(k, spec.d));
            break;
        }
        case WitnessKind::DetC: {
            // Exponents d - (i*q + min(i, r)) with d = q(n-1) + r. For n-1 > d
            // this is [s^d, ..., s, 1, ..., 1]; for r = 0 it is [s^d, s^{d-q}, ..., 1].
            const int m = static_cast<int>(n) - 1;
            const int q = spec.d / m, r = spec.d % m;
            for (int i = 0; i <= m; ++i) a.push_back(detail::mono(k, spec.d - (i * q + std::min(i, r))));
            break;
        }
    }
    return PolyVec<K>(std::move(a), Orientation::Row);
}

/**
 * The explicit frame that accompanies a BetaMu, LowerBound or UpperBound
 * witness. Its column degrees are the claimed (beta, mu).
 */
template <Field K>
PolyMatrix<K> witness_frame(const WitnessSpec& spec, const K& k) {
    validate(spec);
    const std::size_t n = spec.n;
    PolyMatrix<K> p(n, n, Poly<K>(k));
    const auto one = Poly<K>::constant(k, k.one());
    switch (spec.kind) {
        case WitnessKind::BetaMu: {
            const int top = spec.mu.back();
            p(n - 2, 0) -= detail::mono(k, spec.j);
            p(n - 1, 0) += one;
            for (std::size_t i = 0; i + 2 < n; ++i) {
                p(i, i + 1) += detail::mono(k, spec.mu[i]);
                p(i + 1, i + 1) -= one;
            }
            p(0, n - 1) += one;
            p(n - 2, n - 1) += detail::mono(k, top);
            p(n - 1, n - 1) -= detail::mono(k, top - spec.j);
            break;
        }
        case WitnessKind::LowerBound: {
            const auto [c, shifts] = detail::lower_bound_shape(spec.d, n);
            const std::size_t split = n - static_cast<std::size_t>(shifts) - 1;  // size of identity block
            p = identity_matrix(k, n);
            p(0, split) = -detail::mono(k, spec.d - shifts * c);
            for (std::size_t col = split + 1; col < n; ++col) p(col - 1, col) = -detail::mono(k, c);
            break;
        }
        case WitnessKind::UpperBound: {
            p = identity_matrix(k, n);
            p(0, n - 1) = -detail::mono(k, spec.d);
            break;
        }
        case WitnessKind::DetC:
            throw Error(ErrorCode::InvalidWitness, "no explicit frame for the detC construction");
    }
    return p;
}

/// Principal (d+q+1)-square block of A, q = quo(d, n-1). Nonsingular blocks
/// force an optimal frame degree of ceil(d/(n-1)).
template <Field K>
ScalarMatrix<K> principal_block(const PolyVec<K>& a) {
    const int d = a.degree();
    const int q = d / (static_cast<int>(a.size()) - 1);
    const auto full = coefficient_map_matrix(a, d);
    const auto size = static_cast<std::size_t>(d + q + 1);
    ScalarMatrix<K> c(size, size, a.field().zero());
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) c(i, j) = full(i, j);
    return c;
}

template <Field K>
bool principal_block_nonsingular(const PolyVec<K>& a) {
    const auto c = principal_block(a);
    return linalg::rank(c, a.field()) == c.rows();
}

/// Random vector of length n whose components have degree <= d and integer
/// coefficients drawn uniformly from [lo, hi].
template <Field K>
PolyVec<K> random_vector(const K& k, std::size_t n, int d, int lo, int hi, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(lo, hi);
    std::vector<Poly<K>> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<typename K::Scalar> c;
        for (int e = 0; e <= d; ++e) c.push_back(k.from_int(pick(rng)));
        out.emplace_back(k, std::move(c));
    }
    return PolyVec<K>(std::move(out), Orientation::Row);
}

template <Field K>
ScalarMatrix<K> random_invertible(const K& k, std::size_t n, int lo, int hi, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(lo, hi);
    while (true) {
        ScalarMatrix<K> g(n, n, k.zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) = k.from_int(pick(rng));
        if (linalg::rank(g, k) == n) return g;
    }
}

}  // namespace omframe::reference

#endif
