#ifndef OMFRAME_OMF_HPP
#define OMFRAME_OMF_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "omframe/linalg.hpp"
#include "omframe/poly.hpp"
#include "omframe/sylvester.hpp"

namespace omframe {

/**
 * A moving frame P at a row vector a: an invertible polynomial matrix with
 * a P = [gcd(a), 0, ..., 0]. Column 0 is a Bezout vector of a/gcd(a) and the
 * remaining columns a syzygy basis, ordered by degree.
 */
template <Field K>
struct MovingFrame {
    PolyMatrix<K> P;
    Poly<K> gcd;
    int beta = 0;
    std::vector<int> mu;
    PivotProfile<K> profile;

    std::size_t n() const { return P.cols(); }
    int degree() const { return matrix_degree(P); }
};

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

/// Degree of the polynomial vector that a 1-based Sylvester column index maps to.
inline int index_degree(std::size_t index, std::size_t n) {
    return ceil_div(static_cast<int>(index), static_cast<int>(n)) - 1;
}

namespace detail {

template <Field K>
using FrameEntries = std::map<std::pair<std::size_t, std::size_t>, std::vector<typename K::Scalar>>;

template <Field K>
void accumulate(FrameEntries<K>& acc, const K& k, std::size_t r, std::size_t col, std::size_t power,
                const typename K::Scalar& v) {
    if (v.is_zero()) return;
    auto& c = acc[{r, col}];
    if (c.size() <= power) c.resize(power + 1, k.zero());
    c[power] += v;
}

template <Field K>
void require_unit_gcd(const PivotProfile<K>& prof) {
    if (prof.gcd_nontrivial) throw Error(ErrorCode::GcdNontrivial, "frame extraction requires gcd 1");
    if (prof.basic.size() + 1 != prof.n) {
        throw Error(ErrorCode::GcdNontrivial, "expected " + std::to_string(prof.n - 1) + " basic non-pivotal columns, got " +
                                                  std::to_string(prof.basic.size()));
    }
}

// Bezout column: pivot p_i contributes alpha_i s^k in component r.
template <Field K>
void write_bezout(FrameEntries<K>& acc, const PivotProfile<K>& prof, const K& k) {
    const auto& alpha = prof.reduced.at(prof.augmented_index());
    for (std::size_t i = 0; i < prof.pivots.size(); ++i) {
        const std::size_t p = prof.pivots[i] - 1;
        accumulate(acc, k, p % prof.n, 0, p / prof.n, alpha[i]);
    }
}

// Syzygy column for the basic index q: s^k at q's slot, minus the pivot
// expansion of A_q at the pivot slots.
template <Field K>
void write_mu_basis(FrameEntries<K>& acc, const PivotProfile<K>& prof, const K& k) {
    for (std::size_t j = 0; j < prof.basic.size(); ++j) {
        const std::size_t q = prof.basic[j] - 1;
        accumulate(acc, k, q % prof.n, j + 1, q / prof.n, k.one());
        const auto& alpha = prof.reduced.at(prof.basic[j]);
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            const std::size_t p = prof.pivots[i] - 1;
            accumulate(acc, k, p % prof.n, j + 1, p / prof.n, -alpha[i]);
        }
    }
}

template <Field K>
PolyMatrix<K> materialize(FrameEntries<K>& acc, const K& k, std::size_t rows, std::size_t cols,
                          std::size_t col_offset) {
    PolyMatrix<K> out(rows, cols, Poly<K>(k));
    for (auto& [key, coeffs] : acc) out(key.first, key.second - col_offset) = Poly<K>(k, std::move(coeffs));
    return out;
}

}  // namespace detail

/// Minimal-degree Bezout vector read off the augmented column of the profile.
template <Field K>
PolyVec<K> extract_bezout(const PivotProfile<K>& prof, const K& k) {
    detail::require_unit_gcd(prof);
    detail::FrameEntries<K> acc;
    detail::write_bezout(acc, prof, k);
    return column(detail::materialize(acc, k, prof.n, 1, 0), 0);
}

/// Degree-ordered mu-basis, one column per basic non-pivotal index.
template <Field K>
std::vector<PolyVec<K>> extract_mu_basis(const PivotProfile<K>& prof, const K& k) {
    detail::require_unit_gcd(prof);
    detail::FrameEntries<K> acc;
    detail::write_mu_basis(acc, prof, k);
    auto m = detail::materialize(acc, k, prof.n, prof.n - 1, 1);
    std::vector<PolyVec<K>> out;
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(column(m, j));
    return out;
}

/// Assembles the whole frame from a gcd-1 profile.
template <Field K>
PolyMatrix<K> assemble_frame(const PivotProfile<K>& prof, const K& k) {
    detail::require_unit_gcd(prof);
    detail::FrameEntries<K> acc;
    detail::write_bezout(acc, prof, k);
    detail::write_mu_basis(acc, prof, k);
    return detail::materialize(acc, k, prof.n, prof.n, 0);
}

/// a / gcd(a), componentwise.
template <Field K>
PolyVec<K> divide_by_gcd(const PolyVec<K>& a, const Poly<K>& g) {
    std::vector<Poly<K>> out;
    out.reserve(a.size());
    for (const auto& p : a) out.push_back(exact_div(p, g));
    return PolyVec<K>(std::move(out), a.orientation());
}

/**
 * Degree-optimal moving frame at a. Inputs with a nontrivial gcd g are divided
 * through first; the frame of a/g satisfies a P = [g, 0, ..., 0].
 */
template <Field K>
MovingFrame<K> omf(const PolyVec<K>& a) {
    if (a.size() <= 1) throw Error(ErrorCode::TooShort, "input vector must have length n > 1");
    if (a.is_zero()) throw Error(ErrorCode::ZeroVector, "input vector is zero");
    const K& k = a.field();
    auto g = vec_gcd(a);
    auto profile = partial_rref(build_system(g.degree() == 0 ? a : divide_by_gcd(a, g)));
    auto P = assemble_frame(profile, k);

    const auto& alpha = profile.reduced.at(profile.augmented_index());
    std::size_t last = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (!alpha[i].is_zero()) last = profile.pivots[i];
    std::vector<int> mu;
    for (std::size_t q : profile.basic) mu.push_back(index_degree(q, profile.n));
    const int beta = index_degree(last, profile.n);
    return MovingFrame<K>{std::move(P), std::move(g), beta, std::move(mu), std::move(profile)};
}

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace check {
inline constexpr const char* kProduct = "product";
inline constexpr const char* kDeterminant = "determinant";
inline constexpr const char* kMuOrdered = "mu_ordered";
inline constexpr const char* kDegreeBounds = "degree_bounds";
inline constexpr const char* kBezoutBelowMu = "bezout_below_mu";
inline constexpr const char* kMuSum = "mu_sum";
inline constexpr const char* kLeadingVectors = "leading_vectors";
}  // namespace check

/**
 * Checks a candidate frame P at a. The first two checks decide whether P is a
 * moving frame at all; the rest are the degree properties every optimal frame
 * has. Degree statements use d = deg(a) - deg(gcd(a)), the degree of the
 * primitive part, which is deg(a) whenever gcd(a) = 1.
 */
template <Field K>
VerificationReport verify_frame(const PolyVec<K>& a, const PolyMatrix<K>& P) {
    VerificationReport rep;
    const std::size_t n = a.size();
    if (P.rows() != n || P.cols() != n) {
        throw Error(ErrorCode::SizeMismatch, "frame must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    const K& k = a.field();
    const auto g = vec_gcd(a);

    {
        auto prod = row_times_matrix(a, P);
        bool ok = prod[0] == g;
        for (std::size_t j = 1; j < n; ++j) ok = ok && prod[j].is_zero();
        rep.checks.push_back({check::kProduct, ok, ok ? "a*P = [gcd, 0, ..., 0]" : "a*P = " + to_string(prod)});
    }
    {
        auto dp = det(P);
        bool ok = dp.degree() == 0;
        rep.checks.push_back({check::kDeterminant, ok, "det = " + to_string(dp)});
    }

    const int beta = column(P, 0).degree();
    std::vector<int> mu;
    for (std::size_t j = 1; j < n; ++j) mu.push_back(column(P, j).degree());
    const int max_mu = *std::max_element(mu.begin(), mu.end());
    const int deg_p = std::max(beta, max_mu);
    const int d = a.degree() - g.degree();

    {
        bool ok = std::is_sorted(mu.begin(), mu.end());
        rep.checks.push_back({check::kMuOrdered, ok, ok ? "" : "trailing column degrees not ordered"});
    }
    {
        const int lo = ceil_div(d, static_cast<int>(n) - 1);
        bool ok = lo <= deg_p && deg_p <= d;
        rep.checks.push_back({check::kDegreeBounds, ok,
                              std::to_string(lo) + " <= deg(P) = " + std::to_string(deg_p) + " <= " + std::to_string(d)});
    }
    {
        bool ok = d == 0 ? deg_p == 0 : beta < max_mu;
        rep.checks.push_back(
            {check::kBezoutBelowMu, ok, "beta = " + std::to_string(beta) + ", max mu = " + std::to_string(max_mu)});
    }
    {
        long long sum = 0;
        for (int m : mu) sum += m;
        bool ok = sum == d;
        rep.checks.push_back({check::kMuSum, ok, "sum mu = " + std::to_string(sum) + ", d = " + std::to_string(d)});
    }
    {
        ScalarMatrix<K> lv(n, n - 1, k.zero());
        bool nonzero = true;
        for (std::size_t j = 1; j < n; ++j) {
            auto col = column(P, j);
            nonzero = nonzero && !col.is_zero();
            auto v = col.leading_vector();
            for (std::size_t i = 0; i < n; ++i) lv(i, j - 1) = v[i];
        }
        bool ok = nonzero && linalg::rank(lv, k) == n - 1;
        rep.checks.push_back({check::kLeadingVectors, ok, ok ? "" : "leading vectors of syzygy columns dependent"});
    }
    return rep;
}

template <Field K>
VerificationReport verify_frame(const PolyVec<K>& a, const MovingFrame<K>& f) {
    return verify_frame(a, f.P);
}

}  // namespace omframe

#endif
