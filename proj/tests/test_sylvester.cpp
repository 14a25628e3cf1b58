#include <random>

#include "doctest.h"
#include "omframe/linalg.hpp"
#include "omframe/reference.hpp"
#include "omframe/sylvester.hpp"
#include "support.hpp"

using namespace omframe;
using namespace omframe::testing;

namespace {

// Left 9x15 block of W for the running example, row by row.
const long long kRunningA[9][15] = {
    {2, 3, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 2, 3, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 1, 0, 0, 2, 3, 6, 0, 0, 0, 0, 0, 0}, {0, 0, 2, 0, 1, 0, 1, 0, 0, 2, 3, 6, 0, 0, 0},
    {1, 1, 1, 0, 0, 2, 0, 1, 0, 1, 0, 0, 2, 3, 6}, {0, 0, 0, 1, 1, 1, 0, 0, 2, 0, 1, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 2, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1},
};

template <Field K>
CoeffVector<K> combine(const SylvesterSystem<K>& sys, const PivotProfile<K>& prof, const CoeffVector<K>& alpha) {
    CoeffVector<K> out(sys.rows(), sys.field().zero());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        auto col = sys.column(prof.pivots[i]);
        for (std::size_t r = 0; r < out.size(); ++r) out[r] += alpha[i] * col[r];
    }
    return out;
}

// Pivot columns of A by the textbook definition, via ranks of prefixes.
template <Field K>
std::vector<std::size_t> pivots_by_rank(const SylvesterSystem<K>& sys) {
    std::vector<std::size_t> out;
    std::size_t prev = 0;
    auto w = sys.dense();
    for (std::size_t j = 1; j <= sys.a_cols(); ++j) {
        ScalarMatrix<K> prefix(sys.rows(), j, sys.field().zero());
        for (std::size_t i = 0; i < sys.rows(); ++i)
            for (std::size_t c = 0; c < j; ++c) prefix(i, c) = w(i, c);
        auto r = linalg::rank(prefix, sys.field());
        if (r > prev) out.push_back(j);
        prev = r;
    }
    return out;
}

}  // namespace

TEST_CASE("build_system on the running example") {
    const Q k;
    auto sys = build_system(running_example(k));
    CHECK(sys.rows() == 9);
    CHECK(sys.augmented_index() == 16);
    auto w = sys.dense();
    CHECK(w.cols() == 16);
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 15; ++j) CHECK(w(i, j) == k.from_int(kRunningA[i][j]));
        CHECK(w(i, 15) == k.from_int(i == 0 ? 1 : 0));
    }
}

TEST_CASE("build_system degenerate shapes") {
    const Q k;
    auto sys = build_system(row<Q>({qp({1}), QPoly(k), QPoly(k)}));
    CHECK(sys.rows() == 1);
    CHECK(sys.augmented_index() == 4);
    auto w = sys.dense();
    CHECK(w(0, 0) == k.one());
    CHECK(w(0, 1).is_zero());
    CHECK(w(0, 2).is_zero());
    CHECK(w(0, 3) == k.one());

    // [s, s+1]: block [[0,1],[1,1]] shifted once
    auto sys2 = build_system(row<Q>({qp({0, 1}), qp({1, 1})}));
    CHECK(sys2.rows() == 3);
    CHECK(sys2.column(1) == scalars(k, {0, 1, 0}));
    CHECK(sys2.column(2) == scalars(k, {1, 1, 0}));
    CHECK(sys2.column(3) == scalars(k, {0, 0, 1}));
    CHECK(sys2.column(4) == scalars(k, {0, 1, 1}));

    CHECK_THROWS_AS(build_system(row<Q>({qp({1, 1})})), Error);
    CHECK_THROWS_AS(build_system(QVec::zero(k, 3)), Error);
}

TEST_CASE("apply_A") {
    const Q k;
    auto sys = build_system(running_example(k));
    auto v = scalars(k, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15});
    CHECK(apply_A(sys, v) == scalars(k, {26, 60, 98, 143, 194, 57, 62, 63, 42}));
    CHECK(apply_A(sys, CoeffVector<Q>(15, k.zero())) == CoeffVector<Q>(9, k.zero()));
    CHECK_THROWS_AS(apply_A(sys, scalars(k, {1, 2})), Error);
}

TEST_CASE("apply_A matches the polynomial product") {
    PrimeField f(101);
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> nd(2, 6), dd(0, 7), coef(0, 100);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = reference::random_vector(f, static_cast<std::size_t>(nd(rng)), dd(rng), -50, 50, rng);
        if (a.is_zero()) continue;
        auto sys = build_system(a);
        CoeffVector<PrimeField> v;
        for (std::size_t i = 0; i < sys.a_cols(); ++i) v.push_back(f.from_int(coef(rng)));
        auto h = flat(v, a.size(), f);
        Poly<PrimeField> prod(f);
        for (std::size_t r = 0; r < a.size(); ++r) prod += a[r] * h[r];
        CHECK(apply_A(sys, v) == sharp(row<PrimeField>({prod}), 2 * a.degree()));
    }
}

TEST_CASE("partial_rref on the running example") {
    const Q k;
    auto prof = partial_rref(build_system(running_example(k)));
    CHECK(prof.pivots == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 10, 13});
    CHECK(prof.basic == std::vector<std::size_t>{8, 9});
    CHECK(prof.periodic == std::vector<std::size_t>{11, 12, 14, 15});
    CHECK_FALSE(prof.gcd_nontrivial);
    CHECK(prof.reduced.at(8) == scalars(k, {-3, -2, 2, 3, -5, 2, 1}));
    CHECK(prof.reduced.at(9) == scalars(k, {-9, -8, 7, 12, -15, 5, 1}));
    CHECK(prof.reduced.at(16) == scalars(k, {2, 1, -1, -1, 2, -1, 0, 0, 0}));
}

TEST_CASE("partial_rref degenerate and small cases") {
    const Q k;
    auto prof = partial_rref(build_system(row<Q>({qp({1}), QPoly(k), QPoly(k)})));
    CHECK(prof.pivots == std::vector<std::size_t>{1});
    CHECK(prof.basic == std::vector<std::size_t>{2, 3});
    CHECK(prof.reduced.at(2) == scalars(k, {0}));
    CHECK(prof.reduced.at(3) == scalars(k, {0}));
    CHECK(prof.reduced.at(4) == scalars(k, {1}));

    // [s, s+1]: columns (0,1,0), (1,1,0), (0,0,1), (0,1,1); the fourth is
    // column 1 plus column 3, and e1 = -col1 + col2.
    auto sys = build_system(row<Q>({qp({0, 1}), qp({1, 1})}));
    auto p2 = partial_rref(sys);
    CHECK(p2.pivots == std::vector<std::size_t>{1, 2, 3});
    CHECK(p2.basic == std::vector<std::size_t>{4});
    CHECK(p2.reduced.at(4) == scalars(k, {1, 0, 1}));
    CHECK(p2.reduced.at(5) == scalars(k, {-1, 1, 0}));
    auto e1 = linalg::solve(reference::coefficient_map_matrix(row<Q>({qp({0, 1}), qp({1, 1})}), 1),
                            scalars(k, {1, 0, 0}), k);
    REQUIRE(e1);
    CHECK(apply_A(sys, *e1) == scalars(k, {1, 0, 0}));

    // zero leading column is non-pivotal
    auto p3 = partial_rref(build_system(row<Q>({QPoly(k), qp({1}), QPoly(k)})));
    CHECK(p3.pivots == std::vector<std::size_t>{2});
    CHECK(p3.basic == std::vector<std::size_t>{1, 3});
}

TEST_CASE("nontrivial gcd is flagged, not thrown") {
    // s(s+1), s^2: common factor s
    auto prof = partial_rref(build_system(row<Q>({qp({0, 1, 1}), qp({0, 0, 1})})));
    CHECK(prof.gcd_nontrivial);
    CHECK(prof.pivots.size() < 5);
    CHECK(prof.reduced.count(prof.augmented_index()) == 0);
}

TEST_CASE("pivot structure invariants on random inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> nd(2, 6), dd(0, 8);
    for (int trial = 0; trial < 150; ++trial) {
        const auto n = static_cast<std::size_t>(nd(rng));
        const int d = dd(rng);
        auto a = reference::random_vector(Q{}, n, d, -6, 6, rng);
        if (a.is_zero()) continue;
        auto sys = build_system(a);
        auto prof = partial_rref(sys);
        const bool unit_gcd = vec_gcd(a).degree() == 0;

        // full rank exactly when gcd(a) = 1
        CHECK((prof.pivots.size() == sys.rows()) == unit_gcd);
        CHECK(prof.gcd_nontrivial == !unit_gcd);
        CHECK(prof.pivots == pivots_by_rank(sys));

        if (unit_gcd) {
            CHECK(prof.basic.size() == n - 1);
            auto aug = combine(sys, prof, prof.reduced.at(sys.augmented_index()));
            CHECK(aug == sys.column(sys.augmented_index()));
        }
        std::vector<bool> seen(n, false);
        for (std::size_t q : prof.basic) {
            CHECK_FALSE(seen[(q - 1) % n]);
            seen[(q - 1) % n] = true;
            CHECK(combine(sys, prof, prof.reduced.at(q)) == sys.column(q));
        }
        for (std::size_t j : prof.periodic) {
            bool has_base = false;
            for (std::size_t q : prof.basic) has_base = has_base || (j > q && (j - q) % n == 0);
            CHECK(has_base);
        }
        CHECK(prof.pivots.size() + prof.basic.size() + prof.periodic.size() == sys.a_cols());
    }
}

TEST_CASE("partial_rref is deterministic") {
    auto sys = build_system(running_example(PrimeField(101)));
    CHECK(partial_rref(sys) == partial_rref(sys));
}
