#include <optional>
#include <random>

#include "doctest.h"
#include "omframe/equivariant.hpp"
#include "omframe/reference.hpp"
#include "support.hpp"

using namespace omframe;
using namespace omframe::testing;

TEST_CASE("coefficient section of the running example") {
    const Q k;
    auto sec = coefficient_section(running_example(k));
    CHECK(sec.indices == std::vector<int>{0, 1, 2});
    ScalarMatrix<Q> expect(3, 3, k.zero());
    const long long rows[3][3] = {{2, 3, 6}, {1, 0, 0}, {0, 1, 0}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) expect(i, j) = k.from_int(rows[i][j]);
    CHECK(sec.c_hat == expect);
}

TEST_CASE("coefficient section skips dependent rows") {
    // rows c0 = (1, 1), c1 = (2, 2), c2 = (0, 1)
    auto sec = coefficient_section(row<Q>({qp({1, 2}), qp({1, 2, 1})}));
    CHECK(sec.indices == std::vector<int>{0, 2});
}

TEST_CASE("dependent components are rejected") {
    // (1+s) - s - 1 = 0
    auto a = row<Q>({qp({1, 1}), qp({0, 1}), qp({1})});
    try {
        eomf(a);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DependentComponents);
    }
    CHECK_THROWS_AS(coefficient_section(row<Q>({qp({0, 1}), qp({0, 2})})), Error);
}

TEST_CASE("eomf produces a valid optimal frame") {
    const Q k;
    auto a = running_example(k);
    auto f = eomf(a);
    CHECK(verify_frame(a, f).passed());
    CHECK(f.degree() == 2);
}

TEST_CASE("eomf is equivariant under constant changes of coordinates") {
    const Q k;
    auto a = running_example(k);
    auto base = eomf(a);

    ScalarMatrix<Q> shear(3, 3, k.zero());
    shear(0, 0) = shear(1, 1) = shear(2, 2) = k.one();
    shear(0, 1) = k.from_int(1);
    ScalarMatrix<Q> twice(3, 3, k.zero());
    twice(0, 0) = twice(1, 1) = twice(2, 2) = k.from_int(2);
    ScalarMatrix<Q> ident(3, 3, k.zero());
    ident(0, 0) = ident(1, 1) = ident(2, 2) = k.one();

    for (const auto& g : {shear, linalg::inverse(shear, k), twice, ident}) {
        auto moved = eomf(row_times_scalar(a, g));
        CHECK(moved.P == scalar_times(linalg::inverse(g, k), base.P));
    }
}

TEST_CASE("equivariance on random inputs and group elements") {
    std::mt19937_64 rng(31);
    PrimeField f(10007);
    std::uniform_int_distribution<int> nd(2, 4), dd(1, 5);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(nd(rng));
        auto a = reference::random_vector(f, n, dd(rng) + static_cast<int>(n), -50, 50, rng);
        if (a.is_zero() || vec_gcd(a).degree() != 0) continue;
        std::optional<MovingFrame<PrimeField>> base;
        try {
            base = eomf(a);
        } catch (const Error&) {
            continue;
        }
        auto g = reference::random_invertible(f, n, -9, 9, rng);
        auto moved = eomf(row_times_scalar(a, g));
        CHECK(moved.P == scalar_times(linalg::inverse(g, f), base->P));
        CHECK(verify_frame(row_times_scalar(a, g), moved).passed());
        ++checked;
    }
    CHECK(checked > 150);
}
