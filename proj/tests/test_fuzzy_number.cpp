#include <doctest.h>

#include <cmath>

#include "fuzzyseq/fuzzy_number.hpp"
#include "fuzzyseq/serialization.hpp"

using namespace fuzzyseq;

TEST_CASE("triangular level sets interpolate linearly") {
    const FuzzyNumber u = FuzzyNumber::triangular(-3, -2, -1);
    for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const AlphaCut c = u.cut(a);
        CHECK(c.lower == doctest::Approx(a - 3).epsilon(1e-15));
        CHECK(c.upper == doctest::Approx(-1 - a).epsilon(1e-15));
    }
}

TEST_CASE("crisp numbers have constant cuts") {
    const AlphaCut c = FuzzyNumber::crisp(5).cut(0.3);
    CHECK(c.lower == 5.0);
    CHECK(c.upper == 5.0);
}

TEST_CASE("trapezoidal cut at the midpoint") {
    const AlphaCut c = FuzzyNumber::trapezoidal(0, 1, 2, 3).cut(0.5);
    CHECK(c.lower == doctest::Approx(0.5));
    CHECK(c.upper == doctest::Approx(2.5));
}

TEST_CASE("cut rejects alpha outside [0,1]") {
    const FuzzyNumber u = FuzzyNumber::crisp(0);
    CHECK_THROWS_AS(u.cut(-0.1), std::domain_error);
    CHECK_THROWS_AS(u.cut(1.1), std::domain_error);
}

TEST_CASE("invalid constructions are rejected") {
    CHECK_THROWS_AS(FuzzyNumber::triangular(2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(FuzzyNumber::trapezoidal(0, 2, 1, 3), std::invalid_argument);
    // missing the 1-cut
    CHECK_THROWS_AS(FuzzyNumber::from_cuts({{0.0, 0, 1}, {0.5, 0, 1}}), std::invalid_argument);
    // not nested
    CHECK_THROWS_AS(FuzzyNumber::from_cuts({{0.0, 0, 1}, {1.0, -1, 1}}), std::invalid_argument);
    // lower > upper
    CHECK_THROWS_AS(FuzzyNumber::from_cuts({{0.0, 1, 0}, {1.0, 1, 1}}), std::invalid_argument);
}

TEST_CASE("addition is levelwise") {
    CHECK(FuzzyNumber::crisp(2) + FuzzyNumber::crisp(3) == FuzzyNumber::crisp(5));
    CHECK(FuzzyNumber::triangular(-3, -2, -1) + FuzzyNumber::triangular(1, 2, 3) ==
          FuzzyNumber::triangular(-2, 0, 2));
    SplitMix64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const FuzzyNumber u = random_fuzzy_number(rng);
        CHECK(u + FuzzyNumber::zero() == u);
    }
}

TEST_CASE("scalar multiples") {
    SplitMix64 rng(8);
    const FuzzyNumber u = random_fuzzy_number(rng);
    CHECK(1.0 * u == u);
    CHECK(-1.0 * FuzzyNumber::triangular(1, 2, 3) == FuzzyNumber::triangular(-3, -2, -1));
    CHECK(0.0 * u == FuzzyNumber::crisp(0));
}

TEST_CASE("hausdorff distance at a level") {
    const FuzzyNumber neg = FuzzyNumber::triangular(-3, -2, -1);
    const FuzzyNumber pos = FuzzyNumber::triangular(1, 2, 3);
    for (double a : {0.0, 0.3, 1.0}) CHECK(hausdorff_at(neg, pos, a) == doctest::Approx(4.0));
    CHECK(hausdorff_at(neg, neg, 0.5) == 0.0);
    CHECK(hausdorff_at(FuzzyNumber::crisp(0), FuzzyNumber::crisp(3), 0.0) == 3.0);
}

TEST_CASE("supremum metric on the worked pairs") {
    CHECK(metric_d(FuzzyNumber::triangular(-3, -2, -1), FuzzyNumber::triangular(1, 2, 3)) ==
          doctest::Approx(4.0).epsilon(1e-15));
    SplitMix64 rng(9);
    const FuzzyNumber u = random_fuzzy_number(rng);
    CHECK(metric_d(u, u) == 0.0);
    CHECK(metric_d(FuzzyNumber::triangular(1, 2, 3), FuzzyNumber::crisp(0)) == doctest::Approx(3.0));
}

TEST_CASE("grid oracle agrees where breakpoints sit on the grid") {
    const FuzzyNumber u = FuzzyNumber::triangular(-3, -2, -1);
    const FuzzyNumber v = FuzzyNumber::triangular(1, 2, 3);
    CHECK(metric_d_grid_oracle(u, u, 1001) == 0.0);
    CHECK(metric_d_grid_oracle(u, v, 1001) == doctest::Approx(4.0).epsilon(1e-15));
    // triangular pairs break only at alpha 0 and 1, both on an 11-point grid
    SplitMix64 rng(10);
    for (int i = 0; i < 100; ++i) {
        const FuzzyNumber a = FuzzyNumber::triangular(rng.uniform(-5, 0), rng.uniform(0, 1), rng.uniform(1, 5));
        const FuzzyNumber b = FuzzyNumber::triangular(rng.uniform(-5, 0), rng.uniform(0, 1), rng.uniform(1, 5));
        CHECK(std::fabs(metric_d(a, b) - metric_d_grid_oracle(a, b, 11)) <= 1e-12);
    }
    CHECK_THROWS_AS(metric_d_grid_oracle(u, v, 1), std::domain_error);
}

TEST_CASE("grid oracle lower-bounds the metric within the slope bound") {
    SplitMix64 rng(11);
    const std::size_t grid = 2001;
    for (int i = 0; i < 300; ++i) {
        const FuzzyNumber u = random_fuzzy_number(rng);
        const FuzzyNumber v = random_fuzzy_number(rng);
        const double exact = metric_d(u, v);
        const double grid_max = metric_d_grid_oracle(u, v, grid);
        CHECK(exact >= grid_max - 1e-12);
        const double bound = endpoint_slope_bound(u, v) / static_cast<double>(grid - 1);
        CHECK(exact - grid_max <= bound + 1e-12);
    }
}

TEST_CASE("metric axioms on seeded samples") {
    SplitMix64 rng(12);
    for (int i = 0; i < 300; ++i) {
        const FuzzyNumber u = random_fuzzy_number(rng);
        const FuzzyNumber v = random_fuzzy_number(rng);
        const FuzzyNumber w = random_fuzzy_number(rng);
        const double duv = metric_d(u, v);
        CHECK(duv >= 0.0);
        CHECK(duv == metric_d(v, u)); // the computation is symmetric term by term
        CHECK(metric_d(u, w) <= duv + metric_d(v, w) + 1e-12);
        if (duv == 0.0) CHECK(u == v);
    }
}

TEST_CASE("identity of indiscernibles via canonical representation") {
    // an exactly collinear interior breakpoint is representation noise
    const FuzzyNumber padded = FuzzyNumber::from_cuts({{0.0, 0, 2}, {0.5, 0.5, 1.5}, {1.0, 1, 1}});
    const FuzzyNumber plain = FuzzyNumber::triangular(0, 1, 2);
    CHECK(padded == plain);
    CHECK(metric_d(padded, plain) == 0.0);
    CHECK(FuzzyNumber::triangular(4, 4, 4) == FuzzyNumber::crisp(4));
}

TEST_CASE("translation invariance and the additivity bound") {
    SplitMix64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const FuzzyNumber u = random_fuzzy_number(rng);
        const FuzzyNumber v = random_fuzzy_number(rng);
        const FuzzyNumber w = random_fuzzy_number(rng);
        const FuzzyNumber z = random_fuzzy_number(rng);
        CHECK(metric_d(u + w, v + w) == doctest::Approx(metric_d(u, v)).epsilon(1e-12));
        CHECK(metric_d(u + v, w + z) <= metric_d(u, w) + metric_d(v, z) + 1e-12);
        const double c = rng.uniform(-4, 4);
        CHECK(metric_d(c * u, c * v) == doctest::Approx(std::fabs(c) * metric_d(u, v)).epsilon(1e-12));
    }
}

TEST_CASE("cuts shrink as alpha grows") {
    SplitMix64 rng(14);
    for (int i = 0; i < 100; ++i) {
        const FuzzyNumber u = random_fuzzy_number(rng);
        double a = rng.uniform(0, 1), b = rng.uniform(0, 1);
        if (a > b) std::swap(a, b);
        const AlphaCut outer = u.cut(a);
        const AlphaCut inner = u.cut(b);
        CHECK(outer.lower <= inner.lower + 1e-12);
        CHECK(inner.upper <= outer.upper + 1e-12);
    }
}

TEST_CASE("json round trip") {
    CHECK(fuzzy_to_json(FuzzyNumber::crisp(5))["kind"] == "crisp");
    CHECK(fuzzy_to_json(FuzzyNumber::triangular(0, 1, 2))["kind"] == "triangular");
    CHECK(fuzzy_to_json(FuzzyNumber::trapezoidal(0, 1, 2, 3))["kind"] == "trapezoidal");
    SplitMix64 rng(15);
    for (int i = 0; i < 100; ++i) {
        const FuzzyNumber u = random_fuzzy_number(rng);
        CHECK(fuzzy_from_json(fuzzy_to_json(u)) == u);
    }
    CHECK_THROWS_AS(fuzzy_from_json(nlohmann::json{{"kind", "pentagon"}}), std::invalid_argument);
}

TEST_CASE("cli specs parse") {
    CHECK(parse_fuzzy_number("tri:-3,-2,-1") == FuzzyNumber::triangular(-3, -2, -1));
    CHECK(parse_fuzzy_number("trap:0,1,2,3") == FuzzyNumber::trapezoidal(0, 1, 2, 3));
    CHECK(parse_fuzzy_number("crisp:5") == FuzzyNumber::crisp(5));
    CHECK(parse_fuzzy_number("zero") == FuzzyNumber::zero());
    CHECK_THROWS_AS(parse_fuzzy_number("tri:1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fuzzy_number("circle:1"), std::invalid_argument);
}
