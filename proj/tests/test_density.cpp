#include <doctest.h>

#include <cmath>

#include "fuzzyseq/density.hpp"

using namespace fuzzyseq;

namespace {

const CheckpointSchedule kDefaults{};

} // namespace

TEST_CASE("checkpoint schedules") {
    const auto ns = make_checkpoints(kDefaults);
    REQUIRE(ns.size() == 9);
    CHECK(ns.front() == 1000);
    CHECK(ns[2] == 10'000);
    CHECK(ns.back() == 10'000'000);
    CHECK_THROWS_AS(make_checkpoints({1, 2.0, 4}), std::domain_error);
    CHECK_THROWS_AS(make_checkpoints({10, 0.9, 4}), std::domain_error);
    CHECK_THROWS_AS(make_checkpoints({10, 2.0, 1}), std::domain_error);
}

TEST_CASE("log-density of the cubes approaches one third") {
    const auto points = density_series({IndexSet::powers(3), Modulus::log1p(), 1.0}, kDefaults);
    const DensityPoint last = points.back();
    CHECK(last.n == 10'000'000);
    CHECK(last.prefix_count == 215);
    const double expected = std::log1p(215.0) / std::log1p(1e7);
    CHECK(last.estimate == doctest::Approx(expected).epsilon(1e-12));
    CHECK(std::fabs(last.estimate - 1.0 / 3.0) < 0.01);
}

TEST_CASE("the full set has identity-density exactly one") {
    for (const auto& p : density_series({IndexSet::all(), Modulus::identity(), 1.0}, kDefaults))
        CHECK(p.estimate == 1.0);
}

TEST_CASE("half-density at order one half grows like a square root") {
    const auto points = density_series({IndexSet::multiples(2), Modulus::power(1.0), 0.5}, kDefaults);
    // at n = 1e6 the estimate is (n/2) / sqrt(n) = 500
    CHECK(points[6].n == 1'000'000);
    CHECK(points[6].estimate == doctest::Approx(500.0).epsilon(1e-9));
}

TEST_CASE("bounded moduli are refused, bad beta rejected") {
    CHECK_THROWS_AS(density_series({IndexSet::powers(3), Modulus::saturating(), 1.0}, kDefaults),
                    BoundedModulusError);
    CHECK_THROWS_AS(density_series({IndexSet::powers(3), Modulus::identity(), 0.0}, kDefaults),
                    std::domain_error);
    CHECK_THROWS_AS(density_series({IndexSet::powers(3), Modulus::identity(), -1.0}, kDefaults),
                    std::domain_error);
}

TEST_CASE("classifier on canned series") {
    using Series = std::vector<std::pair<std::uint64_t, double>>;
    const Series constant{{10, 1.0}, {100, 1.0}, {1000, 1.0}, {10000, 1.0}};
    const LimitEstimate conv = classify_limit(constant, {});
    CHECK(conv.classification == LimitClass::Converged);
    CHECK(conv.value == 1.0);
    CHECK(conv.tail_variation == 0.0);

    Series doubling;
    double v = 500;
    for (std::uint64_t n = 10; doubling.size() < 8; n *= 10, v *= 2) doubling.push_back({n, v});
    const LimitEstimate div = classify_limit(doubling, {0.02, 100.0});
    CHECK(div.classification == LimitClass::DivergedToInfinity);

    // the four closed-form log-density values of the cubes at n = 1e4..1e7
    Series ex25;
    for (std::uint64_t n : {10'000, 100'000, 1'000'000, 10'000'000}) {
        const double cbrt = std::floor(std::cbrt(static_cast<double>(n)));
        ex25.push_back({n, std::log1p(cbrt) / std::log1p(static_cast<double>(n))});
    }
    const LimitEstimate third = classify_limit(ex25, {0.02, 1000.0});
    CHECK(third.classification == LimitClass::Converged);
    CHECK(std::fabs(third.value - 1.0 / 3.0) < 0.01);

    CHECK_THROWS_AS(classify_limit({{1, 0.0}, {2, 0.0}, {3, 0.0}}, {}), std::domain_error);
    CHECK_THROWS_AS(classify_limit(constant, {0.0, 1.0}), std::domain_error);
    Series unsorted{{10, 1.0}, {10, 1.0}, {1000, 1.0}, {10000, 1.0}};
    CHECK_THROWS_AS(classify_limit(unsorted, {}), std::domain_error);
}

TEST_CASE("a series can read as converged and increasing; converged wins") {
    using Series = std::vector<std::pair<std::uint64_t, double>>;
    Series s;
    for (std::uint64_t i = 0; i < 8; ++i) s.push_back({10 * (i + 1), 2000.0 + 0.001 * double(i)});
    const LimitEstimate est = classify_limit(s, {0.02, 1000.0});
    CHECK(est.classification == LimitClass::Converged);
}

TEST_CASE("finite sets have vanishing density estimates") {
    const DensityResult r = density({IndexSet::explicit_set({3, 7, 11}), Modulus::identity(), 0.5}, {});
    CHECK(r.estimate.classification == LimitClass::Converged);
    CHECK(converged_to_zero(r.estimate));
    CHECK(r.estimate.value < 1e-2);
}

TEST_CASE("cube set at order one half is still settling at 1e7") {
    // estimates n^(-1/6) fall too slowly for the default tolerance; the
    // classifier must refuse to call it rather than guess
    const DensityResult r = density({IndexSet::powers(3), Modulus::identity(), 0.5}, {});
    CHECK(r.estimate.classification == LimitClass::Inconclusive);
    CHECK(r.points.back().estimate == doctest::Approx(215.0 / std::sqrt(1e7)).epsilon(1e-12));
}

TEST_CASE("cube set at order one quarter diverges once the threshold suits the growth") {
    DensityOptions slow;
    slow.classify.div_threshold = 2.0;
    const DensityResult r = density({IndexSet::powers(3), Modulus::identity(), 0.25}, slow);
    CHECK(r.estimate.classification == LimitClass::DivergedToInfinity);
    // with the stock threshold of 1000 the finite prefix cannot certify it
    const DensityResult stock = density({IndexSet::powers(3), Modulus::identity(), 0.25}, {});
    CHECK(stock.estimate.classification == LimitClass::Inconclusive);
}

TEST_CASE("beta above one is computed but flagged") {
    const DensityResult r = density({IndexSet::multiples(2), Modulus::identity(), 1.2}, {});
    CHECK(r.beta_outside_definition);
    CHECK(converged_to_zero(r.estimate));
}

TEST_CASE("order monotonicity of the estimates") {
    for (auto [beta, gamma] : std::vector<std::pair<double, double>>{{0.25, 0.5}, {0.5, 1.0}}) {
        const auto lo = density_series({IndexSet::powers(3), Modulus::log1p(), beta}, kDefaults);
        const auto hi = density_series({IndexSet::powers(3), Modulus::log1p(), gamma}, kDefaults);
        for (std::size_t i = 0; i < lo.size(); ++i) CHECK(hi[i].estimate <= lo[i].estimate + 1e-15);
    }
}

TEST_CASE("zero f-density forces zero plain density, not conversely") {
    // forward direction on the cubes with a power modulus
    const DensityResult with_f = density({IndexSet::powers(3), Modulus::power(0.5), 1.0}, {});
    const DensityResult plain = density({IndexSet::powers(3), Modulus::identity(), 1.0}, {});
    CHECK(converged_to_zero(with_f.estimate));
    CHECK(converged_to_zero(plain.estimate));

    // the converse fails: the cubes have zero natural density but log-density near 1/3
    const DensityResult log_density = density({IndexSet::powers(3), Modulus::log1p(), 1.0}, {});
    CHECK(log_density.estimate.classification == LimitClass::Converged);
    CHECK_FALSE(converged_to_zero(log_density.estimate));
    CHECK(log_density.estimate.value > 0.3);
}

TEST_CASE("neither the even numbers nor their complement settle under a power modulus") {
    DensityOptions opts;
    opts.schedule = {1000, 3.1622776601683795, 21}; // to 1e13
    for (const IndexSet& set : {IndexSet::multiples(2), IndexSet::complement(IndexSet::multiples(2))}) {
        const DensityResult r = density({set, Modulus::power(0.5), 0.5}, opts);
        CHECK(r.estimate.classification == LimitClass::DivergedToInfinity);
    }
}
