#include <doctest.h>

#include <cstdlib>

#include "fuzzyseq/fuzzy_sequence.hpp"
#include "fuzzyseq/serialization.hpp"
#include "support/test_support.hpp"

using namespace fuzzyseq;
using fuzzyseq::test::brute_exceed_count;
using fuzzyseq::test::brute_modulus_sum;

TEST_CASE("presets reproduce the worked sequences") {
    CHECK(preset_sequence("ex3.4").value(1) == FuzzyNumber::triangular(-3, -2, -1));
    CHECK(preset_sequence("ex3.4").value(2) == FuzzyNumber::triangular(1, 2, 3));
    CHECK(preset_sequence("ex3.5").value(27) == FuzzyNumber::triangular(-3, -2, -1));
    CHECK(preset_sequence("ex3.5").value(28) == FuzzyNumber::triangular(1, 2, 3));
    CHECK(preset_sequence("thm3.7").value(49) == FuzzyNumber::triangular(-3, -2, -1));
    CHECK(preset_sequence("thm3.9").value(8) == FuzzyNumber::triangular(7, 8, 9));
    CHECK(preset_sequence("thm3.9").value(2) == FuzzyNumber::zero());
    CHECK(preset_sequence("thm3.15").value(5) == FuzzyNumber::crisp(0));
    CHECK(preset_sequence("thm3.15").value(8) == FuzzyNumber::triangular(1, 2, 3));
    CHECK_THROWS_AS(preset_sequence("ex9.9"), std::invalid_argument);
    CHECK(preset_sequence_names().size() == 5);
}

TEST_CASE("exceed counts on the worked examples") {
    const FuzzyNumber pos = FuzzyNumber::triangular(1, 2, 3);
    const FuzzyNumber neg = FuzzyNumber::triangular(-3, -2, -1);
    CHECK(preset_sequence("ex3.5").exceed_count(pos, 1.0, 1'000'000) == 100);
    CHECK(preset_sequence("ex3.4").exceed_count(neg, 1.0, 10) == 5);
    CHECK(preset_sequence("ex3.4").exceed_count(neg, 100.0, 10'000) == 0);
    CHECK_THROWS_AS(preset_sequence("ex3.4").exceed_count(neg, 0.0, 10), std::domain_error);
    CHECK_THROWS_AS(preset_sequence("ex3.4").value(0), std::domain_error);
}

TEST_CASE("closed-form exceed counts match brute scans") {
    const FuzzyNumber zero = FuzzyNumber::zero();
    const FuzzyNumber pos = FuzzyNumber::triangular(1, 2, 3);
    const std::vector<FuzzySequence> seqs{
        preset_sequence("ex3.4"), preset_sequence("ex3.5"), preset_sequence("thm3.7"),
        preset_sequence("thm3.9"), preset_sequence("thm3.15"),
        // dense on-set exercises the growing-peak threshold logic
        FuzzySequence::growing_peak(IndexSet::multiples(3)),
        FuzzySequence::growing_peak(IndexSet::explicit_set({2, 3, 50, 51, 700})),
    };
    for (const FuzzySequence& seq : seqs) {
        CAPTURE(seq.describe());
        for (const FuzzyNumber& target : {zero, pos}) {
            for (double eps : {0.5, 1.0, 3.0, 7.5, 40.0}) {
                std::uint64_t running = 0;
                for (std::uint64_t n = 1; n <= 1200; ++n) {
                    if (metric_d(seq.value(n), target) >= eps) ++running;
                    REQUIRE(seq.exceed_count(target, eps, n) == running);
                }
            }
        }
    }
}

TEST_CASE("custom rules scan and are chunk-independent") {
    const FuzzySequence seq = FuzzySequence::custom([](std::uint64_t k) {
        return k % 2 == 1 ? FuzzyNumber::triangular(-3, -2, -1) : FuzzyNumber::triangular(1, 2, 3);
    });
    const FuzzyNumber neg = FuzzyNumber::triangular(-3, -2, -1);
    CHECK(seq.exceed_count(neg, 1.0, 10) == 5);
    CHECK(seq.exceed_count(neg, 1.0, 9999) == brute_exceed_count(seq, neg, 1.0, 9999));

    setenv("FUZZYSEQ_THREADS", "1", 1);
    const std::uint64_t serial = seq.exceed_count(neg, 1.0, 50'000);
    setenv("FUZZYSEQ_THREADS", "7", 1);
    const std::uint64_t chunked = seq.exceed_count(neg, 1.0, 50'000);
    unsetenv("FUZZYSEQ_THREADS");
    CHECK(serial == chunked);
    CHECK(serial == 25'000);
}

TEST_CASE("modulus distance sums") {
    const FuzzySequence w = preset_sequence("thm3.15");
    CHECK(w.modulus_distance_sum(FuzzyNumber::zero(), Modulus::identity(), 1'000'000) ==
          doctest::Approx(300.0).epsilon(1e-12));
    const FuzzySequence zeros = FuzzySequence::two_valued(IndexSet::all(), FuzzyNumber::zero(),
                                                          FuzzyNumber::zero());
    CHECK(zeros.modulus_distance_sum(FuzzyNumber::zero(), Modulus::identity(), 1000) == 0.0);
    const FuzzySequence ones = FuzzySequence::two_valued(IndexSet::all(), FuzzyNumber::crisp(1),
                                                         FuzzyNumber::zero());
    CHECK(ones.modulus_distance_sum(FuzzyNumber::zero(), Modulus::identity(), 1000) ==
          doctest::Approx(1000.0));
}

TEST_CASE("sums match brute scans, multi-prefix included") {
    const FuzzyNumber zero = FuzzyNumber::zero();
    const std::vector<FuzzySequence> seqs{
        preset_sequence("thm3.9"), preset_sequence("thm3.15"),
        FuzzySequence::growing_peak(IndexSet::multiples(4)),
        FuzzySequence::custom([](std::uint64_t k) { return FuzzyNumber::crisp(k % 3 == 0 ? 1.0 : 0.0); }),
    };
    const std::vector<std::uint64_t> prefixes{1, 7, 64, 100, 999, 1000};
    for (const FuzzySequence& seq : seqs) {
        CAPTURE(seq.describe());
        for (const Modulus& f : {Modulus::identity(), Modulus::log1p(), Modulus::saturating()}) {
            const std::vector<double> sums = seq.modulus_distance_sums(zero, f, prefixes);
            for (std::size_t i = 0; i < prefixes.size(); ++i) {
                const double expect = brute_modulus_sum(seq, zero, f, prefixes[i]);
                REQUIRE(sums[i] == doctest::Approx(expect).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("sequence json specs") {
    const nlohmann::json spec = {{"rule", "two_valued"},
                                 {"on", {{"set", "powers"}, {"q", 3}}},
                                 {"value_on", {{"kind", "triangular"}, {"a", -3}, {"b", -2}, {"c", -1}}},
                                 {"value_off", {{"kind", "triangular"}, {"a", 1}, {"b", 2}, {"c", 3}}}};
    const FuzzySequence seq = sequence_from_json(spec);
    CHECK(seq.value(8) == FuzzyNumber::triangular(-3, -2, -1));
    CHECK(seq.value(9) == FuzzyNumber::triangular(1, 2, 3));
    CHECK(sequence_from_json(nlohmann::json{{"preset", "ex3.4"}}).value(1) ==
          FuzzyNumber::triangular(-3, -2, -1));
    const nlohmann::json peak = {{"rule", "growing_peak"}, {"on", {{"set", "powers"}, {"q", 3}}}};
    CHECK(sequence_from_json(peak).value(8) == FuzzyNumber::triangular(7, 8, 9));
    const nlohmann::json alt = {{"rule", "alternating"},
                                {"value_odd", {{"kind", "crisp"}, {"x", 1}}},
                                {"value_even", {{"kind", "crisp"}, {"x", 2}}}};
    CHECK(sequence_from_json(alt).value(2) == FuzzyNumber::crisp(2));
    CHECK_THROWS_AS(sequence_from_json(nlohmann::json{{"rule", "periodic"}}), std::invalid_argument);
}
