#include <doctest.h>

#include "fuzzyseq/index_set.hpp"
#include "fuzzyseq/serialization.hpp"
#include "support/test_support.hpp"

using namespace fuzzyseq;
using fuzzyseq::test::brute_prefix_count;

TEST_CASE("membership on the worked sets") {
    const IndexSet cubes = IndexSet::powers(3);
    CHECK(cubes.contains(1));
    CHECK(cubes.contains(8));
    CHECK(cubes.contains(27));
    CHECK_FALSE(cubes.contains(28));
    CHECK_FALSE(IndexSet::multiples(2).contains(7));
    CHECK(IndexSet::multiples(2).contains(8));
    CHECK_THROWS_AS(cubes.contains(0), std::domain_error);
}

TEST_CASE("closed-form prefix counts") {
    CHECK(IndexSet::multiples(2).prefix_count(10) == 5);
    CHECK(IndexSet::powers(3).prefix_count(1'000'000) == 100);
    CHECK(IndexSet::complement(IndexSet::multiples(2)).prefix_count(10) == 5);
    CHECK(IndexSet::powers(3).prefix_count(27) == 3);
    CHECK(IndexSet::powers(3).prefix_count(26) == 2);
    CHECK(IndexSet::powers(2).prefix_count(1'000'000'000'000'000'000ULL) == 1'000'000'000ULL);
    CHECK(IndexSet::all().prefix_count(0) == 0);
}

TEST_CASE("prefix counts equal brute-force scans on every variant") {
    const std::vector<IndexSet> sets{
        IndexSet::all(),
        IndexSet::empty(),
        IndexSet::multiples(1),
        IndexSet::multiples(3),
        IndexSet::multiples(7),
        IndexSet::powers(2),
        IndexSet::powers(3),
        IndexSet::powers(5),
        IndexSet::explicit_set({}),
        IndexSet::explicit_set({1, 5, 9, 1000, 1999}),
        IndexSet::complement(IndexSet::powers(2)),
        IndexSet::complement(IndexSet::explicit_set({2, 4})),
        IndexSet::union_of(IndexSet::multiples(2), IndexSet::powers(3)),
        IndexSet::union_of(IndexSet::powers(2), IndexSet::powers(3)),
        IndexSet::union_of(IndexSet::multiples(4), IndexSet::multiples(6)),
        IndexSet::union_of(IndexSet::explicit_set({3, 10, 11}), IndexSet::multiples(5)),
        IndexSet::union_of(IndexSet::multiples(12), IndexSet::powers(2)),
        IndexSet::complement(IndexSet::union_of(IndexSet::multiples(6), IndexSet::powers(2))),
        IndexSet::union_of(IndexSet::complement(IndexSet::multiples(2)),
                           IndexSet::union_of(IndexSet::powers(3), IndexSet::explicit_set({4}))),
    };
    for (const IndexSet& set : sets) {
        CAPTURE(set.describe());
        std::uint64_t running = 0;
        for (std::uint64_t n = 1; n <= 2000; ++n) {
            if (set.contains(n)) ++running;
            REQUIRE(set.prefix_count(n) == running);
        }
    }
}

TEST_CASE("prefix counts are monotone and complements partition") {
    const IndexSet a = IndexSet::union_of(IndexSet::multiples(3), IndexSet::powers(2));
    const IndexSet not_a = IndexSet::complement(a);
    std::uint64_t prev = 0;
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        const std::uint64_t c = a.prefix_count(n);
        CHECK(c >= prev);
        prev = c;
        CHECK(c + not_a.prefix_count(n) == n);
    }
}

TEST_CASE("mixed multiples/powers intersections count exactly") {
    // 12 | j^2 forces j to be a multiple of 6, so the union loses floor(sqrt(n))/6 overlaps
    const IndexSet u = IndexSet::union_of(IndexSet::multiples(12), IndexSet::powers(2));
    CHECK(u.prefix_count(144) == brute_prefix_count(u, 144));
    CHECK(u.prefix_count(100'000) == 100'000 / 12 + 316 - 316 / 6);
}

TEST_CASE("next_member") {
    CHECK(IndexSet::powers(3).next_member(9) == 27);
    CHECK(IndexSet::powers(3).next_member(27) == 27);
    CHECK(IndexSet::powers(3).next_member(1) == 1);
    CHECK(IndexSet::multiples(5).next_member(11) == 15);
    CHECK(IndexSet::explicit_set({3, 9}).next_member(4) == 9);
    CHECK_FALSE(IndexSet::explicit_set({3, 9}).next_member(10).has_value());
    CHECK_FALSE(IndexSet::empty().next_member(1).has_value());
    CHECK(IndexSet::all().next_member(17) == 17);
    CHECK(IndexSet::complement(IndexSet::multiples(2)).next_member(2) == 3);
    CHECK(IndexSet::union_of(IndexSet::powers(3), IndexSet::multiples(10)).next_member(9) == 10);
}

TEST_CASE("parse and json forms") {
    CHECK(parse_index_set("powers:q=3").describe() == "powers(q=3)");
    CHECK(parse_index_set("multiples:m=2").prefix_count(10) == 5);
    CHECK(parse_index_set("explicit:1,2,3").prefix_count(10) == 3);
    CHECK(parse_index_set("complement:multiples:m=2").prefix_count(10) == 5);
    CHECK(parse_index_set("all").contains(42));
    CHECK_THROWS_AS(parse_index_set("primes"), std::invalid_argument);
    CHECK_THROWS_AS(parse_index_set("powers:q=1"), std::invalid_argument);

    const nlohmann::json j = {{"set", "union"},
                              {"a", {{"set", "multiples"}, {"m", 2}}},
                              {"b", {{"set", "powers"}, {"q", 3}}}};
    const IndexSet u = index_set_from_json(j);
    CHECK(u.prefix_count(1000) == brute_prefix_count(u, 1000));
    CHECK_THROWS_AS(index_set_from_json(nlohmann::json{{"set", "primes"}}), std::invalid_argument);
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(IndexSet::multiples(0), std::invalid_argument);
    CHECK_THROWS_AS(IndexSet::powers(1), std::invalid_argument);
    CHECK_THROWS_AS(IndexSet::explicit_set({0}), std::invalid_argument);
}
