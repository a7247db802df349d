#include <doctest.h>

#include <random>

#include "ctn/extremal.hpp"
#include "ctn/stats.hpp"
#include "oracles.hpp"

using namespace ctn;

TEST_CASE("4-cycle list matches brute force")
{
    for (int n = 3; n <= 4; ++n) {
        const TranspositionGraph g(n);
        const oracle::Plain p(n);
        CHECK(all_four_cycles(g).size() == oracle::four_cycles(p).size());
    }
}

TEST_CASE("intersection classes match the naive classifier")
{
    std::mt19937 rng(41);
    for (int n = 3; n <= 4; ++n) {
        const TranspositionGraph g(n);
        const oracle::Plain p(n);
        const auto cycles = oracle::four_cycles(p);
        for (int k = 0; k < 10; ++k) {
            const auto m = oracle::random_mask(g, rng, 0.5);
            const auto ok = oracle::from_mask(g, m);
            std::array<std::uint64_t, kIntersectionClasses> ref{};
            for (const auto& h : cycles)
                ++ref[oracle::classify(h, ok)];
            CHECK(intersection_class_counts(g, m) == ref);
        }
    }
}

TEST_CASE("classify single 4-cycles")
{
    const TranspositionGraph g(3);
    const auto cycles = all_four_cycles(g);
    REQUIRE(!cycles.empty());
    const auto& h = cycles.front();
    const auto edges = cycle_edges(g, h);
    SubgraphMask m(g);
    CHECK(classify_intersection(g, m, h) == IntersectionClass::empty);
    m.insert(edges[0]);
    CHECK(classify_intersection(g, m, h) == IntersectionClass::one_edge);
    m.insert(edges[1]);
    CHECK(classify_intersection(g, m, h) == IntersectionClass::two_adjacent);
    m.erase(edges[1]);
    m.insert(edges[2]);
    CHECK(classify_intersection(g, m, h) == IntersectionClass::two_opposite);
    m.insert(edges[1]);
    CHECK(classify_intersection(g, m, h) == IntersectionClass::three_path);
    m.insert(edges[3]);
    CHECK(classify_intersection(g, m, h) == IntersectionClass::full);
    const auto six = find_cycle_of_length(g, SubgraphMask::full(g), 6);
    REQUIRE(six);
    CHECK_THROWS_AS(classify_intersection(g, m, *six), std::invalid_argument);
}

TEST_CASE("chi identities hold with zero residual")
{
    std::mt19937 rng(43);
    for (int n = 3; n <= 4; ++n) {
        const TranspositionGraph g(n);
        for (int k = 0; k < (n == 3 ? 100 : 25); ++k) {
            const auto m = oracle::random_mask(g, rng, static_cast<double>(k % 11) / 10.0);
            const auto chi = chi_vector(g, m);
            CHECK(chi.residual_sum == Rational(0));
            CHECK(chi.residual_weight == Rational(0));
            CHECK(chi.incidences_by_class == chi.incidences_by_census);
        }
    }
}

TEST_CASE("chi of empty and full masks")
{
    const TranspositionGraph g(4);
    const auto empty = chi_vector(g, SubgraphMask(g));
    CHECK(empty.chi0 == Rational(1));
    CHECK(empty.pi == Rational(0));
    const auto full = chi_vector(g, SubgraphMask::full(g));
    CHECK(full.chi4 == Rational(1));
    CHECK(full.n4 == 162);
}

TEST_CASE("C_6-free masks complete at most two 4-cycles per edge")
{
    for (int n = 3; n <= 4; ++n) {
        const TranspositionGraph g(n);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto r = n == 3 ? exact_max_cycle_free(g, 6) : local_search_max(g, 6, seed, 1000);
            REQUIRE(r.verified);
            CHECK(graph5_claim_check(g, r.mask).max_per_edge <= 2);
        }
    }
    const TranspositionGraph g(3);
    CHECK(graph5_claim_check(g, SubgraphMask(g)).max_per_edge == 0);
    // full CT_3 is not C_6-free; the value is only reported
    CHECK(graph5_claim_check(g, SubgraphMask::full(g)).max_per_edge == 4);
}

TEST_CASE("bound envelope")
{
    const auto b2 = bound_envelope(5, 2);
    CHECK(b2.kind == BoundKind::exact_ratio);
    CHECK(b2.part == BoundPart::iv);
    CHECK(b2.text == "3/4");
    CHECK(bound_envelope(5, 3).kind == BoundKind::asymptotic_ratio);
    CHECK(bound_envelope(5, 3).text == "sqrt(2)-1");
    CHECK(bound_envelope(5, 4).text == "-1/2");
    CHECK(bound_envelope(5, 6).text == "-2/3");
    CHECK(bound_envelope(5, 7).text == "-1/7");
    CHECK(bound_envelope(5, 9).text == "-1/12");
    CHECK(bound_envelope(5, 4).kind == BoundKind::exponent_only);
    CHECK_THROWS_AS(bound_envelope(5, 1), std::invalid_argument);
}
