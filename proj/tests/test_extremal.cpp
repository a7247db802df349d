#include <doctest.h>

#include <random>

#include "ctn/extremal.hpp"
#include "ctn/stats.hpp"
#include "oracles.hpp"

using namespace ctn;

namespace {

// Largest C_len-free subset of the 9 edges of CT_3, all 512 subsets.
std::size_t exhaustive_ct3(int len)
{
    const TranspositionGraph g(3);
    const oracle::Plain p(3);
    std::size_t best = 0;
    for (unsigned s = 0; s < 512; ++s) {
        SubgraphMask m(g);
        for (EdgeId e = 0; e < 9; ++e)
            if (s >> e & 1u)
                m.insert(e);
        if (m.edge_count() > best && !oracle::has_cycle(p, oracle::from_mask(g, m), len))
            best = m.edge_count();
    }
    return best;
}

} // namespace

TEST_CASE("exhaustive oracle values for CT_3")
{
    CHECK(exhaustive_ct3(4) == 6);
    CHECK(exhaustive_ct3(6) == 7);
    CHECK(exhaustive_ct3(8) == 9);
}

TEST_CASE("branch and bound matches the exhaustive oracle")
{
    const TranspositionGraph g(3);
    const oracle::Plain p(3);
    for (int len : {4, 6, 8}) {
        const auto r = exact_max_cycle_free(g, len);
        CHECK(r.edges == exhaustive_ct3(len));
        CHECK(r.verified);
        CHECK_FALSE(oracle::has_cycle(p, oracle::from_mask(g, r.mask), len));
        CHECK(r.pi == Rational(static_cast<std::int64_t>(r.edges), 9));
    }
    CHECK(exact_max_cycle_free(g, 4).pi == Rational(2, 3));
    CHECK_THROWS_AS(exact_max_cycle_free(TranspositionGraph(4), 4), std::invalid_argument);
}

TEST_CASE("local search reaches the optimum on CT_3 for C_4")
{
    const TranspositionGraph g(3);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto r = local_search_max(g, 4, seed, 2000);
        CHECK(r.verified);
        CHECK(r.edges == 6);
    }
}

TEST_CASE("local search output is cycle-free and never below greedy")
{
    const oracle::Plain p(4);
    const TranspositionGraph g(4);
    for (int len : {4, 6, 8}) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const auto r = local_search_max(g, len, seed, 1000);
            CHECK(r.verified);
            CHECK(r.edges >= r.greedy_edges);
            CHECK_FALSE(oracle::has_cycle(p, oracle::from_mask(g, r.mask), len));
            if (len == 4)
                CHECK(r.pi <= Rational(3, 4));
        }
    }
}

TEST_CASE("greedy output is maximal")
{
    const TranspositionGraph g(4);
    const oracle::Plain p(4);
    const auto r = local_search_max(g, 6, 9, 0, SearchMethod::greedy);
    CHECK(r.iterations == 0);
    CHECK(r.edges == r.greedy_edges);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (r.mask.contains(e))
            continue;
        auto more = r.mask;
        more.insert(e);
        CHECK(oracle::has_cycle(p, oracle::from_mask(g, more), 6));
    }
}

TEST_CASE("search is deterministic in its seed")
{
    const TranspositionGraph g(4);
    const auto a = local_search_max(g, 6, 42, 3000);
    const auto b = local_search_max(g, 6, 42, 3000);
    CHECK(a.mask == b.mask);
    CHECK(a.iterations == b.iterations);
    const auto best1 = best_local_search(g, 6, {1, 2, 3, 4}, 500);
    const auto best2 = best_local_search(g, 6, {1, 2, 3, 4}, 500);
    CHECK(best1.mask == best2.mask);
    CHECK(best1.seed == best2.seed);
    for (std::uint64_t s = 1; s <= 4; ++s)
        CHECK(local_search_max(g, 6, s, 500).edges <= best1.edges);
}

TEST_CASE("search caps")
{
    CHECK_THROWS_AS(local_search_max(TranspositionGraph(6), 4, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(local_search_max(TranspositionGraph(4), 12, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(local_search_max(TranspositionGraph(4), 5, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(parse_search_method("anneal"), std::invalid_argument);
    CHECK(parse_search_method("local") == SearchMethod::local);
}

TEST_CASE("rng is portable")
{
    // first outputs of the standard 64-bit Mersenne Twister with seed 5489
    Rng r(5489);
    CHECK(r.next() == 14514284786278117030ull);
    Rng a(1);
    Rng b(1);
    for (int k = 0; k < 100; ++k) {
        const auto x = a.below(7);
        CHECK(x < 7);
        CHECK(x == b.below(7));
    }
}

TEST_CASE("ramsey experiment")
{
    const TranspositionGraph g(3);
    const auto one = ramsey_experiment(g, 1, 4, 1);
    REQUIRE(one.monochromatic);
    CHECK(one.monochromatic->color == 0);
    CHECK(is_cycle(g, one.monochromatic->witness.vertices));

    // a supplied colouring: one class is a maximum C_4-free graph, the rest holds 3 edges
    const auto best = exact_max_cycle_free(g, 4);
    std::vector<int> coloring(g.edge_count(), 1);
    best.mask.for_each_edge([&](EdgeId e) { coloring[e] = 0; });
    const auto r = ramsey_experiment(g, 2, 4, 1, &coloring);
    CHECK(r.class_free[0]);
    CHECK(r.class_free[1]);
    CHECK_FALSE(r.monochromatic);

    const auto again = ramsey_experiment(g, 3, 6, 77);
    CHECK(again.coloring == ramsey_experiment(g, 3, 6, 77).coloring);
    std::vector<int> bad(g.edge_count(), 5);
    CHECK_THROWS_AS(ramsey_experiment(g, 2, 4, 1, &bad), std::invalid_argument);
}
