#include <doctest.h>

#include <random>

#include "ctn/aux_graph.hpp"
#include "ctn/extremal.hpp"
#include "oracles.hpp"

using namespace ctn;

namespace {

void compare_with_naive(const TranspositionGraph& g, const oracle::Plain& p, const SubgraphMask& m)
{
    const AuxBuilder builder(g, m);
    const auto ok = oracle::from_mask(g, m);
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        for (int i = 0; i <= g.n(); ++i)
            for (const auto kind : {AuxKind::g_aux, AuxKind::h_aux}) {
                const auto aux = builder.build(x, i, kind);
                const auto ref = oracle::naive_aux(p, ok, static_cast<int>(x), i, kind == AuxKind::h_aux);
                REQUIRE(aux.vertex_count() == static_cast<int>(ref.vertices.size()));
                for (int a = 0; a < aux.vertex_count(); ++a)
                    CHECK(aux.vertex(a) == static_cast<VertexId>(ref.vertices[a]));
                CHECK(aux.edge_count() == ref.connectors.size());
                for (const auto& [ab, ws] : ref.connectors) {
                    const auto got = aux.connectors(ab.first, ab.second);
                    CHECK(std::vector<int>(got.begin(), got.end()) == ws);
                }
            }
}

} // namespace

TEST_CASE("families")
{
    CHECK(family(4, 0).members.size() == 6);
    CHECK(family(4, 2).members.size() == 3);
    for (const auto& t : family(5, 3).members)
        CHECK(t.support().contains(3));
    CHECK_THROWS_AS(family(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(family(4, -1), std::invalid_argument);
    CHECK(support_overlap(0) == 0);
    CHECK(support_overlap(2) == 1);
}

TEST_CASE("aux graphs match the definition on random masks")
{
    std::mt19937 rng(17);
    for (int n = 3; n <= 4; ++n) {
        const TranspositionGraph g(n);
        const oracle::Plain p(n);
        compare_with_naive(g, p, SubgraphMask::full(g));
        for (int k = 0; k < (n == 3 ? 20 : 4); ++k)
            compare_with_naive(g, p, oracle::random_mask(g, rng, 0.6));
    }
}

TEST_CASE("every aux cycle of full CT_3 lifts")
{
    const TranspositionGraph g(3);
    const auto full = SubgraphMask::full(g);
    const AuxBuilder builder(g, full);
    std::size_t lifted = 0;
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        for (int i = 0; i <= 3; ++i) {
            const auto aux = builder.build(x, i, AuxKind::g_aux);
            aux.for_each_cycle(3, [&](std::span<const int> c) {
                const auto lift = lift_cycle(g, full, aux, c);
                CHECK(lift.length() == 6);
                CHECK(is_cycle(g, lift.vertices, &full));
                ++lifted;
                return true;
            });
        }
    const oracle::Plain p(3);
    std::size_t ref = 0;
    for (int x = 0; x < 6; ++x)
        for (int i = 0; i <= 3; ++i) {
            const auto naive = oracle::naive_aux(p, oracle::all_edges(), x, i, false);
            const int k = static_cast<int>(naive.vertices.size());
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    for (int c = b + 1; c < k; ++c)
                        ref += naive.connectors.count({a, b}) && naive.connectors.count({b, c})
                               && naive.connectors.count({a, c});
        }
    CHECK(lifted == ref);
    // each family of CT_3 is too small to carry a triangle
    CHECK(lifted == 0);
}

TEST_CASE("random aux cycles at n = 4 lift to valid cycles")
{
    std::mt19937 rng(23);
    const TranspositionGraph g(4);
    std::size_t checked = 0;
    for (int trial = 0; trial < 400 && checked < 100; ++trial) {
        const auto m = oracle::random_mask(g, rng, 0.8);
        const VertexId x = rng() % g.vertex_count();
        const int i = static_cast<int>(rng() % 5);
        const auto aux = AuxBuilder(g, m).build(x, i, AuxKind::g_aux);
        for (int l = 3; l <= 4; ++l)
            if (const auto c = aux.find_cycle(l)) {
                const auto lift = lift_cycle(g, m, aux, *c);
                CHECK(lift.length() == 2 * l);
                CHECK(is_cycle(g, lift.vertices, &m));
                ++checked;
            }
    }
    CHECK(checked >= 100);
}

TEST_CASE("aux cycle enumeration matches a brute-force count")
{
    const TranspositionGraph g(4);
    const auto aux = build_aux(g, SubgraphMask::full(g), Permutation(4), 0, AuxKind::g_aux);
    const int k = aux.vertex_count();
    // triangles by triple loop
    int tri = 0;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c)
                tri += aux.adjacent(a, b) && aux.adjacent(b, c) && aux.adjacent(a, c);
    int seen = 0;
    aux.for_each_cycle(3, [&](std::span<const int>) {
        ++seen;
        return true;
    });
    CHECK(seen == tri);
    CHECK_THROWS_AS(aux.for_each_cycle(2, [](std::span<const int>) { return true; }), std::invalid_argument);
}

TEST_CASE("lifting rejects a mask that does not own the aux graph")
{
    const TranspositionGraph g(4);
    const auto full = SubgraphMask::full(g);
    const auto aux = AuxBuilder(g, full).build(0, 1, AuxKind::g_aux);
    const auto c = aux.find_cycle(3);
    REQUIRE(c);
    CHECK_THROWS_AS(lift_cycle(g, SubgraphMask(g), aux, *c), std::runtime_error);
    const std::vector<int> short_cycle{0, 1};
    CHECK_THROWS_AS(lift_cycle(g, full, aux, short_cycle), std::invalid_argument);
}

TEST_CASE("aux vertex count is exact for arbitrary masks")
{
    std::mt19937 rng(29);
    for (int n = 3; n <= 4; ++n) {
        const TranspositionGraph g(n);
        for (int k = 0; k < 10; ++k) {
            const auto m = oracle::random_mask(g, rng, 0.1 * k);
            const auto r = verify_identities(g, m);
            CHECK(r.eq1.holds());
            CHECK(r.eq1.rhs == 3 * static_cast<std::int64_t>(g.vertex_count()) * n * (n - 1) / 2);
            CHECK(r.h_vertices.holds());
        }
    }
}

TEST_CASE("aux edge bound is tight on full CT_3")
{
    const TranspositionGraph g(3);
    const auto r = verify_identities(g, SubgraphMask::full(g));
    CHECK(r.eq2.lhs == 18);
    CHECK(r.eq2.rhs == 18);
    CHECK(r.eq1.lhs == 54);
}

TEST_CASE("aux edge bound on random masks")
{
    std::mt19937 rng(31);
    for (int n = 3; n <= 4; ++n) {
        const TranspositionGraph g(n);
        for (int k = 0; k < 20; ++k)
            CHECK(verify_identities(g, oracle::random_mask(g, rng, 0.5)).eq2.holds());
    }
}

TEST_CASE("C_2l-free masks have no aux l-cycles")
{
    for (int n = 3; n <= 4; ++n) {
        const TranspositionGraph g(n);
        for (int forbid : {6, 8}) {
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                const auto r = n == 3 ? exact_max_cycle_free(g, forbid) : local_search_max(g, forbid, seed, 500);
                REQUIRE(r.verified);
                CHECK_FALSE(find_aux_cycle(g, r.mask, forbid / 2, AuxKind::g_aux).has_value());
                CHECK_FALSE(find_aux_cycle(g, r.mask, forbid / 2, AuxKind::h_aux).has_value());
                if (forbid == 6) {
                    const auto mc = h_aux_mantel_check(g, r.mask);
                    CHECK(mc.with_triangle == 0);
                    CHECK(mc.bound_violations == 0);
                    CHECK(verify_identities(g, r.mask).eq8.holds());
                }
            }
        }
    }
}

TEST_CASE("full CT_4 has aux triangles")
{
    const TranspositionGraph g(4);
    const auto hit = find_aux_cycle(g, SubgraphMask::full(g), 3);
    REQUIRE(hit);
    const auto aux = build_aux(g, SubgraphMask::full(g), g.vertex(hit->x), hit->i, hit->kind);
    const auto lift = lift_cycle(g, SubgraphMask::full(g), aux, hit->cycle);
    CHECK(is_cycle(g, lift.vertices));
}
