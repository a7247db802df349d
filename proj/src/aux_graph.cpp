#include "ctn/aux_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "ctn/parallel.hpp"
#include "ctn/stats.hpp"

namespace ctn {

TranspositionFamily family(int n, int i)
{
    if (i < 0 || i > n)
        throw std::invalid_argument("family index must lie in [0, " + std::to_string(n) + "], got "
                                    + std::to_string(i));
    TranspositionFamily f;
    f.i = i;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (i == 0 || a == i || b == i)
                f.members.push_back(Transposition{a, b});
    return f;
}

std::span<const VertexId> AuxGraph::connectors(int a, int b) const
{
    const int k = edge_index(a, b);
    if (k < 0)
        return {};
    return edges_[k].connectors;
}

void AuxGraph::for_each_cycle(int l, const std::function<bool(std::span<const int>)>& visit) const
{
    if (l < 3)
        throw std::invalid_argument("aux cycles need length >= 3");
    const int k = vertex_count();
    if (l > k)
        return;
    std::vector<int> path(static_cast<std::size_t>(l));
    std::vector<char> used(static_cast<std::size_t>(k), 0);
    int start = 0;
    std::function<bool(int)> extend = [&](int depth) -> bool {
        const int v = path[depth - 1];
        if (depth == l) {
            if (adjacent(v, start) && path[1] < v)
                return visit(std::span<const int>(path.data(), path.size()));
            return true;
        }
        for (int w = start + 1; w < k; ++w) {
            if (used[w] || !adjacent(v, w))
                continue;
            used[w] = 1;
            path[depth] = w;
            const bool keep_going = extend(depth + 1);
            used[w] = 0;
            if (!keep_going)
                return false;
        }
        return true;
    };
    for (start = 0; start < k; ++start) {
        path[0] = start;
        used[start] = 1;
        const bool keep_going = extend(1);
        used[start] = 0;
        if (!keep_going)
            return;
    }
}

std::optional<std::vector<int>> AuxGraph::find_cycle(int l) const
{
    std::optional<std::vector<int>> found;
    for_each_cycle(l, [&](std::span<const int> c) {
        found = std::vector<int>(c.begin(), c.end());
        return false;
    });
    return found;
}

AuxBuilder::AuxBuilder(const TranspositionGraph& g, const SubgraphMask& mask)
    : g_(g), mask_(mask), adj_(g, mask)
{
}

AuxGraph AuxBuilder::build(VertexId x, int i, AuxKind kind) const
{
    AuxGraph aux;
    aux.x_ = x;
    aux.i_ = i;
    aux.kind_ = kind;
    for (const auto& y : family(g_.n(), i).members) {
        const int t = g_.transposition_index(y.a, y.b);
        if (kind == AuxKind::h_aux && mask_.contains(g_.edge_id(x, t)))
            continue;
        aux.vertices_.push_back(g_.neighbor(x, t));
        aux.generators_.push_back(y);
    }

    const auto k = aux.vertices_.size();
    aux.matrix_.assign(k * k, -1);
    const int overlap = support_overlap(i);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            if ((aux.generators_[a].support() & aux.generators_[b].support()).size() != overlap)
                continue;
            const VertexId u = aux.vertices_[a];
            const VertexId z = aux.vertices_[b];
            std::vector<VertexId> connectors;
            for (const auto& arc : adj_.out[u]) {
                if (arc.to == x)
                    continue;
                const auto& around = adj_.out[arc.to];
                if (std::any_of(around.begin(), around.end(), [z](const auto& s) { return s.to == z; }))
                    connectors.push_back(arc.to);
            }
            if (connectors.empty())
                continue;
            std::sort(connectors.begin(), connectors.end());
            const int idx = static_cast<int>(aux.edges_.size());
            aux.edges_.push_back(AuxGraph::Edge{static_cast<int>(a), static_cast<int>(b), std::move(connectors)});
            aux.matrix_[a * k + b] = aux.matrix_[b * k + a] = idx;
        }
    return aux;
}

AuxGraph build_aux(const TranspositionGraph& g, const SubgraphMask& mask, const Permutation& x, int i, AuxKind kind)
{
    return AuxBuilder(g, mask).build(g.id(x), i, kind);
}

namespace {

struct SweepTotals
{
    std::int64_t g_vertices = 0;
    std::int64_t g_edges = 0;
    std::int64_t h_vertices = 0;
    std::int64_t h_edges = 0;
};

} // namespace

IdentityReport verify_identities(const TranspositionGraph& g, const SubgraphMask& mask)
{
    const int n = g.n();
    if (n > 5)
        throw std::invalid_argument("verify_identities builds every aux graph and is capped at n <= 5");
    const AuxBuilder builder(g, mask);
    const int workers = thread_count();
    std::vector<SweepTotals> partial(static_cast<std::size_t>(workers));
    parallel_blocks(g.vertex_count(), workers, [&](int w, std::size_t begin, std::size_t end) {
        SweepTotals t;
        for (std::size_t x = begin; x < end; ++x)
            for (int i = 0; i <= n; ++i) {
                const auto ga = builder.build(static_cast<VertexId>(x), i, AuxKind::g_aux);
                const auto ha = builder.build(static_cast<VertexId>(x), i, AuxKind::h_aux);
                t.g_vertices += ga.vertex_count();
                t.g_edges += static_cast<std::int64_t>(ga.edge_count());
                t.h_vertices += ha.vertex_count();
                t.h_edges += static_cast<std::int64_t>(ha.edge_count());
            }
        partial[static_cast<std::size_t>(w)] = t;
    });
    SweepTotals total;
    for (const auto& p : partial) {
        total.g_vertices += p.g_vertices;
        total.g_edges += p.g_edges;
        total.h_vertices += p.h_vertices;
        total.h_edges += p.h_edges;
    }

    const auto deg = degree_sequence(g, mask);
    const std::int64_t m = g.degree();
    std::int64_t two_paths = 0;
    std::int64_t h_rhs = 0;
    for (int d : deg) {
        two_paths += static_cast<std::int64_t>(d) * (d - 1) / 2;
        h_rhs += 3 * (m - d);
    }
    const auto classes = intersection_class_counts(g, mask);
    const auto cycle_term = 4 * static_cast<std::int64_t>(classes[static_cast<int>(IntersectionClass::full)])
                            + 2 * static_cast<std::int64_t>(classes[static_cast<int>(IntersectionClass::three_path)]);

    IdentityReport r;
    r.eq1 = {total.g_vertices, 3 * static_cast<std::int64_t>(g.vertex_count()) * m, true};
    r.eq2 = {total.g_edges, two_paths, false};
    r.eq8 = {total.h_edges + cycle_term, two_paths, false};
    r.h_vertices = {total.h_vertices, h_rhs, true};
    return r;
}

CycleWitness lift_cycle(const TranspositionGraph& g, const SubgraphMask& mask, const AuxGraph& aux,
                        std::span<const int> cycle)
{
    const auto l = cycle.size();
    if (l < 3)
        throw std::invalid_argument("lift_cycle needs an aux cycle of length >= 3");
    std::vector<VertexId> chosen(l);
    std::vector<VertexId> used;

    std::function<bool(std::size_t)> pick = [&](std::size_t j) -> bool {
        if (j == l)
            return true;
        const auto cands = aux.connectors(cycle[j], cycle[(j + 1) % l]);
        if (cands.empty())
            throw std::runtime_error("aux graph has no connector for a cycle edge; it was not built from this G");
        for (auto w : cands) {
            if (std::find(used.begin(), used.end(), w) != used.end())
                continue;
            chosen[j] = w;
            used.push_back(w);
            if (pick(j + 1))
                return true;
            used.pop_back();
        }
        return false;
    };
    if (!pick(0))
        throw std::runtime_error("no pairwise distinct choice of connecting vertices exists for this aux cycle");

    std::vector<VertexId> seq;
    seq.reserve(2 * l);
    for (std::size_t j = 0; j < l; ++j) {
        seq.push_back(aux.vertex(cycle[j]));
        seq.push_back(chosen[j]);
    }
    if (!is_cycle(g, seq, &mask))
        throw std::runtime_error("lifted sequence is not a cycle of G; the aux graph is inconsistent with G");
    return CycleWitness{std::move(seq)};
}

std::optional<AuxCycleHit> find_aux_cycle(const TranspositionGraph& g, const SubgraphMask& mask, int l, AuxKind kind)
{
    const AuxBuilder builder(g, mask);
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        for (int i = 0; i <= g.n(); ++i) {
            const auto aux = builder.build(x, i, kind);
            if (auto c = aux.find_cycle(l))
                return AuxCycleHit{x, i, kind, std::move(*c)};
        }
    return std::nullopt;
}

MantelCheck h_aux_mantel_check(const TranspositionGraph& g, const SubgraphMask& mask)
{
    const AuxBuilder builder(g, mask);
    const auto deg = degree_sequence(g, mask);
    const std::int64_t m = g.degree();
    const std::int64_t family_size = g.n() - 1;
    MantelCheck out;
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        for (int i = 0; i <= g.n(); ++i) {
            const auto h = builder.build(x, i, AuxKind::h_aux);
            ++out.graphs;
            if (h.has_triangle())
                ++out.with_triangle;
            const std::int64_t side = i == 0 ? m - deg[x] : family_size;
            if (4 * static_cast<std::int64_t>(h.edge_count()) > side * side)
                ++out.bound_violations;
        }
    return out;
}

} // namespace ctn
