#include "ctn/transposition_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctn {

TranspositionGraph::TranspositionGraph(int n)
    : n_(n)
{
    if (n < 3 || n > kMaxDegree)
        throw std::invalid_argument("CT_n needs 3 <= n <= 8, got " + std::to_string(n));
    vertex_count_ = static_cast<std::uint32_t>(factorial(n));

    t_index_.assign(n + 1, std::vector<int>(n + 1, -1));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            t_index_[a][b] = t_index_[b][a] = static_cast<int>(transpositions_.size());
            transpositions_.push_back(Transposition{a, b});
        }

    parity_.resize(vertex_count_);
    class_pos_.resize(vertex_count_);
    std::uint32_t even_count = 0;
    std::uint32_t odd_count = 0;
    for (VertexId v = 0; v < vertex_count_; ++v) {
        const auto p = unrank(n, v);
        parity_[v] = parity(p) == Parity::odd ? 1 : 0;
        if (parity_[v] == 0) {
            class_pos_[v] = even_count++;
            even_vertices_.push_back(v);
        } else {
            class_pos_[v] = odd_count++;
        }
    }

    if (n <= 5) {
        const int d = degree();
        table_.resize(static_cast<std::size_t>(vertex_count_) * d);
        for (VertexId v = 0; v < vertex_count_; ++v) {
            const auto p = unrank(n, v);
            for (int t = 0; t < d; ++t) {
                const auto& tr = transpositions_[t];
                table_[static_cast<std::size_t>(v) * d + t] = rank(p.swapped_positions(tr.a - 1, tr.b - 1));
            }
        }
    }
}

int TranspositionGraph::transposition_index(int a, int b) const
{
    if (a < 1 || b < 1 || a > n_ || b > n_ || a == b)
        throw std::invalid_argument("no transposition (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return t_index_[a][b];
}

VertexId TranspositionGraph::id(const Permutation& p) const
{
    if (p.degree() != n_)
        throw std::invalid_argument("permutation degree " + std::to_string(p.degree()) + " does not match CT_"
                                    + std::to_string(n_));
    return rank(p);
}

VertexId TranspositionGraph::neighbor(VertexId v, int t) const
{
    if (!table_.empty())
        return table_[static_cast<std::size_t>(v) * degree() + t];
    const auto& tr = transpositions_[t];
    return rank(vertex(v).swapped_positions(tr.a - 1, tr.b - 1));
}

std::vector<VertexId> TranspositionGraph::neighbor_ids(VertexId v) const
{
    std::vector<VertexId> out(degree());
    for (int t = 0; t < degree(); ++t)
        out[t] = neighbor(v, t);
    return out;
}

std::vector<Permutation> TranspositionGraph::neighbors(const Permutation& x) const
{
    if (x.degree() != n_)
        throw std::invalid_argument("permutation degree does not match graph");
    std::vector<Permutation> out;
    out.reserve(degree());
    for (const auto& tr : transpositions_)
        out.push_back(x.swapped_positions(tr.a - 1, tr.b - 1));
    return out;
}

std::optional<int> TranspositionGraph::connecting_transposition(VertexId u, VertexId z) const
{
    if (parity_[u] == parity_[z])
        return std::nullopt;
    const auto pu = vertex(u);
    const auto pz = vertex(z);
    int diff[2] = {-1, -1};
    int k = 0;
    for (int i = 0; i < n_; ++i)
        if (pu[i] != pz[i]) {
            if (k == 2)
                return std::nullopt;
            diff[k++] = i;
        }
    if (k != 2)
        return std::nullopt;
    return t_index_[diff[0] + 1][diff[1] + 1];
}

EdgeId TranspositionGraph::edge_id(VertexId v, int t) const
{
    const VertexId anchor = parity_[v] == 0 ? v : neighbor(v, t);
    return class_pos_[anchor] * static_cast<EdgeId>(degree()) + static_cast<EdgeId>(t);
}

EdgeId TranspositionGraph::edge_id(VertexId u, VertexId z) const
{
    const auto e = find_edge(u, z);
    if (!e)
        throw std::invalid_argument("vertices " + vertex(u).one_line() + " and " + vertex(z).one_line()
                                    + " are not adjacent in CT_" + std::to_string(n_));
    return *e;
}

std::optional<EdgeId> TranspositionGraph::find_edge(VertexId u, VertexId z) const
{
    const auto t = connecting_transposition(u, z);
    if (!t)
        return std::nullopt;
    return edge_id(u, *t);
}

EdgeEnds TranspositionGraph::edge_ends(EdgeId e) const
{
    if (e >= edge_count())
        throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
    const auto d = static_cast<EdgeId>(degree());
    const VertexId even = even_vertices_[e / d];
    const int t = static_cast<int>(e % d);
    return EdgeEnds{even, neighbor(even, t), t};
}

PointSet TranspositionGraph::edge_support(const Permutation& u, const Permutation& z) const
{
    const auto zu = compose(z, inverse(u));
    Transposition t;
    if (!as_transposition(zu, &t))
        throw std::invalid_argument("edge_support: " + u.one_line() + " and " + z.one_line() + " are not adjacent");
    return t.support();
}

std::vector<EdgeId> SubgraphMask::edges() const
{
    std::vector<EdgeId> out;
    for_each_edge([&](EdgeId e) { out.push_back(e); });
    return out;
}

PointSet subgraph_support(const TranspositionGraph& g, const SubgraphMask& mask)
{
    PointSet s;
    mask.for_each_edge([&](EdgeId e) { s |= g.edge_support(e); });
    return s;
}

PointSet subgraph_support(const TranspositionGraph& g, const std::vector<EdgeId>& edges)
{
    PointSet s;
    for (auto e : edges)
        s |= g.edge_support(e);
    return s;
}

std::vector<int> degree_sequence(const TranspositionGraph& g, const SubgraphMask& mask)
{
    std::vector<int> deg(g.vertex_count(), 0);
    mask.for_each_edge([&](EdgeId e) {
        const auto ends = g.edge_ends(e);
        ++deg[ends.even];
        ++deg[ends.odd];
    });
    return deg;
}

MaskAdjacency::MaskAdjacency(const TranspositionGraph& g, const SubgraphMask& mask)
    : out(g.vertex_count())
{
    if (mask.n() != g.n())
        throw std::invalid_argument("mask degree does not match graph");
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (int t = 0; t < g.degree(); ++t) {
            const EdgeId e = g.edge_id(v, t);
            if (mask.contains(e))
                out[v].push_back(Arc{g.neighbor(v, t), e, t});
        }
}

void MaskAdjacency::insert(const TranspositionGraph& g, EdgeId e)
{
    const auto ends = g.edge_ends(e);
    auto add = [&](VertexId from, VertexId to) {
        auto& list = out[from];
        const auto pos = std::find_if(list.begin(), list.end(),
                                      [&](const Arc& a) { return a.transposition >= ends.transposition; });
        if (pos != list.end() && pos->transposition == ends.transposition)
            return;
        list.insert(pos, Arc{to, e, ends.transposition});
    };
    add(ends.even, ends.odd);
    add(ends.odd, ends.even);
}

void MaskAdjacency::erase(const TranspositionGraph& g, EdgeId e)
{
    const auto ends = g.edge_ends(e);
    for (VertexId v : {ends.even, ends.odd})
        std::erase_if(out[v], [e](const Arc& a) { return a.edge == e; });
}

} // namespace ctn
