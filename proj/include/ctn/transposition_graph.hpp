#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctn/bitset.hpp"
#include "ctn/permutation.hpp"

namespace ctn {

using VertexId = std::uint32_t; ///< Lehmer rank of the permutation.
using EdgeId = std::uint32_t;

/// Endpoints of an edge: the even-parity anchor and its partner t*anchor.
struct EdgeEnds
{
    VertexId even;
    VertexId odd;
    int transposition; ///< index into TranspositionGraph::transpositions()
};

/**
 * The complete transposition graph CT_n for 3 <= n <= 8.
 *
 * Vertices are permutations identified by rank. x and y are adjacent iff
 * y = t*x for a transposition t, which in one-line form swaps two positions.
 * Edge ids are (class position of the even endpoint) * C(n,2) + t, so every
 * unordered edge has exactly one id in [0, e(CT_n)).
 *
 * Adjacency is computed on demand; a neighbor table is kept only for n <= 5.
 */
class TranspositionGraph
{
public:
    explicit TranspositionGraph(int n);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int degree() const { return static_cast<int>(transpositions_.size()); }
    [[nodiscard]] std::uint32_t vertex_count() const { return vertex_count_; }
    [[nodiscard]] std::uint32_t edge_count() const { return vertex_count_ / 2 * static_cast<std::uint32_t>(degree()); }

    /// (1,2), (1,3), ..., (n-1,n).
    [[nodiscard]] const std::vector<Transposition>& transpositions() const { return transpositions_; }
    [[nodiscard]] int transposition_index(int a, int b) const;

    [[nodiscard]] Permutation vertex(VertexId v) const { return unrank(n_, v); }
    [[nodiscard]] VertexId id(const Permutation& p) const;

    /// Rank of transpositions()[t] * v.
    [[nodiscard]] VertexId neighbor(VertexId v, int t) const;
    [[nodiscard]] std::vector<VertexId> neighbor_ids(VertexId v) const;
    [[nodiscard]] std::vector<Permutation> neighbors(const Permutation& x) const;

    /// 0 for even permutations, 1 for odd.
    [[nodiscard]] int bipart_class(VertexId v) const { return parity_[v]; }
    [[nodiscard]] int bipart_class(const Permutation& x) const { return parity(x) == Parity::odd ? 1 : 0; }

    /// Index of the transposition z*u^{-1}, or nullopt if u, z are not adjacent.
    [[nodiscard]] std::optional<int> connecting_transposition(VertexId u, VertexId z) const;
    [[nodiscard]] bool adjacent(VertexId u, VertexId z) const { return connecting_transposition(u, z).has_value(); }

    [[nodiscard]] EdgeId edge_id(VertexId v, int t) const;
    /// Throws std::invalid_argument if u, z are not adjacent.
    [[nodiscard]] EdgeId edge_id(VertexId u, VertexId z) const;
    [[nodiscard]] std::optional<EdgeId> find_edge(VertexId u, VertexId z) const;
    [[nodiscard]] EdgeEnds edge_ends(EdgeId e) const;

    /// supp(z u^{-1}); throws std::invalid_argument for a non-adjacent pair.
    [[nodiscard]] PointSet edge_support(const Permutation& u, const Permutation& z) const;
    [[nodiscard]] PointSet edge_support(EdgeId e) const { return transpositions_[edge_ends(e).transposition].support(); }

private:
    int n_;
    std::uint32_t vertex_count_;
    std::vector<Transposition> transpositions_;
    std::vector<std::vector<int>> t_index_;   // [a][b], 1-based, -1 on diagonal
    std::vector<std::uint8_t> parity_;        // by rank
    std::vector<std::uint32_t> class_pos_;    // position within parity class
    std::vector<VertexId> even_vertices_;
    std::vector<VertexId> table_;             // rank * degree + t, empty when n > 5
};

/**
 * A spanning subgraph G of CT_n, one bit per EdgeId. Vertex set is always
 * all of S_n.
 */
class SubgraphMask
{
public:
    SubgraphMask() = default;
    explicit SubgraphMask(const TranspositionGraph& g) : n_(g.n()), bits_(g.edge_count()) {}

    static SubgraphMask full(const TranspositionGraph& g)
    {
        SubgraphMask m(g);
        m.bits_.set_all();
        return m;
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::size_t size() const { return bits_.size(); }
    [[nodiscard]] bool contains(EdgeId e) const { return bits_.test(e); }
    void insert(EdgeId e) { bits_.set(e); }
    void erase(EdgeId e) { bits_.reset(e); }
    void assign(EdgeId e, bool on) { bits_.assign(e, on); }
    [[nodiscard]] std::size_t edge_count() const { return bits_.count(); }
    [[nodiscard]] std::vector<EdgeId> edges() const;

    template <typename F>
    void for_each_edge(F&& f) const
    {
        bits_.for_each_set([&](std::size_t i) { f(static_cast<EdgeId>(i)); });
    }

    [[nodiscard]] const DynamicBitset& bits() const { return bits_; }
    bool operator==(const SubgraphMask&) const = default;

private:
    int n_ = 0;
    DynamicBitset bits_;
};

/// Union of edge supports of the edges in G.
PointSet subgraph_support(const TranspositionGraph& g, const SubgraphMask& mask);
PointSet subgraph_support(const TranspositionGraph& g, const std::vector<EdgeId>& edges);

/// d_G(w) indexed by vertex rank.
std::vector<int> degree_sequence(const TranspositionGraph& g, const SubgraphMask& mask);

/// Adjacency lists of G, each list ascending by transposition index.
struct MaskAdjacency
{
    struct Arc
    {
        VertexId to;
        EdgeId edge;
        int transposition;
    };
    std::vector<std::vector<Arc>> out;

    MaskAdjacency(const TranspositionGraph& g, const SubgraphMask& mask);
    [[nodiscard]] std::size_t vertex_count() const { return out.size(); }

    /// Adds or removes a CT_n edge, keeping each list ordered by transposition.
    void insert(const TranspositionGraph& g, EdgeId e);
    void erase(const TranspositionGraph& g, EdgeId e);
};

} // namespace ctn
