#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ctn/cycles.hpp"
#include "ctn/transposition_graph.hpp"

namespace ctn {

/// F_0 = all transpositions; F_i = the n-1 transpositions moving point i.
struct TranspositionFamily
{
    int i = 0;
    std::vector<Transposition> members;
};

/// Throws std::invalid_argument unless 0 <= i <= n.
TranspositionFamily family(int n, int i);

/// Required |supp({x,u}) ∩ supp({x,z})| for adjacency in family i.
constexpr int support_overlap(int i) { return i == 0 ? 0 : 1; }

enum class AuxKind { g_aux, h_aux };

/**
 * G_x^i (or its induced subgraph H_x^i) for a spanning subgraph G.
 *
 * Vertices are the neighbours y*x of x with y in F_i; H_x^i keeps only those u
 * with {u, x} not in G. u ~ z iff their edge supports at x overlap in exactly
 * support_overlap(i) points and some w != x is a common neighbour of u and z
 * in G. Each aux edge stores those connecting vertices w.
 */
class AuxGraph
{
public:
    struct Edge
    {
        int a;
        int b; ///< local indices, a < b
        std::vector<VertexId> connectors;
    };

    [[nodiscard]] VertexId x() const { return x_; }
    [[nodiscard]] int family_index() const { return i_; }
    [[nodiscard]] AuxKind kind() const { return kind_; }

    [[nodiscard]] int vertex_count() const { return static_cast<int>(vertices_.size()); }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] VertexId vertex(int local) const { return vertices_[local]; }
    [[nodiscard]] const std::vector<VertexId>& vertices() const { return vertices_; }
    /// y with vertex(local) = y*x.
    [[nodiscard]] Transposition generator(int local) const { return generators_[local]; }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }

    [[nodiscard]] bool adjacent(int a, int b) const { return edge_index(a, b) >= 0; }
    /// Connecting vertices for the aux edge {a, b}; empty if not adjacent.
    [[nodiscard]] std::span<const VertexId> connectors(int a, int b) const;

    /// Calls visit(local cycle) for each l-cycle (l >= 3), one representative each.
    void for_each_cycle(int l, const std::function<bool(std::span<const int>)>& visit) const;
    [[nodiscard]] std::optional<std::vector<int>> find_cycle(int l) const;
    [[nodiscard]] bool has_triangle() const { return find_cycle(3).has_value(); }

private:
    friend class AuxBuilder;
    [[nodiscard]] int edge_index(int a, int b) const { return matrix_[static_cast<std::size_t>(a) * vertices_.size() + b]; }

    VertexId x_ = 0;
    int i_ = 0;
    AuxKind kind_ = AuxKind::g_aux;
    std::vector<VertexId> vertices_;
    std::vector<Transposition> generators_;
    std::vector<Edge> edges_;
    std::vector<int> matrix_; ///< edge index or -1
};

/// Shares the adjacency of G across many aux constructions.
class AuxBuilder
{
public:
    AuxBuilder(const TranspositionGraph& g, const SubgraphMask& mask);

    [[nodiscard]] AuxGraph build(VertexId x, int i, AuxKind kind) const;

    [[nodiscard]] const TranspositionGraph& graph() const { return g_; }
    [[nodiscard]] const SubgraphMask& mask() const { return mask_; }
    [[nodiscard]] const MaskAdjacency& adjacency() const { return adj_; }

private:
    const TranspositionGraph& g_;
    const SubgraphMask& mask_;
    MaskAdjacency adj_;
};

AuxGraph build_aux(const TranspositionGraph& g, const SubgraphMask& mask, const Permutation& x, int i, AuxKind kind);

struct IdentityCheck
{
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool equality = false; ///< true for identities that must hold with equality
    [[nodiscard]] bool holds() const { return equality ? lhs == rhs : lhs >= rhs; }
};

struct IdentityReport
{
    IdentityCheck eq1; ///< sum v(G_x^i) = 3 n! C(n,2)
    IdentityCheck eq2; ///< sum e(G_x^i) >= number of 2-paths in G
    IdentityCheck eq8; ///< sum e(H_x^i) + (4chi4 + 2chi3) n(C4) >= number of 2-paths in G
    /// sum v(H_x^i) = 3 sum (C(n,2) - d_G(x)), the vertex count identity for H_x^i.
    IdentityCheck h_vertices;
};

/// Builds all (n+1) n! aux graphs of each kind; n <= 5.
IdentityReport verify_identities(const TranspositionGraph& g, const SubgraphMask& mask);

/**
 * Lifts an l-cycle of an aux graph (local indices, l >= 3) to the 2l-cycle
 * (u_1, w_1, u_2, w_2, ..., u_l, w_l) of G, picking connecting vertices so that
 * the w_j are pairwise distinct. Throws std::runtime_error if no valid choice
 * exists, which means the aux graph does not belong to G.
 */
CycleWitness lift_cycle(const TranspositionGraph& g, const SubgraphMask& mask, const AuxGraph& aux,
                        std::span<const int> cycle);

struct AuxCycleHit
{
    VertexId x;
    int i;
    AuxKind kind;
    std::vector<int> cycle;
};

/// First aux graph G_x^i (over all x, i) containing an l-cycle, if any.
std::optional<AuxCycleHit> find_aux_cycle(const TranspositionGraph& g, const SubgraphMask& mask, int l,
                                          AuxKind kind = AuxKind::g_aux);

struct MantelCheck
{
    std::size_t graphs = 0;
    std::size_t with_triangle = 0;
    std::size_t bound_violations = 0; ///< 4 e(H) > v(H)^2
};

/// Triangle-freeness and the Mantel edge bound over every H_x^i.
MantelCheck h_aux_mantel_check(const TranspositionGraph& g, const SubgraphMask& mask);

} // namespace ctn
