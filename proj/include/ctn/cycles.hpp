#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ctn/rational.hpp"
#include "ctn/transposition_graph.hpp"

namespace ctn {

/**
 * A cycle (v_1, ..., v_2l) of CT_n given by vertex ranks.
 *
 * Canonical form starts at the minimum rank and continues toward the smaller
 * of that vertex's two cycle neighbours, so each cycle has one representative.
 */
struct CycleWitness
{
    std::vector<VertexId> vertices;

    [[nodiscard]] int length() const { return static_cast<int>(vertices.size()); }
    bool operator==(const CycleWitness&) const = default;
    auto operator<=>(const CycleWitness&) const = default;
};

/// Rotates and reflects a closed vertex sequence into canonical form.
CycleWitness canonical_cycle(std::vector<VertexId> vertices);

/// True if the sequence is a cycle of CT_n (length >= 4, distinct vertices,
/// cyclically adjacent) and, when mask is given, every edge lies in it.
bool is_cycle(const TranspositionGraph& g, std::span<const VertexId> vertices, const SubgraphMask* mask = nullptr);

/// Edge ids along the cycle, in order v_1v_2, ..., v_2l v_1.
std::vector<EdgeId> cycle_edges(const TranspositionGraph& g, const CycleWitness& c);

/**
 * The 4-cycles through the 2-path (u, x, z), each as (x, z, w, u) before
 * canonicalisation. One cycle when the edge supports at x are disjoint,
 * two when they share a point. Throws std::invalid_argument if (u, x, z)
 * is not a 2-path.
 */
std::vector<CycleWitness> four_cycles_through_two_path(const TranspositionGraph& g, const Permutation& u,
                                                       const Permutation& x, const Permutation& z);

/// The fourth vertices z x^{-1} u and u x^{-1} z (equal for disjoint supports).
std::vector<Permutation> two_path_fourth_vertices(const Permutation& u, const Permutation& x,
                                                  const Permutation& z);

struct FourCycleCensus
{
    int n = 0;
    std::vector<std::uint64_t> per_edge_counts; ///< by EdgeId
    std::uint64_t total = 0;
    bool per_edge_constant = false;
    std::uint64_t measured_per_edge = 0;        ///< valid when per_edge_constant
    std::int64_t closed_form_per_edge = 0;            ///< (n-2)(n+1)/2
    Rational closed_form_total;                       ///< (n-2)(n+1) e(CT_n) / 8
    std::int64_t fitted_per_edge = 0;           ///< (n-2)(n+5)/2, observation only
    bool per_edge_mismatch = false;
    bool total_mismatch = false;
};

/// Exhaustive 4-cycle enumeration of CT_n; n <= 5.
FourCycleCensus four_cycle_census(const TranspositionGraph& g);

/// Calls visit(cycle) for every canonical cycle of the given length in G, in
/// ascending start vertex then ascending transposition order. Returning false
/// from visit stops the enumeration.
void for_each_cycle(const MaskAdjacency& adj, int length,
                    const std::function<bool(std::span<const VertexId>)>& visit);

/// Exact decision; 4 <= length <= 14 and even, else std::invalid_argument.
std::optional<CycleWitness> find_cycle_of_length(const TranspositionGraph& g, const SubgraphMask& mask, int length);
std::optional<CycleWitness> find_cycle_of_length(const MaskAdjacency& adj, int length);

/// Number of distinct cycles of the given length in G. Caps: n <= 4 for
/// length <= 12, n = 5 for length <= 8.
std::uint64_t count_cycles_of_length(const TranspositionGraph& g, const SubgraphMask& mask, int length);

/// A cycle of the given length containing the CT_n edge {a, b}, using only
/// edges of adj apart from {a, b} itself. Canonical form.
std::optional<CycleWitness> find_cycle_through_edge(const MaskAdjacency& adj, VertexId a, VertexId b, int length);

/// Shortest cycle length in G, nullopt if G is acyclic.
std::optional<int> girth(const TranspositionGraph& g, const SubgraphMask& mask);

/// Union of the edge supports along the cycle.
PointSet cycle_support(const TranspositionGraph& g, const CycleWitness& c);

/// |supp(C) ∩ supp(C2)|
int support_intersection_check(const TranspositionGraph& g, const CycleWitness& c, const CycleWitness& c2);

/// Every 2-path (u, x, z) of CT_n checked against a common-neighbour scan:
/// disjoint edge supports must give one 4-cycle, shared supports two, with
/// fourth vertices z x^{-1} u and u x^{-1} z.
struct TwoPathSurvey
{
    std::uint64_t disjoint_paths = 0;
    std::uint64_t shared_paths = 0;
    std::uint64_t exceptions = 0;
};

TwoPathSurvey survey_two_paths(const TranspositionGraph& g);

/// |supp(C)| <= length for every cycle of the given length in G.
struct SupportSurvey
{
    int length = 0;
    std::uint64_t cycles = 0;
    int max_support = 0;
    std::uint64_t violations = 0;
};

SupportSurvey survey_cycle_supports(const TranspositionGraph& g, const SubgraphMask& mask, int length);

void check_even_length(int length);

} // namespace ctn
