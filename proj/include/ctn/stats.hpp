#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ctn/cycles.hpp"
#include "ctn/rational.hpp"
#include "ctn/transposition_graph.hpp"

namespace ctn {

/// Isomorphism type of G ∩ H for a 4-cycle H, by the edges G keeps.
enum class IntersectionClass : int {
    empty = 0,
    one_edge = 1,
    two_adjacent = 2, ///< chi_2^1
    two_opposite = 3, ///< chi_2^2
    three_path = 4,
    full = 5,
};

inline constexpr int kIntersectionClasses = 6;

const char* to_string(IntersectionClass c);

/// Throws std::invalid_argument unless h is a 4-cycle of CT_n.
IntersectionClass classify_intersection(const TranspositionGraph& g, const SubgraphMask& mask, const CycleWitness& h);

/// All 4-cycles of CT_n in canonical enumeration order.
std::vector<CycleWitness> all_four_cycles(const TranspositionGraph& g);

/// Number of 4-cycles of CT_n in each intersection class.
std::array<std::uint64_t, kIntersectionClasses> intersection_class_counts(const TranspositionGraph& g,
                                                                          const SubgraphMask& mask);

struct ChiVector
{
    Rational chi0, chi1, chi2_adj, chi2_opp, chi3, chi4;
    Rational pi;
    std::uint64_t n4 = 0; ///< measured number of 4-cycles in CT_n
    std::array<std::uint64_t, kIntersectionClasses> counts{};
    Rational residual_sum; ///< sum of the six ratios minus 1
    Rational residual_weight; ///< chi1 + 2(chi2) + 3chi3 + 4chi4 - 4pi
    /// Sum over H of e(G ∩ H), from the classification and from per-edge census counts.
    std::uint64_t incidences_by_class = 0;
    std::uint64_t incidences_by_census = 0;
};

/// Exact ratios over the measured 4-cycle census; n <= 5.
ChiVector chi_vector(const TranspositionGraph& g, const SubgraphMask& mask);

struct Graph5Check
{
    int max_per_edge = 0;
    std::vector<EdgeId> witness_edges; ///< edges of CT_n with more than two such 4-cycles
    std::vector<int> per_edge;         ///< by EdgeId
};

/// For every edge e of CT_n, the number of 4-cycles H through e whose other
/// three edges all lie in G.
Graph5Check graph5_claim_check(const TranspositionGraph& g, const SubgraphMask& mask);

enum class BoundPart { i, ii, iii, iv };
enum class BoundKind { exact_ratio, asymptotic_ratio, exponent_only };

const char* to_string(BoundPart p);
const char* to_string(BoundKind k);

/// Upper bound on ex(CT_n, C_2l) / e(CT_n) for one l.
struct BoundReport
{
    int n = 0;
    int l = 0;
    BoundPart part = BoundPart::iv;
    BoundKind kind = BoundKind::exact_ratio;
    Rational value;          ///< ratio for exact_ratio, exponent of n for exponent_only
    double approx = 0.0;     ///< numeric value of the ratio or the exponent
    std::string text;        ///< "3/4", "sqrt(2)-1", "-1/2"
};

/// Throws std::invalid_argument for l < 2.
BoundReport bound_envelope(int n, int l);

} // namespace ctn
