#include "ctn/stats.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace ctn {

const char* to_string(IntersectionClass c)
{
    switch (c) {
    case IntersectionClass::empty: return "empty";
    case IntersectionClass::one_edge: return "one_edge";
    case IntersectionClass::two_adjacent: return "two_adjacent";
    case IntersectionClass::two_opposite: return "two_opposite";
    case IntersectionClass::three_path: return "three_path";
    case IntersectionClass::full: return "full";
    }
    return "?";
}

namespace {

IntersectionClass classify_bits(unsigned present)
{
    switch (std::popcount(present)) {
    case 0: return IntersectionClass::empty;
    case 1: return IntersectionClass::one_edge;
    case 2: return (present == 0b0101u || present == 0b1010u) ? IntersectionClass::two_opposite
                                                                : IntersectionClass::two_adjacent;
    case 3: return IntersectionClass::three_path;
    default: return IntersectionClass::full;
    }
}

unsigned present_bits(const std::array<EdgeId, 4>& edges, const SubgraphMask& mask)
{
    unsigned bits = 0;
    for (int i = 0; i < 4; ++i)
        if (mask.contains(edges[i]))
            bits |= 1u << i;
    return bits;
}

std::array<EdgeId, 4> four_edges(const TranspositionGraph& g, const CycleWitness& h)
{
    std::array<EdgeId, 4> out{};
    for (int i = 0; i < 4; ++i)
        out[i] = g.edge_id(h.vertices[i], h.vertices[(i + 1) % 4]);
    return out;
}

std::vector<std::array<EdgeId, 4>> four_cycle_edges(const TranspositionGraph& g)
{
    if (g.n() > 5)
        throw std::invalid_argument("4-cycle classification enumerates CT_n exhaustively and is capped at n <= 5");
    std::vector<std::array<EdgeId, 4>> out;
    const MaskAdjacency adj(g, SubgraphMask::full(g));
    for_each_cycle(adj, 4, [&](std::span<const VertexId> c) {
        std::array<EdgeId, 4> e{};
        for (int i = 0; i < 4; ++i)
            e[i] = g.edge_id(c[i], c[(i + 1) % 4]);
        out.push_back(e);
        return true;
    });
    return out;
}

} // namespace

IntersectionClass classify_intersection(const TranspositionGraph& g, const SubgraphMask& mask, const CycleWitness& h)
{
    if (h.length() != 4 || !is_cycle(g, h.vertices))
        throw std::invalid_argument("classify_intersection needs a 4-cycle of CT_n");
    return classify_bits(present_bits(four_edges(g, h), mask));
}

std::vector<CycleWitness> all_four_cycles(const TranspositionGraph& g)
{
    std::vector<CycleWitness> out;
    const MaskAdjacency adj(g, SubgraphMask::full(g));
    for_each_cycle(adj, 4, [&](std::span<const VertexId> c) {
        out.push_back(CycleWitness{std::vector<VertexId>(c.begin(), c.end())});
        return true;
    });
    return out;
}

std::array<std::uint64_t, kIntersectionClasses> intersection_class_counts(const TranspositionGraph& g,
                                                                          const SubgraphMask& mask)
{
    std::array<std::uint64_t, kIntersectionClasses> counts{};
    for (const auto& edges : four_cycle_edges(g))
        ++counts[static_cast<int>(classify_bits(present_bits(edges, mask)))];
    return counts;
}

ChiVector chi_vector(const TranspositionGraph& g, const SubgraphMask& mask)
{
    const auto cycles = four_cycle_edges(g);
    ChiVector chi;
    chi.n4 = cycles.size();
    std::vector<std::uint64_t> through_edge(g.edge_count(), 0);
    for (const auto& edges : cycles) {
        const unsigned bits = present_bits(edges, mask);
        ++chi.counts[static_cast<int>(classify_bits(bits))];
        chi.incidences_by_class += static_cast<std::uint64_t>(std::popcount(bits));
        for (auto e : edges)
            ++through_edge[e];
    }
    mask.for_each_edge([&](EdgeId e) { chi.incidences_by_census += through_edge[e]; });

    const auto n4 = static_cast<std::int64_t>(chi.n4);
    auto ratio = [n4](std::uint64_t c) { return Rational(static_cast<std::int64_t>(c), n4); };
    chi.chi0 = ratio(chi.counts[0]);
    chi.chi1 = ratio(chi.counts[1]);
    chi.chi2_adj = ratio(chi.counts[2]);
    chi.chi2_opp = ratio(chi.counts[3]);
    chi.chi3 = ratio(chi.counts[4]);
    chi.chi4 = ratio(chi.counts[5]);
    chi.pi = Rational(static_cast<std::int64_t>(mask.edge_count()), static_cast<std::int64_t>(g.edge_count()));
    chi.residual_sum = chi.chi0 + chi.chi1 + chi.chi2_adj + chi.chi2_opp + chi.chi3 + chi.chi4 - Rational(1);
    chi.residual_weight = chi.chi1 + Rational(2) * (chi.chi2_adj + chi.chi2_opp) + Rational(3) * chi.chi3
                    + Rational(4) * chi.chi4 - Rational(4) * chi.pi;
    return chi;
}

Graph5Check graph5_claim_check(const TranspositionGraph& g, const SubgraphMask& mask)
{
    Graph5Check out;
    out.per_edge.assign(g.edge_count(), 0);
    for (const auto& edges : four_cycle_edges(g)) {
        const unsigned bits = present_bits(edges, mask);
        for (int i = 0; i < 4; ++i) {
            const unsigned others = bits & ~(1u << i) & 0xFu;
            if (std::popcount(others) == 3)
                ++out.per_edge[edges[i]];
        }
    }
    for (EdgeId e = 0; e < out.per_edge.size(); ++e) {
        out.max_per_edge = std::max(out.max_per_edge, out.per_edge[e]);
        if (out.per_edge[e] > 2)
            out.witness_edges.push_back(e);
    }
    return out;
}

const char* to_string(BoundPart p)
{
    switch (p) {
    case BoundPart::i: return "i";
    case BoundPart::ii: return "ii";
    case BoundPart::iii: return "iii";
    case BoundPart::iv: return "iv";
    }
    return "?";
}

const char* to_string(BoundKind k)
{
    switch (k) {
    case BoundKind::exact_ratio: return "exact";
    case BoundKind::asymptotic_ratio: return "asymptotic";
    case BoundKind::exponent_only: return "exponent";
    }
    return "?";
}

BoundReport bound_envelope(int n, int l)
{
    if (l < 2)
        throw std::invalid_argument("bound_envelope needs l >= 2, got " + std::to_string(l));
    BoundReport r;
    r.n = n;
    r.l = l;
    if (l == 2) {
        r.part = BoundPart::iv;
        r.kind = BoundKind::exact_ratio;
        r.value = Rational(3, 4);
        r.approx = 0.75;
        r.text = "3/4";
        return r;
    }
    if (l == 3) {
        r.part = BoundPart::iii;
        r.kind = BoundKind::asymptotic_ratio;
        r.approx = std::sqrt(2.0) - 1.0;
        r.text = "sqrt(2)-1";
        return r;
    }
    r.kind = BoundKind::exponent_only;
    if (l % 2 == 0) {
        r.part = BoundPart::i;
        r.value = Rational(-1) + Rational(2, l);
    } else {
        r.part = BoundPart::ii;
        r.value = l == 7 ? Rational(-1, l) : Rational(-1, 8) + Rational(1, 4 * (l - 3));
    }
    r.approx = to_double(r.value);
    r.text = ctn::to_string(r.value);
    return r;
}

} // namespace ctn
