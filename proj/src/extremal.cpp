#include "ctn/extremal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "ctn/parallel.hpp"

namespace ctn {

const char* to_string(SearchMethod m)
{
    switch (m) {
    case SearchMethod::exact: return "exact";
    case SearchMethod::greedy: return "greedy";
    case SearchMethod::local: return "local";
    }
    return "?";
}

SearchMethod parse_search_method(const std::string& text)
{
    if (text == "exact")
        return SearchMethod::exact;
    if (text == "greedy")
        return SearchMethod::greedy;
    if (text == "local")
        return SearchMethod::local;
    throw std::invalid_argument("unknown search method '" + text + "' (expected exact, greedy or local)");
}

namespace {

bool closes_cycle(const TranspositionGraph& g, const MaskAdjacency& adj, EdgeId e, int length)
{
    const auto ends = g.edge_ends(e);
    return find_cycle_through_edge(adj, ends.even, ends.odd, length).has_value();
}

void finish(const TranspositionGraph& g, SearchReport& r)
{
    r.edges = r.mask.edge_count();
    r.pi = Rational(static_cast<std::int64_t>(r.edges), static_cast<std::int64_t>(g.edge_count()));
    r.verified = verify_cycle_free(g, r.mask, r.forbidden_length).free;
}

} // namespace

SearchReport exact_max_cycle_free(const TranspositionGraph& g, int length)
{
    check_even_length(length);
    if (g.n() != 3)
        throw std::invalid_argument("exact search is capped at n = 3 (2^9 edge subsets); use local search for n = "
                                    + std::to_string(g.n()));

    // Order edges by descending number of forbidden cycles through them, ties by id.
    std::vector<std::uint64_t> through(g.edge_count(), 0);
    for_each_cycle(MaskAdjacency(g, SubgraphMask::full(g)), length, [&](std::span<const VertexId> c) {
        for (std::size_t k = 0; k < c.size(); ++k)
            ++through[g.edge_id(c[k], c[(k + 1) % c.size()])];
        return true;
    });
    std::vector<EdgeId> order(g.edge_count());
    std::iota(order.begin(), order.end(), EdgeId{0});
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return through[a] > through[b]; });

    SubgraphMask current(g);
    MaskAdjacency adj(g, current);
    SubgraphMask best(g);
    std::size_t best_count = 0;
    std::size_t current_count = 0;
    std::uint64_t nodes = 0;

    std::function<void(std::size_t)> branch = [&](std::size_t k) {
        ++nodes;
        if (current_count + (order.size() - k) <= best_count)
            return;
        if (k == order.size()) {
            best = current;
            best_count = current_count;
            return;
        }
        const EdgeId e = order[k];
        if (!closes_cycle(g, adj, e, length)) {
            current.insert(e);
            adj.insert(g, e);
            ++current_count;
            branch(k + 1);
            --current_count;
            adj.erase(g, e);
            current.erase(e);
        }
        branch(k + 1);
    };
    branch(0);

    SearchReport r;
    r.n = g.n();
    r.forbidden_length = length;
    r.mask = std::move(best);
    r.method = SearchMethod::exact;
    r.iterations = nodes;
    finish(g, r);
    r.greedy_edges = r.edges;
    return r;
}

SearchReport local_search_max(const TranspositionGraph& g, int length, std::uint64_t seed, std::uint64_t budget,
                              SearchMethod method)
{
    check_even_length(length);
    if (g.n() > 5 || length > 10)
        throw std::invalid_argument("local search caps: n <= 5 and forbidden length <= 10");
    if (method == SearchMethod::exact)
        throw std::invalid_argument("local_search_max runs the greedy or local method only");

    Rng rng(seed);
    SubgraphMask mask(g);
    MaskAdjacency adj(g, mask);

    std::vector<EdgeId> order(g.edge_count());
    std::iota(order.begin(), order.end(), EdgeId{0});
    rng.shuffle(order);
    std::vector<EdgeId> absent;
    for (EdgeId e : order) {
        if (closes_cycle(g, adj, e, length)) {
            absent.push_back(e);
        } else {
            mask.insert(e);
            adj.insert(g, e);
        }
    }

    SearchReport r;
    r.n = g.n();
    r.forbidden_length = length;
    r.method = method;
    r.seed = seed;
    r.greedy_edges = mask.edge_count();

    std::uint64_t it = 0;
    if (method == SearchMethod::local) {
        for (; it < budget && !absent.empty(); ++it) {
            const std::size_t slot = rng.below(absent.size());
            const EdgeId e_in = absent[slot];
            const auto ends = g.edge_ends(e_in);
            const auto blocking = find_cycle_through_edge(adj, ends.even, ends.odd, length);
            if (!blocking) {
                mask.insert(e_in);
                adj.insert(g, e_in);
                absent[slot] = absent.back();
                absent.pop_back();
                continue;
            }
            // (1,1) swap against one edge of the blocking cycle other than e_in.
            auto cycle = cycle_edges(g, *blocking);
            std::erase(cycle, e_in);
            const EdgeId e_out = cycle[rng.below(cycle.size())];
            adj.erase(g, e_out);
            if (closes_cycle(g, adj, e_in, length)) {
                adj.insert(g, e_out);
                continue;
            }
            mask.erase(e_out);
            mask.insert(e_in);
            adj.insert(g, e_in);
            absent[slot] = e_out;
        }
    }

    r.mask = std::move(mask);
    r.iterations = it;
    finish(g, r);
    return r;
}

SearchReport best_local_search(const TranspositionGraph& g, int length, const std::vector<std::uint64_t>& seeds,
                               std::uint64_t budget)
{
    if (seeds.empty())
        throw std::invalid_argument("best_local_search needs at least one seed");
    std::vector<SearchReport> reports(seeds.size());
    parallel_blocks(seeds.size(), thread_count(), [&](int, std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k)
            reports[k] = local_search_max(g, length, seeds[k], budget);
    });
    const auto best = std::min_element(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
        if (a.edges != b.edges)
            return a.edges > b.edges;
        return a.seed < b.seed;
    });
    return std::move(*best);
}

FreenessResult verify_cycle_free(const TranspositionGraph& g, const SubgraphMask& mask, int length)
{
    FreenessResult r;
    r.witness = find_cycle_of_length(g, mask, length);
    r.free = !r.witness.has_value();
    return r;
}

SubgraphMask color_class(const TranspositionGraph& g, const std::vector<int>& coloring, int color)
{
    SubgraphMask m(g);
    for (EdgeId e = 0; e < coloring.size(); ++e)
        if (coloring[e] == color)
            m.insert(e);
    return m;
}

RamseyResult ramsey_experiment(const TranspositionGraph& g, int colors, int length, std::uint64_t seed,
                               const std::vector<int>* coloring)
{
    check_even_length(length);
    if (colors < 1)
        throw std::invalid_argument("ramsey experiment needs at least one colour");
    RamseyResult r;
    r.colors = colors;
    if (coloring) {
        if (coloring->size() != g.edge_count())
            throw std::invalid_argument("colouring must assign a colour to every edge");
        for (int c : *coloring)
            if (c < 0 || c >= colors)
                throw std::invalid_argument("colour " + std::to_string(c) + " out of range");
        r.coloring = *coloring;
    } else {
        Rng rng(seed);
        r.coloring.resize(g.edge_count());
        for (auto& c : r.coloring)
            c = static_cast<int>(rng.below(static_cast<std::uint64_t>(colors)));
    }
    for (int c = 0; c < colors; ++c) {
        const auto found = verify_cycle_free(g, color_class(g, r.coloring, c), length);
        r.class_free.push_back(found.free);
        if (!found.free && !r.monochromatic)
            r.monochromatic = MonochromaticCycle{c, *found.witness};
    }
    return r;
}

} // namespace ctn
