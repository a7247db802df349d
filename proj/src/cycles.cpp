#include "ctn/cycles.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "ctn/parallel.hpp"

namespace ctn {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max() / 2;

/// BFS distances to `root` in adj, only through vertices >= floor.
void distances_from(const MaskAdjacency& adj, VertexId root, VertexId floor, std::vector<int>& dist,
                    std::vector<VertexId>& queue)
{
    std::fill(dist.begin(), dist.end(), kUnreached);
    queue.clear();
    dist[root] = 0;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId v = queue[head];
        for (const auto& arc : adj.out[v]) {
            if (arc.to < floor || dist[arc.to] != kUnreached)
                continue;
            dist[arc.to] = dist[v] + 1;
            queue.push_back(arc.to);
        }
    }
}

/// Enumerates canonical cycles of `length` whose minimum vertex is `start`.
class StartSearch
{
public:
    StartSearch(const MaskAdjacency& adj, int length)
        : adj_(adj), length_(length), dist_(adj.vertex_count()), on_path_(adj.vertex_count(), 0),
          path_(static_cast<std::size_t>(length))
    {
    }

    /// Returns false if visit asked to stop.
    template <typename Visit>
    bool run(VertexId start, Visit& visit)
    {
        start_ = start;
        distances_from(adj_, start, start, dist_, queue_);
        path_[0] = start;
        on_path_[start] = 1;
        const bool keep_going = extend(1, visit);
        on_path_[start] = 0;
        return keep_going;
    }

private:
    template <typename Visit>
    bool extend(int depth, Visit& visit)
    {
        const VertexId v = path_[depth - 1];
        if (depth == length_) {
            if (dist_[v] == 1 && path_[1] < v)
                return visit(std::span<const VertexId>(path_.data(), path_.size()));
            return true;
        }
        for (const auto& arc : adj_.out[v]) {
            const VertexId w = arc.to;
            if (w <= start_ || on_path_[w] || dist_[w] > length_ - depth)
                continue;
            path_[depth] = w;
            on_path_[w] = 1;
            const bool keep_going = extend(depth + 1, visit);
            on_path_[w] = 0;
            if (!keep_going)
                return false;
        }
        return true;
    }

    const MaskAdjacency& adj_;
    int length_;
    VertexId start_ = 0;
    std::vector<int> dist_;
    std::vector<VertexId> queue_;
    std::vector<char> on_path_;
    std::vector<VertexId> path_;
};

} // namespace

void check_even_length(int length)
{
    if (length % 2 != 0)
        throw std::invalid_argument("cycle length must be even (CT_n is bipartite), got " + std::to_string(length));
    if (length < 4 || length > 14)
        throw std::invalid_argument("cycle length must lie in [4, 14], got " + std::to_string(length));
}

CycleWitness canonical_cycle(std::vector<VertexId> vertices)
{
    if (vertices.empty())
        return {};
    const auto len = vertices.size();
    const auto min_it = std::min_element(vertices.begin(), vertices.end());
    std::rotate(vertices.begin(), min_it, vertices.end());
    if (len > 2 && vertices[len - 1] < vertices[1])
        std::reverse(vertices.begin() + 1, vertices.end());
    return CycleWitness{std::move(vertices)};
}

bool is_cycle(const TranspositionGraph& g, std::span<const VertexId> vertices, const SubgraphMask* mask)
{
    const auto len = vertices.size();
    if (len < 4)
        return false;
    std::vector<VertexId> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (std::size_t i = 0; i < len; ++i) {
        if (vertices[i] >= g.vertex_count())
            return false;
        const auto e = g.find_edge(vertices[i], vertices[(i + 1) % len]);
        if (!e || (mask && !mask->contains(*e)))
            return false;
    }
    return true;
}

std::vector<EdgeId> cycle_edges(const TranspositionGraph& g, const CycleWitness& c)
{
    std::vector<EdgeId> out;
    const auto len = c.vertices.size();
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        out.push_back(g.edge_id(c.vertices[i], c.vertices[(i + 1) % len]));
    return out;
}

std::vector<Permutation> two_path_fourth_vertices(const Permutation& u, const Permutation& x, const Permutation& z)
{
    const auto x_inv = inverse(x);
    auto w1 = z * x_inv * u;
    auto w2 = u * x_inv * z;
    if (w1 == w2)
        return {w1};
    return {w1, w2};
}

std::vector<CycleWitness> four_cycles_through_two_path(const TranspositionGraph& g, const Permutation& u,
                                                       const Permutation& x, const Permutation& z)
{
    const VertexId ui = g.id(u);
    const VertexId xi = g.id(x);
    const VertexId zi = g.id(z);
    if (ui == zi || !g.adjacent(ui, xi) || !g.adjacent(xi, zi))
        throw std::invalid_argument("(" + u.one_line() + ", " + x.one_line() + ", " + z.one_line()
                                    + ") is not a 2-path of CT_" + std::to_string(g.n()));
    std::vector<CycleWitness> out;
    for (const auto& w : two_path_fourth_vertices(u, x, z))
        out.push_back(canonical_cycle({xi, zi, g.id(w), ui}));
    return out;
}

FourCycleCensus four_cycle_census(const TranspositionGraph& g)
{
    const int n = g.n();
    if (n > 5)
        throw std::invalid_argument("four_cycle_census enumerates exhaustively and is capped at n <= 5");
    FourCycleCensus c;
    c.n = n;
    c.per_edge_counts.assign(g.edge_count(), 0);
    const MaskAdjacency adj(g, SubgraphMask::full(g));
    for_each_cycle(adj, 4, [&](std::span<const VertexId> cyc) {
        for (std::size_t i = 0; i < 4; ++i)
            ++c.per_edge_counts[g.edge_id(cyc[i], cyc[(i + 1) % 4])];
        ++c.total;
        return true;
    });

    const auto [lo, hi] = std::minmax_element(c.per_edge_counts.begin(), c.per_edge_counts.end());
    c.per_edge_constant = *lo == *hi;
    c.measured_per_edge = *lo;
    c.closed_form_per_edge = static_cast<std::int64_t>(n - 2) * (n + 1) / 2;
    c.closed_form_total = Rational(static_cast<std::int64_t>(n - 2) * (n + 1) * g.edge_count(), 8);
    c.fitted_per_edge = static_cast<std::int64_t>(n - 2) * (n + 5) / 2;
    c.per_edge_mismatch = !c.per_edge_constant || static_cast<std::int64_t>(c.measured_per_edge) != c.closed_form_per_edge;
    c.total_mismatch = Rational(static_cast<std::int64_t>(c.total)) != c.closed_form_total;
    return c;
}

void for_each_cycle(const MaskAdjacency& adj, int length,
                    const std::function<bool(std::span<const VertexId>)>& visit)
{
    StartSearch search(adj, length);
    for (VertexId s = 0; s < adj.vertex_count(); ++s)
        if (!search.run(s, visit))
            return;
}

std::optional<CycleWitness> find_cycle_of_length(const MaskAdjacency& adj, int length)
{
    check_even_length(length);
    std::optional<CycleWitness> found;
    for_each_cycle(adj, length, [&](std::span<const VertexId> cyc) {
        found = CycleWitness{std::vector<VertexId>(cyc.begin(), cyc.end())};
        return false;
    });
    return found;
}

std::optional<CycleWitness> find_cycle_of_length(const TranspositionGraph& g, const SubgraphMask& mask, int length)
{
    check_even_length(length);
    return find_cycle_of_length(MaskAdjacency(g, mask), length);
}

std::uint64_t count_cycles_of_length(const TranspositionGraph& g, const SubgraphMask& mask, int length)
{
    check_even_length(length);
    const int n = g.n();
    if (n >= 6 || (n == 5 && length > 8) || length > 12)
        throw std::invalid_argument("count_cycles_of_length caps: n <= 4 for length <= 12, n = 5 for length <= 8");
    const MaskAdjacency adj(g, mask);
    const int workers = thread_count();
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
    parallel_blocks(adj.vertex_count(), workers, [&](int w, std::size_t begin, std::size_t end) {
        StartSearch search(adj, length);
        std::uint64_t count = 0;
        auto visit = [&count](std::span<const VertexId>) {
            ++count;
            return true;
        };
        for (std::size_t s = begin; s < end; ++s)
            search.run(static_cast<VertexId>(s), visit);
        partial[static_cast<std::size_t>(w)] = count;
    });
    std::uint64_t total = 0;
    for (auto p : partial)
        total += p;
    return total;
}

std::optional<CycleWitness> find_cycle_through_edge(const MaskAdjacency& adj, VertexId a, VertexId b, int length)
{
    check_even_length(length);
    std::vector<int> dist(adj.vertex_count());
    std::vector<VertexId> queue;
    distances_from(adj, a, 0, dist, queue);
    const int path_edges = length - 1; // from b back to a
    if (dist[b] > path_edges)
        return std::nullopt;

    std::vector<char> on_path(adj.vertex_count(), 0);
    std::vector<VertexId> path;
    path.reserve(static_cast<std::size_t>(length));
    path.push_back(a);
    path.push_back(b);
    on_path[a] = on_path[b] = 1;

    // path holds a, b, ...; close back to a after exactly path_edges steps from b.
    std::function<bool(int)> extend = [&](int used) -> bool {
        const VertexId v = path.back();
        const int left = path_edges - used;
        if (left == 1) {
            for (const auto& arc : adj.out[v])
                if (arc.to == a)
                    return true;
            return false;
        }
        for (const auto& arc : adj.out[v]) {
            const VertexId w = arc.to;
            if (on_path[w] || dist[w] > left - 1)
                continue;
            path.push_back(w);
            on_path[w] = 1;
            if (extend(used + 1))
                return true;
            on_path[w] = 0;
            path.pop_back();
        }
        return false;
    };
    if (!extend(0))
        return std::nullopt;
    return canonical_cycle(path);
}

std::optional<int> girth(const TranspositionGraph& g, const SubgraphMask& mask)
{
    const MaskAdjacency adj(g, mask);
    const auto count = adj.vertex_count();
    std::vector<int> dist(count);
    std::vector<VertexId> parent(count);
    std::vector<VertexId> queue;
    int best = kUnreached;
    for (VertexId root = 0; root < count && best > 4; ++root) {
        std::fill(dist.begin(), dist.end(), kUnreached);
        queue.clear();
        dist[root] = 0;
        parent[root] = root;
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const VertexId v = queue[head];
            if (2 * dist[v] >= best)
                break;
            for (const auto& arc : adj.out[v]) {
                const VertexId w = arc.to;
                if (dist[w] == kUnreached) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (parent[v] != w) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if (best == kUnreached)
        return std::nullopt;
    return best;
}

TwoPathSurvey survey_two_paths(const TranspositionGraph& g)
{
    TwoPathSurvey s;
    const int d = g.degree();
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        const auto px = g.vertex(x);
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b) {
                const VertexId u = g.neighbor(x, a);
                const VertexId z = g.neighbor(x, b);
                const int overlap = (g.transpositions()[a].support() & g.transpositions()[b].support()).size();
                (overlap == 0 ? s.disjoint_paths : s.shared_paths) += 1;

                std::vector<VertexId> scanned;
                for (int t = 0; t < d; ++t) {
                    const VertexId w = g.neighbor(u, t);
                    if (w != x && g.adjacent(w, z))
                        scanned.push_back(w);
                }
                std::vector<VertexId> predicted;
                for (const auto& w : two_path_fourth_vertices(g.vertex(u), px, g.vertex(z)))
                    predicted.push_back(g.id(w));
                std::sort(scanned.begin(), scanned.end());
                std::sort(predicted.begin(), predicted.end());
                const std::size_t expected = overlap == 0 ? 1 : 2;
                if (scanned != predicted || scanned.size() != expected)
                    ++s.exceptions;
            }
    }
    return s;
}

SupportSurvey survey_cycle_supports(const TranspositionGraph& g, const SubgraphMask& mask, int length)
{
    check_even_length(length);
    SupportSurvey s;
    s.length = length;
    const MaskAdjacency adj(g, mask);
    for_each_cycle(adj, length, [&](std::span<const VertexId> c) {
        PointSet points;
        for (std::size_t k = 0; k < c.size(); ++k) {
            const auto t = g.connecting_transposition(c[k], c[(k + 1) % c.size()]);
            points |= g.transpositions()[*t].support();
        }
        ++s.cycles;
        s.max_support = std::max(s.max_support, points.size());
        if (points.size() > length)
            ++s.violations;
        return true;
    });
    return s;
}

PointSet cycle_support(const TranspositionGraph& g, const CycleWitness& c)
{
    PointSet s;
    for (auto e : cycle_edges(g, c))
        s |= g.edge_support(e);
    return s;
}

int support_intersection_check(const TranspositionGraph& g, const CycleWitness& c, const CycleWitness& c2)
{
    return (cycle_support(g, c) & cycle_support(g, c2)).size();
}

} // namespace ctn
