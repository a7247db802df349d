#pragma once

// Brute-force reference implementations. Nothing here touches the library's
// cycle, aux or stats code; vertices are plain image vectors listed in
// std::next_permutation order.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ctn/transposition_graph.hpp"

namespace oracle {

using Perm = std::vector<int>;
using EdgeFilter = std::function<bool(int, int)>;

struct Plain
{
    int n = 0;
    std::vector<Perm> perms;
    std::vector<std::vector<int>> nbrs;
    std::vector<std::vector<char>> adj;

    explicit Plain(int n_) : n(n_)
    {
        Perm p(n);
        std::iota(p.begin(), p.end(), 1);
        do
            perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        const auto v = perms.size();
        adj.assign(v, std::vector<char>(v, 0));
        nbrs.resize(v);
        for (std::size_t a = 0; a < v; ++a)
            for (std::size_t b = 0; b < v; ++b) {
                int diff = 0;
                for (int k = 0; k < n; ++k)
                    diff += perms[a][k] != perms[b][k];
                if (diff == 2) {
                    adj[a][b] = 1;
                    nbrs[a].push_back(static_cast<int>(b));
                }
            }
    }

    std::size_t edge_count() const
    {
        std::size_t d = 0;
        for (const auto& row : nbrs)
            d += row.size();
        return d / 2;
    }

    // positions (1-based) where a and b differ
    std::set<int> diff_positions(int a, int b) const
    {
        std::set<int> s;
        for (int k = 0; k < n; ++k)
            if (perms[a][k] != perms[b][k])
                s.insert(k + 1);
        return s;
    }
};

inline EdgeFilter all_edges()
{
    return [](int, int) { return true; };
}

inline EdgeFilter from_mask(const ctn::TranspositionGraph& g, const ctn::SubgraphMask& mask)
{
    return [&g, &mask](int a, int b) {
        const auto e = g.find_edge(static_cast<ctn::VertexId>(a), static_cast<ctn::VertexId>(b));
        return e && mask.contains(*e);
    };
}

// Counts closed simple paths of the given length and divides out the 2*len
// rotations and reflections.
inline std::uint64_t count_cycles(const Plain& p, const EdgeFilter& ok, int len)
{
    const int v = static_cast<int>(p.perms.size());
    std::vector<char> used(v, 0);
    std::uint64_t closed = 0;
    std::function<void(int, int, int)> walk = [&](int start, int cur, int depth) {
        if (depth == len) {
            closed += p.adj[cur][start] && ok(cur, start);
            return;
        }
        for (int w : p.nbrs[cur]) {
            if (used[w] || !ok(cur, w))
                continue;
            used[w] = 1;
            walk(start, w, depth + 1);
            used[w] = 0;
        }
    };
    for (int s = 0; s < v; ++s) {
        used[s] = 1;
        walk(s, s, 1);
        used[s] = 0;
    }
    return closed / (2 * static_cast<std::uint64_t>(len));
}

inline bool has_cycle(const Plain& p, const EdgeFilter& ok, int len) { return count_cycles(p, ok, len) > 0; }

// 4-cycles a-b-c-d-a through the edge {a, b}.
inline std::uint64_t four_cycles_through(const Plain& p, int a, int b)
{
    std::uint64_t count = 0;
    for (int c : p.nbrs[b])
        for (int d : p.nbrs[a])
            if (c != a && d != b && c != d && p.adj[c][d])
                ++count;
    return count;
}

// Every 4-cycle once, as a closed vertex sequence.
struct FourCycle
{
    std::array<int, 4> v; // v0-v1-v2-v3-v0
};

inline std::vector<FourCycle> four_cycles(const Plain& p)
{
    std::vector<FourCycle> out;
    std::set<std::array<int, 4>> seen;
    const int v = static_cast<int>(p.perms.size());
    for (int a = 0; a < v; ++a)
        for (int b : p.nbrs[a])
            for (int c : p.nbrs[b])
                for (int d : p.nbrs[c]) {
                    if (c == a || d == b || d == a || !p.adj[d][a])
                        continue;
                    // keyed by edge set: one vertex set can carry several 4-cycles
                    std::array<int, 4> cyc{a, b, c, d};
                    std::set<std::pair<int, int>> es;
                    for (int k = 0; k < 4; ++k)
                        es.insert(std::minmax(cyc[k], cyc[(k + 1) % 4]));
                    std::array<int, 4> ekey{};
                    int k = 0;
                    for (auto& [x, y] : es)
                        ekey[k++] = x * v + y;
                    if (seen.insert(ekey).second)
                        out.push_back(FourCycle{cyc});
                }
    return out;
}

// Six-way class of G ∩ H: 0 empty, 1 one edge, 2 two adjacent, 3 two opposite,
// 4 three edges, 5 all four.
inline int classify(const FourCycle& h, const EdgeFilter& ok)
{
    std::array<bool, 4> in{};
    int count = 0;
    for (int k = 0; k < 4; ++k) {
        in[k] = ok(h.v[k], h.v[(k + 1) % 4]);
        count += in[k];
    }
    if (count == 2)
        return (in[0] && in[2]) || (in[1] && in[3]) ? 3 : 2;
    return count < 2 ? count : count + 1;
}

struct NaiveAux
{
    std::vector<int> vertices;                    // plain indices, family order
    std::map<std::pair<int, int>, std::vector<int>> connectors; // by local pair (a < b)
};

// G_x^i (h_only: H_x^i) straight from the definition.
inline NaiveAux naive_aux(const Plain& p, const EdgeFilter& ok, int x, int i, bool h_only)
{
    NaiveAux aux;
    std::vector<std::set<int>> supports;
    for (int a = 1; a <= p.n; ++a)
        for (int b = a + 1; b <= p.n; ++b) {
            if (i != 0 && a != i && b != i)
                continue;
            Perm u = p.perms[x];
            std::swap(u[a - 1], u[b - 1]);
            const int uid = static_cast<int>(std::find(p.perms.begin(), p.perms.end(), u) - p.perms.begin());
            if (h_only && ok(x, uid))
                continue;
            aux.vertices.push_back(uid);
            supports.push_back({a, b});
        }
    const int want = i == 0 ? 0 : 1;
    for (std::size_t a = 0; a < aux.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < aux.vertices.size(); ++b) {
            int overlap = 0;
            for (int s : supports[a])
                overlap += supports[b].count(s) ? 1 : 0;
            if (overlap != want)
                continue;
            std::vector<int> ws;
            for (int w = 0; w < static_cast<int>(p.perms.size()); ++w)
                if (w != x && p.adj[aux.vertices[a]][w] && p.adj[w][aux.vertices[b]]
                    && ok(aux.vertices[a], w) && ok(w, aux.vertices[b]))
                    ws.push_back(w);
            if (!ws.empty())
                aux.connectors[{static_cast<int>(a), static_cast<int>(b)}] = ws;
        }
    return aux;
}

inline ctn::SubgraphMask random_mask(const ctn::TranspositionGraph& g, std::mt19937& rng, double density)
{
    std::bernoulli_distribution coin(density);
    ctn::SubgraphMask m(g);
    for (ctn::EdgeId e = 0; e < g.edge_count(); ++e)
        if (coin(rng))
            m.insert(e);
    return m;
}

} // namespace oracle
