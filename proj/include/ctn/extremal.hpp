#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ctn/cycles.hpp"
#include "ctn/rational.hpp"
#include "ctn/transposition_graph.hpp"

namespace ctn {

/**
 * Seeded generator with a portable stream: std::mt19937_64 is fully specified
 * by the standard, and bounded draws use rejection sampling instead of the
 * implementation-defined std distributions.
 */
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % bound;
    }

    template <typename T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

enum class SearchMethod { exact, greedy, local };

const char* to_string(SearchMethod m);
SearchMethod parse_search_method(const std::string& text);

struct SearchReport
{
    int n = 0;
    int forbidden_length = 0;
    SubgraphMask mask;
    std::size_t edges = 0;
    Rational pi;                  ///< edges / e(CT_n)
    SearchMethod method = SearchMethod::exact;
    std::uint64_t seed = 0;
    std::uint64_t iterations = 0; ///< search nodes (exact) or local moves (local)
    std::size_t greedy_edges = 0; ///< edge count after the greedy phase
    bool verified = false;        ///< set only after a full cycle-oracle re-run
};

/// Optimal C_length-free subgraph of CT_3 by branch and bound. Throws for n != 3.
SearchReport exact_max_cycle_free(const TranspositionGraph& g, int length);

/// Randomised greedy insertion, then `budget` local moves: insert a free edge
/// if possible, else try a (1,1) swap against an edge of the blocking cycle.
/// n <= 5, length <= 10. Deterministic in (n, length, seed, budget).
SearchReport local_search_max(const TranspositionGraph& g, int length, std::uint64_t seed, std::uint64_t budget,
                              SearchMethod method = SearchMethod::local);

/// Runs local_search_max for each seed in parallel and keeps the best by
/// (edges desc, seed asc).
SearchReport best_local_search(const TranspositionGraph& g, int length, const std::vector<std::uint64_t>& seeds,
                               std::uint64_t budget);

struct FreenessResult
{
    bool free = true;
    std::optional<CycleWitness> witness;
};

FreenessResult verify_cycle_free(const TranspositionGraph& g, const SubgraphMask& mask, int length);

struct MonochromaticCycle
{
    int color;
    CycleWitness witness;
};

struct RamseyResult
{
    int colors = 0;
    std::vector<int> coloring;                   ///< color by EdgeId
    std::vector<bool> class_free;                ///< per color: contains no C_length
    std::optional<MonochromaticCycle> monochromatic; ///< lowest color with a cycle
};

/// Colours the edges uniformly at random (or uses `coloring` when given) and
/// searches each colour class for a C_length.
RamseyResult ramsey_experiment(const TranspositionGraph& g, int colors, int length, std::uint64_t seed,
                               const std::vector<int>* coloring = nullptr);

SubgraphMask color_class(const TranspositionGraph& g, const std::vector<int>& coloring, int color);

} // namespace ctn
