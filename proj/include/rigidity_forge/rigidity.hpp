#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rigidity_forge/graph.hpp"
#include "rigidity_forge/modlinalg.hpp"

namespace rigidity_forge {

/// How much a randomized verdict can be trusted. `certain` means the answer is
/// forced by a one-sided bound (a rank that reached its a-priori maximum, or an
/// edge count too small to reach it). `whp` answers can be wrong only when
/// every trial hit a Schwartz-Zippel failure.
enum class Confidence { certain, whp };

std::string_view to_string(Confidence c) noexcept;

/// Randomness parameters shared by every randomized operation. Trial i uses the
/// framework seeded by derive_seed(seed, i).
struct TrialConfig {
    std::size_t trials = 2;
    std::uint64_t seed = 0;
    std::uint64_t prime = kMersenne61;
};

struct Verdict {
    bool value = false;
    Confidence confidence = Confidence::whp;
};

/// A pseudo-random placement of the vertices in Z_p^d, standing in for a
/// generic framework. Coordinates are uniform in [1, p-1].
struct Framework {
    Graph graph;
    int dim = 0;
    PrimeField field;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> points;  // n * dim, vertex-major

    static Framework random(const Graph& g, int dim, std::uint64_t seed, const PrimeField& field);

    std::span<const std::uint64_t> point(Vertex v) const {
        return {points.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(dim),
                static_cast<std::size_t>(dim)};
    }
};

/// |E| x d|V| matrix; the row of edge uv holds p(u)-p(v) in u's block and
/// p(v)-p(u) in v's block. Rows follow `graph.edges()`.
ModMatrix rigidity_matrix(const Framework& f);

/// Appends the rigidity-matrix row of the pair {u, v} under the framework's points.
void append_rigidity_row(ModMatrix& m, const Framework& f, const Edge& e);

/// d*n - C(d+1, 2) when n >= d+1, otherwise C(n, 2).
std::size_t rank_cap(int n, int dim);

/// min(|E|, rank_cap): no realization can exceed this.
std::size_t rank_upper_bound(const Graph& g, int dim);

struct RankReport {
    std::size_t rank = 0;
    int dim = 0;
    std::size_t trials = 0;
    Confidence confidence = Confidence::whp;
    std::uint64_t seed = 0;
    std::uint64_t prime = kMersenne61;

    friend bool operator==(const RankReport&, const RankReport&) = default;
};

/// Maximum rigidity-matrix rank over the configured trials. Always a lower
/// bound on r_d(G); `certain` when it meets rank_upper_bound.
RankReport generic_rank(const Graph& g, int dim, const TrialConfig& cfg = {});

/// r_d(G) = |E|. A true verdict is certain.
Verdict is_independent(const Graph& g, int dim, const TrialConfig& cfg = {});

/// n <= d+1: rigid iff complete. Otherwise rigid iff r_d(G) = d*n - C(d+1,2).
Verdict is_rigid(const Graph& g, int dim, const TrialConfig& cfg = {});

/// Whether r_d(G + uv) = r_d(G), both ranks taken on the same points in each
/// trial. The reported trial is the one with the largest rank sum.
Verdict is_linked(const Graph& g, int dim, Vertex u, Vertex v, const TrialConfig& cfg = {});

struct RedundancyReport {
    bool value = false;
    Confidence confidence = Confidence::whp;
    int t = 0;
    std::size_t subsets_checked = 0;
    /// On failure, the first (lexicographic by edge index) deleted set that
    /// leaves a non-rigid graph.
    std::vector<Edge> witness;
};

/// Rigid after deleting any t-1 edges. Only subsets of size exactly t-1 are
/// tried: smaller deletions leave supergraphs of some tried graph.
RedundancyReport is_t_redundantly_rigid(const Graph& g, int dim, int t, const TrialConfig& cfg = {});

/// E = base u parts[0] u ... u parts[s-1]; each part spans at least d+1 vertices.
struct EdgeCover {
    std::vector<Edge> base;
    std::vector<std::vector<Edge>> parts;
};

/// |base| + sum over parts of (d |V(part)| - C(d+1, 2)), an upper bound on r_d(G).
long long cover_rank_bound(const Graph& g, int dim, const EdgeCover& cover);

/// Calls f(indices) for every size-k subset of {0..n-1} in lexicographic order;
/// stops early when f returns false. Returns the number of subsets visited.
template <typename F>
std::size_t for_each_combination(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return 0;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::size_t visited = 0;
    for (;;) {
        ++visited;
        if (!f(std::span<const std::size_t>(idx))) return visited;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return visited;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace rigidity_forge
