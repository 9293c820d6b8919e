#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rigidity_forge/graph.hpp"
#include "rigidity_forge/rigidity.hpp"

namespace rigidity_forge {

// Base graphs.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite_graph(int a, int b);

/// Circulant k-connected k-regular graph on s vertices: i ~ i +- j for
/// j <= k/2, plus the diameters i ~ i + s/2 when k is odd.
Graph harary_graph(int k, int s);

/// Adds vertex n joined to the d given targets.
Graph zero_extension(const Graph& g, int dim, std::span<const Vertex> targets);

/// Deletes `edge`, then adds vertex n joined to both its ends and to the d-1 targets.
Graph one_extension(const Graph& g, int dim, const Edge& edge, std::span<const Vertex> targets);

/// A permutation of 0..n-1, listing vertices in processing order.
using Ordering = std::vector<Vertex>;

/// Throws InvalidArgument unless `order` is a permutation of 0..n-1.
void validate_ordering(std::span<const Vertex> order, int n);

/// Uniformly random ordering (Fisher-Yates over the identity).
Ordering random_ordering(int n, std::uint64_t seed);

enum class GpiRule {
    first_d_vertices,  // one of the first d vertices; behaves as rule a
    a,                 // at most d earlier neighbours: keep them all
    b,                 // more than d, inducing a clique: keep d
    c,                 // more than d, not a clique: keep d+1 including a non-adjacent pair
};

std::string_view to_string(GpiRule r) noexcept;

struct GpiStep {
    Vertex vertex = 0;
    int position = 0;
    int back_degree = 0;
    GpiRule rule = GpiRule::a;
    VertexSet chosen;
    std::optional<Edge> non_adjacent_pair;  // rule c only
};

struct GpiResult {
    Graph subgraph;
    std::vector<GpiStep> trace;  // in ordering position
};

/// Builds the ordered subgraph G_pi. Neighbour selection is canonical: the
/// smallest indices under rule b, and under rule c the lexicographically first
/// non-adjacent pair topped up with the smallest remaining indices. Requires d >= 2.
GpiResult build_gpi(const Graph& g, int dim, std::span<const Vertex> order);

struct LovaszYeminiFamily {
    Graph graph;
    Graph base;
    int k = 0;
    /// base = split edges, one part per clique.
    EdgeCover cover;
};

/// Splits each vertex of a k-regular k-connected base graph (k = d(d+1) - 1)
/// into a k-clique; each base edge becomes one edge between the cliques. The
/// base defaults to harary_graph(k, s).
LovaszYeminiFamily lovasz_yemini_family(int dim, int s);
LovaszYeminiFamily lovasz_yemini_family(int dim, const Graph& base);

/// Two copies of K_{d(d+1)} joined by the perfect matching i ~ d(d+1) + i.
Graph sharpness_example(int dim);
/// The matching edges of sharpness_example(dim), in ascending order.
std::vector<Edge> sharpness_matching(int dim);

}  // namespace rigidity_forge
