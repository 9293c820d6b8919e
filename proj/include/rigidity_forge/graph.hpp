#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rigidity_forge {

using Vertex = int;

/// Sorted list of distinct vertex indices.
using VertexSet = std::vector<Vertex>;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built: the
/// mutating helpers (`with_edge`, `without_edges`, ...) return new graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Throws InvalidArgument on out-of-range endpoints or self-loops.
    /// Duplicate edges are merged; `duplicates` (if given) receives the count.
    Graph(int n, std::span<const Edge> edges, std::size_t* duplicates = nullptr);
    Graph(int n, std::initializer_list<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Edges in ascending (u, v) order.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// Sorted neighbour list.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    int min_degree() const;

    bool has_edge(Vertex a, Vertex b) const;
    bool is_complete() const noexcept;

    /// Position of `e` in `edges()`, or npos when absent.
    std::size_t edge_index(const Edge& e) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Graph with_edge(const Edge& e) const;
    Graph without_edges(std::span<const Edge> removed) const;
    /// Appends `count` isolated vertices.
    Graph with_vertices(int count) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;

    void build_adjacency();
};

/// Validates and sorts a vertex list against a graph of `n` vertices.
VertexSet make_vertex_set(std::vector<Vertex> members, int n);

// ---------------------------------------------------------------------------
// Text formats

/// Parses either the edge-list format ("n m" header, then m lines "u v") or
/// graph6. graph6 is recognised by its first non-blank byte: digits start an
/// edge list, bytes in [63, 126] or a ">>graph6<<" header start graph6.
/// Duplicate edges are dropped; one warning per dropped edge and one for a
/// header edge count that disagrees with the deduplicated count are appended
/// to `warnings` when given.
Graph parse_graph(std::string_view text, std::vector<std::string>* warnings = nullptr);
Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings = nullptr);
Graph parse_graph6(std::string_view text);

/// Canonical edge-list text: "n m\n" followed by sorted "u v\n" lines.
std::string to_edge_list(const Graph& g);
std::string to_graph6(const Graph& g);

// ---------------------------------------------------------------------------
// Structural queries

bool is_connected(const Graph& g);
bool is_clique(const Graph& g, std::span<const Vertex> members);

/// Maximum number of internally vertex-disjoint s-t paths for non-adjacent s, t,
/// computed by unit-capacity max-flow on the vertex-split digraph. Stops early
/// once `limit` paths are found.
int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int limit);

/// Exact vertex connectivity. K_n gives n-1; disconnected graphs give 0.
int vertex_connectivity(const Graph& g);

/// Inclusion-maximal cliques (Bron-Kerbosch with pivoting). Each clique is
/// sorted and the list is in lexicographic order. Isolated vertices form
/// singleton cliques.
std::vector<VertexSet> maximal_cliques(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    /// `original[i]` is the vertex of the parent graph relabelled to i.
    std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members);

/// True iff some u-v path has all internal vertices outside `blocked`.
/// The edge uv itself qualifies. Throws InvalidArgument when u == v.
bool path_avoiding(const Graph& g, Vertex u, Vertex v, std::span<const Vertex> blocked);

/// FNV-1a 64-bit digest of the canonical edge-list text, as 16 hex digits.
std::string graph_digest(const Graph& g);

}  // namespace rigidity_forge
