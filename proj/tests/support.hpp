#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rigidity_forge/combinatorics.hpp"
#include "rigidity_forge/constructions.hpp"
#include "rigidity_forge/experiments.hpp"
#include "rigidity_forge/graph.hpp"
#include "rigidity_forge/modlinalg.hpp"

namespace rf_test {

using namespace rigidity_forge;

// Erdos-Renyi style graph with edge probability num/den.
inline Graph random_graph(Rng& rng, int n, std::uint64_t num, std::uint64_t den) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform(0, den - 1) < num) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline std::vector<Vertex> sample_distinct(Rng& rng, int n, int count) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    rng.shuffle(std::span<Vertex>(all));
    all.resize(static_cast<std::size_t>(count));
    std::sort(all.begin(), all.end());
    return all;
}

inline Graph remove_vertices(const Graph& g, std::uint64_t removed_mask) {
    std::vector<Vertex> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!(removed_mask >> v & 1)) keep.push_back(v);
    return induced_subgraph(g, keep).graph;
}

// Smallest separating vertex set by exhaustive search (n <= 16).
inline int brute_vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 0;
    if (g.is_complete()) return n - 1;
    int best = n - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const int size = __builtin_popcountll(mask);
        if (size >= best || size > n - 2) continue;
        if (!is_connected(remove_vertices(g, mask))) best = size;
    }
    return best;
}

// All maximal cliques by subset enumeration (n <= 14).
inline std::vector<VertexSet> brute_maximal_cliques(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> cliques;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet members;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) members.push_back(v);
        if (is_clique(g, members)) cliques.push_back(mask);
    }
    std::vector<VertexSet> out;
    for (auto c : cliques) {
        bool maximal = true;
        for (auto d : cliques)
            if (d != c && (d & c) == c) maximal = false;
        if (!maximal) continue;
        VertexSet members;
        for (int v = 0; v < n; ++v)
            if (c >> v & 1) members.push_back(v);
        out.push_back(members);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Number of m-subsets of [n] contained in some set of the system (n <= 20).
inline BigInt brute_covered_count(const CliqueSystem& sys, int m) {
    std::vector<std::uint64_t> masks;
    for (const auto& h : sys.sets) {
        std::uint64_t mask = 0;
        for (Vertex v : h) mask |= std::uint64_t{1} << v;
        masks.push_back(mask);
    }
    BigInt count = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << sys.n); ++s) {
        if (__builtin_popcountll(s) != m) continue;
        for (auto h : masks)
            if ((s & h) == s) {
                ++count;
                break;
            }
    }
    return count;
}

// Integer rigidity matrix with small random coordinates, ranked over Q.
inline std::size_t rational_rank_oracle(const Graph& g, int d, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<long long> p(static_cast<std::size_t>(g.vertex_count() * d));
    for (auto& x : p) x = static_cast<long long>(rng.uniform(0, 2000000)) - 1000000;
    std::vector<std::vector<Rational>> rows;
    for (const Edge& e : g.edges()) {
        std::vector<Rational> row(static_cast<std::size_t>(g.vertex_count() * d), 0);
        for (int k = 0; k < d; ++k) {
            const long long diff = p[static_cast<std::size_t>(e.u * d + k)] - p[static_cast<std::size_t>(e.v * d + k)];
            row[static_cast<std::size_t>(e.u * d + k)] = diff;
            row[static_cast<std::size_t>(e.v * d + k)] = -diff;
        }
        rows.push_back(std::move(row));
    }
    return exact_rational_rank(std::move(rows));
}

}  // namespace rf_test
