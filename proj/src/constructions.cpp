#include "rigidity_forge/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rigidity_forge/error.hpp"
#include "rigidity_forge/modlinalg.hpp"

namespace rigidity_forge {

Graph complete_graph(int n) {
    if (n < 0) throw InvalidArgument("vertex count must be non-negative");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw InvalidArgument("a path needs at least one vertex");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 0 || b < 0) throw InvalidArgument("part sizes must be non-negative");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, edges);
}

Graph harary_graph(int k, int s) {
    if (k < 1 || k >= s) throw InvalidArgument("harary graph needs 1 <= k < s");
    if (k == 1 && s > 2) throw InvalidArgument("a 1-regular graph on more than 2 vertices is disconnected");
    if ((static_cast<long long>(k) * s) % 2 != 0) throw InvalidArgument("harary graph needs k*s even");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < s; ++i) {
        for (int j = 1; j <= k / 2; ++j) edges.emplace_back(i, (i + j) % s);
        if (k % 2 == 1) edges.emplace_back(i, (i + s / 2) % s);
    }
    return Graph(s, edges);
}

namespace {

void require_distinct_in_range(std::span<const Vertex> vs, int n, const char* what) {
    std::vector<Vertex> sorted(vs.begin(), vs.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument(std::string(what) + " must be distinct");
    for (Vertex v : sorted)
        if (v < 0 || v >= n) throw InvalidArgument(std::string(what) + " contain an out-of-range vertex");
}

}  // namespace

Graph zero_extension(const Graph& g, int dim, std::span<const Vertex> targets) {
    if (dim < 1) throw InvalidArgument("dimension must be at least 1");
    if (targets.size() != static_cast<std::size_t>(dim))
        throw InvalidArgument("0-extension needs exactly d targets");
    require_distinct_in_range(targets, g.vertex_count(), "0-extension targets");
    const Vertex fresh = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (Vertex t : targets) edges.emplace_back(fresh, t);
    return Graph(fresh + 1, edges);
}

Graph one_extension(const Graph& g, int dim, const Edge& edge, std::span<const Vertex> targets) {
    if (dim < 1) throw InvalidArgument("dimension must be at least 1");
    if (targets.size() + 1 != static_cast<std::size_t>(dim))
        throw InvalidArgument("1-extension needs exactly d-1 further targets");
    if (g.edge_index(edge) == Graph::npos) throw InvalidArgument("1-extension edge is not in the graph");
    require_distinct_in_range(targets, g.vertex_count(), "1-extension targets");
    for (Vertex t : targets)
        if (t == edge.u || t == edge.v) throw InvalidArgument("1-extension targets overlap the split edge");

    const Vertex fresh = g.vertex_count();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (e != edge) edges.push_back(e);
    edges.emplace_back(fresh, edge.u);
    edges.emplace_back(fresh, edge.v);
    for (Vertex t : targets) edges.emplace_back(fresh, t);
    return Graph(fresh + 1, edges);
}

void validate_ordering(std::span<const Vertex> order, int n) {
    if (order.size() != static_cast<std::size_t>(n)) throw InvalidArgument("ordering length must equal n");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex v : order) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw InvalidArgument("ordering is not a permutation of the vertices");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Ordering random_ordering(int n, std::uint64_t seed) {
    Ordering order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(std::span<Vertex>(order));
    return order;
}

std::string_view to_string(GpiRule r) noexcept {
    switch (r) {
        case GpiRule::first_d_vertices: return "first-d-vertices";
        case GpiRule::a: return "a";
        case GpiRule::b: return "b";
        case GpiRule::c: return "c";
    }
    return "unknown";
}

GpiResult build_gpi(const Graph& g, int dim, std::span<const Vertex> order) {
    if (dim < 2) throw InvalidArgument("the ordered construction is defined for d >= 2");
    const int n = g.vertex_count();
    validate_ordering(order, n);

    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    GpiResult result;
    result.trace.reserve(order.size());
    std::vector<Edge> kept;
    const auto d = static_cast<std::size_t>(dim);

    for (int i = 0; i < n; ++i) {
        const Vertex v = order[static_cast<std::size_t>(i)];
        VertexSet back;
        for (Vertex w : g.neighbors(v))
            if (position[static_cast<std::size_t>(w)] < i) back.push_back(w);

        GpiStep step;
        step.vertex = v;
        step.position = i;
        step.back_degree = static_cast<int>(back.size());

        if (back.size() <= d) {
            step.rule = i < dim ? GpiRule::first_d_vertices : GpiRule::a;
            step.chosen = back;
        } else if (is_clique(g, back)) {
            step.rule = GpiRule::b;
            step.chosen.assign(back.begin(), back.begin() + static_cast<std::ptrdiff_t>(d));
        } else {
            step.rule = GpiRule::c;
            std::optional<Edge> pair;
            for (std::size_t x = 0; x < back.size() && !pair; ++x)
                for (std::size_t y = x + 1; y < back.size() && !pair; ++y)
                    if (!g.has_edge(back[x], back[y])) pair = Edge(back[x], back[y]);
            step.non_adjacent_pair = pair;
            step.chosen = {pair->u, pair->v};
            for (Vertex w : back) {
                if (step.chosen.size() == d + 1) break;
                if (w != pair->u && w != pair->v) step.chosen.push_back(w);
            }
            std::sort(step.chosen.begin(), step.chosen.end());
        }
        for (Vertex w : step.chosen) kept.emplace_back(v, w);
        result.trace.push_back(std::move(step));
    }
    result.subgraph = Graph(n, kept);
    return result;
}

LovaszYeminiFamily lovasz_yemini_family(int dim, int s) {
    if (dim < 2) throw InvalidArgument("the non-rigid family needs d >= 2");
    const int k = dim * (dim + 1) - 1;
    if (s < k + 1) throw InvalidArgument("the non-rigid family needs s >= k+1 = " + std::to_string(k + 1));
    if ((static_cast<long long>(k) * s) % 2 != 0) throw InvalidArgument("the non-rigid family needs k*s even");
    return lovasz_yemini_family(dim, harary_graph(k, s));
}

LovaszYeminiFamily lovasz_yemini_family(int dim, const Graph& base) {
    if (dim < 2) throw InvalidArgument("the non-rigid family needs d >= 2");
    const int k = dim * (dim + 1) - 1;
    const int s = base.vertex_count();
    if (s < k + 1) throw InvalidArgument("the base graph needs at least k+1 vertices");
    for (Vertex v = 0; v < s; ++v)
        if (base.degree(v) != k) throw InvalidArgument("the base graph must be " + std::to_string(k) + "-regular");
    if (vertex_connectivity(base) != k)
        throw InvalidArgument("the base graph must be " + std::to_string(k) + "-connected");

    LovaszYeminiFamily family;
    family.base = base;
    family.k = k;
    std::vector<Edge> edges;
    for (Vertex b = 0; b < s; ++b) {
        std::vector<Edge> clique;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) clique.emplace_back(b * k + i, b * k + j);
        edges.insert(edges.end(), clique.begin(), clique.end());
        family.cover.parts.push_back(std::move(clique));
    }
    std::vector<int> next_free(static_cast<std::size_t>(s), 0);
    for (const Edge& e : base.edges()) {
        const Vertex x = e.u * k + next_free[static_cast<std::size_t>(e.u)]++;
        const Vertex y = e.v * k + next_free[static_cast<std::size_t>(e.v)]++;
        edges.emplace_back(x, y);
        family.cover.base.emplace_back(x, y);
    }
    family.graph = Graph(k * s, edges);
    return family;
}

std::vector<Edge> sharpness_matching(int dim) {
    if (dim < 2) throw InvalidArgument("the sharpness example needs d >= 2");
    const int block = dim * (dim + 1);
    std::vector<Edge> matching;
    for (Vertex i = 0; i < block; ++i) matching.emplace_back(i, block + i);
    return matching;
}

Graph sharpness_example(int dim) {
    const auto matching = sharpness_matching(dim);
    const int block = dim * (dim + 1);
    std::vector<Edge> edges = matching;
    for (int offset : {0, block})
        for (Vertex i = 0; i < block; ++i)
            for (Vertex j = i + 1; j < block; ++j) edges.emplace_back(offset + i, offset + j);
    return Graph(2 * block, edges);
}

}  // namespace rigidity_forge
