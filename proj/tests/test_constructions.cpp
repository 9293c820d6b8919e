#include <doctest.h>

#include "rigidity_forge/constructions.hpp"
#include "rigidity_forge/error.hpp"
#include "rigidity_forge/rigidity.hpp"
#include "support.hpp"

using namespace rigidity_forge;

namespace {

bool is_regular(const Graph& g, int k) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("base graphs") {
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(path_graph(4).edge_count() == 3);
    const Graph k34 = complete_bipartite_graph(3, 4);
    CHECK(k34.edge_count() == 12);
    CHECK_FALSE(k34.has_edge(0, 1));
    CHECK(k34.has_edge(0, 3));
}

TEST_CASE("harary graphs") {
    CHECK(harary_graph(2, 5) == cycle_graph(5));
    const Graph h58 = harary_graph(5, 8);
    CHECK(is_regular(h58, 5));
    CHECK(vertex_connectivity(h58) == 5);
    const Graph h47 = harary_graph(4, 7);
    CHECK(is_regular(h47, 4));
    CHECK(vertex_connectivity(h47) == 4);
    for (int s = 4; s <= 12; ++s)
        for (int k = 1; k < s; ++k) {
            if (k * s % 2 || (k == 1 && s > 2)) continue;
            const Graph h = harary_graph(k, s);
            CHECK(is_regular(h, k));
            CHECK(vertex_connectivity(h) == k);
        }
    CHECK_THROWS_AS(harary_graph(3, 5), InvalidArgument);
    CHECK_THROWS_AS(harary_graph(5, 5), InvalidArgument);
    CHECK_THROWS_AS(harary_graph(1, 6), InvalidArgument);
    CHECK(harary_graph(1, 2) == complete_graph(2));
}

TEST_CASE("zero extension") {
    const Graph k3 = complete_graph(3);
    CHECK(zero_extension(k3, 2, std::vector<Vertex>{0, 1}) == Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}));
    CHECK(zero_extension(Graph(2), 2, std::vector<Vertex>{0, 1}) == Graph(3, {{0, 2}, {1, 2}}));
    CHECK_THROWS_AS(zero_extension(k3, 2, std::vector<Vertex>{0}), InvalidArgument);
    CHECK_THROWS_AS(zero_extension(k3, 2, std::vector<Vertex>{0, 0}), InvalidArgument);
}

TEST_CASE("one extension") {
    const Graph from_k4 = one_extension(complete_graph(4), 2, {0, 1}, std::vector<Vertex>{2});
    CHECK(from_k4.vertex_count() == 5);
    CHECK(from_k4.edge_count() == 8);
    CHECK_FALSE(from_k4.has_edge(0, 1));
    CHECK(generic_rank(from_k4, 2).rank == 7);
    CHECK(rf_test::rational_rank_oracle(from_k4, 2, 1) == 7);

    const Graph from_k3 = one_extension(complete_graph(3), 2, {0, 1}, std::vector<Vertex>{2});
    CHECK(from_k3 == Graph(4, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}));
    CHECK(generic_rank(from_k3, 2).rank == 5);

    CHECK_THROWS_AS(one_extension(cycle_graph(4), 2, {0, 2}, std::vector<Vertex>{1}), InvalidArgument);
    CHECK_THROWS_AS(one_extension(complete_graph(3), 2, {0, 1}, std::vector<Vertex>{1}), InvalidArgument);
}

TEST_CASE("Henneberg moves preserve independence") {
    Rng rng(555);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = static_cast<int>(rng.uniform(2, 3));
        Graph g = complete_graph(d + 1);
        for (int step = 0; step < 6; ++step) {
            const int n = g.vertex_count();
            if (rng.uniform(0, 1) == 0 || g.edge_count() == 0) {
                g = zero_extension(g, d, rf_test::sample_distinct(rng, n, d));
            } else {
                const Edge e = g.edges()[rng.uniform(0, g.edge_count() - 1)];
                std::vector<Vertex> others;
                for (int v = 0; v < n; ++v)
                    if (v != e.u && v != e.v) others.push_back(v);
                rng.shuffle(std::span<Vertex>(others));
                others.resize(static_cast<std::size_t>(d - 1));
                g = one_extension(g, d, e, others);
            }
            REQUIRE(is_independent(g, d).value);
        }
        CHECK(is_rigid(g, d).value);
    }
}

TEST_CASE("orderings") {
    const Ordering o = random_ordering(10, 3);
    CHECK(o.size() == 10);
    CHECK_NOTHROW(validate_ordering(o, 10));
    CHECK(random_ordering(10, 3) == o);
    CHECK_THROWS_AS(validate_ordering(std::vector<Vertex>{0, 0, 1}, 3), InvalidArgument);
    CHECK_THROWS_AS(validate_ordering(std::vector<Vertex>{0, 1}, 3), InvalidArgument);
}

TEST_CASE("ordered subgraph on complete graphs") {
    Rng rng(21);
    for (int d = 2; d <= 4; ++d)
        for (int n = d + 1; n <= 10; ++n) {
            const Graph k = complete_graph(n);
            const auto r = build_gpi(k, d, random_ordering(n, rng.next()));
            CHECK(static_cast<long>(r.subgraph.edge_count()) == d * n - d * (d + 1) / 2);
            for (const auto& step : r.trace) CHECK(step.rule != GpiRule::c);
        }
}

TEST_CASE("ordered subgraph trace rules") {
    std::vector<Vertex> identity{0, 1, 2, 3, 4};
    const auto c5 = build_gpi(cycle_graph(5), 2, identity);
    CHECK(c5.subgraph == cycle_graph(5));
    for (const auto& step : c5.trace) CHECK((step.rule == GpiRule::a || step.rule == GpiRule::first_d_vertices));

    const Graph k77 = complete_bipartite_graph(7, 7);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto r = build_gpi(k77, 2, random_ordering(14, seed));
        for (const auto& step : r.trace) {
            CHECK(step.rule != GpiRule::b);
            if (step.back_degree >= 3) {
                CHECK(step.rule == GpiRule::c);
                CHECK(step.chosen.size() == 3);
                REQUIRE(step.non_adjacent_pair);
            }
        }
    }
}

TEST_CASE("ordered subgraph structural invariants") {
    Rng rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = static_cast<int>(rng.uniform(2, 3));
        const int n = static_cast<int>(rng.uniform(2, 12));
        const Graph g = rf_test::random_graph(rng, n, rng.uniform(3, 9), 10);
        const Ordering order = random_ordering(n, rng.next());
        const auto r = build_gpi(g, d, order);
        std::vector<int> position(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
        std::size_t total = 0;
        for (const auto& step : r.trace) {
            const auto expected_size = step.rule == GpiRule::c ? d + 1 : std::min(step.back_degree, d);
            CHECK(static_cast<int>(step.chosen.size()) == expected_size);
            for (Vertex w : step.chosen) {
                CHECK(g.has_edge(step.vertex, w));
                CHECK(position[static_cast<std::size_t>(w)] < step.position);
                CHECK(r.subgraph.has_edge(step.vertex, w));
            }
            total += step.chosen.size();
        }
        CHECK(total == r.subgraph.edge_count());
    }
    CHECK_THROWS_AS(build_gpi(complete_graph(4), 1, std::vector<Vertex>{0, 1, 2, 3}), InvalidArgument);
}

TEST_CASE("Lovasz-Yemini family") {
    const auto ly = lovasz_yemini_family(2, 8);
    CHECK(ly.graph.vertex_count() == 40);
    CHECK(ly.k == 5);
    CHECK(vertex_connectivity(ly.graph) == 5);
    CHECK_FALSE(is_rigid(ly.graph, 2).value);
    CHECK(cover_rank_bound(ly.graph, 2, ly.cover) == 76);
    CHECK(generic_rank(ly.graph, 2).rank == 76);

    const auto boundary = lovasz_yemini_family(2, 6);
    CHECK(boundary.graph.vertex_count() == 30);
    CHECK(cover_rank_bound(boundary.graph, 2, boundary.cover) == 57);

    CHECK_THROWS_AS(lovasz_yemini_family(2, cycle_graph(6)), InvalidArgument);
}

TEST_CASE("sharpness example") {
    const Graph g = sharpness_example(2);
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 36);
    CHECK(vertex_connectivity(g) == 6);
    CHECK(is_regular(g, 6));
    CHECK(sharpness_matching(2).size() == 6);
    CHECK(vertex_connectivity(sharpness_example(3)) == 12);
    auto four = sharpness_matching(2);
    four.resize(4);
    CHECK_FALSE(is_rigid(g.without_edges(four), 2).value);
    Rng rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Edge> removed;
        for (auto i : rf_test::sample_distinct(rng, 36, 3)) removed.push_back(g.edges()[static_cast<std::size_t>(i)]);
        CHECK(is_rigid(g.without_edges(removed), 2).value);
    }
}


TEST_CASE("Lovasz-Yemini family structure") {
    for (int d = 2; d <= 3; ++d)
        for (int s : {d * (d + 1), d * (d + 1) + 2, d * (d + 1) + 4}) {
            const auto ly = lovasz_yemini_family(d, s);
            CHECK(ly.k == d * (d + 1) - 1);
            CHECK(ly.graph.vertex_count() == ly.k * s);
            CHECK(is_regular(ly.graph, d * (d + 1) - 1));
            CHECK_NOTHROW(cover_rank_bound(ly.graph, d, ly.cover));
            std::size_t covered = ly.cover.base.size();
            for (const auto& part : ly.cover.parts) covered += part.size();
            CHECK(covered == ly.graph.edge_count());
        }
}

TEST_CASE("ordered subgraph is independent when no non-edge is linked") {
    Rng rng(64);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.uniform(4, 9));
        // Sparse graphs: trees plus a few chords.
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng.uniform(0, v - 1)), v);
        for (int extra = 0; extra < 2; ++extra) {
            const auto uv = rf_test::sample_distinct(rng, n, 2);
            edges.emplace_back(uv[0], uv[1]);
        }
        const Graph g(n, edges);
        bool hypothesis = true;
        for (int u = 0; u < n && hypothesis; ++u)
            for (int v = u + 1; v < n && hypothesis; ++v)
                if (!g.has_edge(u, v) && is_linked(g, 2, u, v).value) hypothesis = false;
        if (!hypothesis) continue;
        for (std::uint64_t i = 0; i < 5; ++i)
            CHECK(is_independent(build_gpi(g, 2, random_ordering(n, rng.next())).subgraph, 2).value);
    }
}

}
