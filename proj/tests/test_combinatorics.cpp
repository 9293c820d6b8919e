#include <doctest.h>

#include "rigidity_forge/combinatorics.hpp"
#include "rigidity_forge/constructions.hpp"
#include "rigidity_forge/error.hpp"
#include "support.hpp"

using namespace rigidity_forge;

namespace {

// Random admissible clique system: sets are grown greedily and dropped when they
// clash with an earlier set.
CliqueSystem random_clique_system(Rng& rng, int n, int d) {
    CliqueSystem sys{n, d, {}};
    const auto attempts = rng.uniform(0, 8);
    for (std::uint64_t a = 0; a < attempts; ++a) {
        const int size = static_cast<int>(rng.uniform(1, static_cast<std::uint64_t>(n - 1)));
        VertexSet h = rf_test::sample_distinct(rng, n, size);
        CliqueSystem trial = sys;
        trial.sets.push_back(h);
        if (clique_system_violation(trial).empty()) sys = std::move(trial);
    }
    return sys;
}

}  // namespace

TEST_SUITE("combinatorics") {

TEST_CASE("rational formatting and helpers") {
    CHECK(to_string(Rational(19, 10)) == "19/10");
    CHECK(to_string(Rational(-4, 2)) == "-2");
    CHECK(binomial(36, 3) == 7140);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    CHECK(ceil(Rational(76, 1)) == 76);
    CHECK(ceil(Rational(77, 2)) == 39);
    CHECK(ceil(Rational(-3, 2)) == -1);
}

TEST_CASE("covered subset counts") {
    CHECK(covered_subset_count({5, 2, {{0, 1, 2}, {3, 4}}}, 3) == 1);
    for (int m = 0; m <= 5; ++m) CHECK(covered_subset_count({5, 2, {}}, m) == 0);
    CHECK(covered_subset_count({5, 2, {{0, 1, 2, 3}}}, 4) == 1);
    // Overlapping sets: the shared pair {1,2} must be counted once.
    CHECK(covered_subset_count({6, 4, {{0, 1, 2}, {1, 2, 3}}}, 2) == 5);
}

TEST_CASE("covered subset count agrees with enumeration") {
    Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(rng.uniform(2, 12));
        CliqueSystem sys{n, 2, {}};
        const auto r = rng.uniform(0, 5);
        for (std::uint64_t j = 0; j < r; ++j)
            sys.sets.push_back(rf_test::sample_distinct(rng, n, static_cast<int>(rng.uniform(1, n))));
        const int m = static_cast<int>(rng.uniform(1, n));
        CHECK(covered_subset_count(sys, m) == rf_test::brute_covered_count(sys, m));
    }
}

TEST_CASE("combinatorial lemma examples") {
    const auto bad = verify_comblemma({5, 2, {{0, 1, 2}, {3, 4}, {0, 3}}}, 3);
    CHECK_FALSE(bad.applicable);
    CHECK_FALSE(bad.reason.empty());

    const auto two = verify_comblemma({6, 2, {{0, 1, 2}, {3, 4, 5}}}, 3);
    REQUIRE(two.applicable);
    CHECK(two.count == 2);
    CHECK(two.bound == 10);
    CHECK(two.holds);

    const auto three = verify_comblemma({6, 3, {{0, 1, 2, 3}, {0, 4, 5}}}, 4);
    REQUIRE(three.applicable);
    CHECK(three.count == 1);
    CHECK(three.bound == 5);
    CHECK(three.holds);

    CHECK_FALSE(verify_comblemma({6, 2, {{0, 1, 2}}}, 2).applicable);
    CHECK_FALSE(verify_comblemma({6, 2, {{0, 1, 2, 3, 4, 5}}}, 3).applicable);
    CHECK_FALSE(verify_comblemma({6, 2, {{0, 1}, {0, 1}}}, 3).applicable);
}

TEST_CASE("combinatorial lemma fuzz") {
    Rng rng(2718);
    int applicable = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = static_cast<int>(rng.uniform(2, 4));
        const int n = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(d + 2), 12));
        const CliqueSystem sys = random_clique_system(rng, n, d);
        for (int m = d + 1; m <= n - 1; ++m) {
            const auto r = verify_comblemma(sys, m);
            REQUIRE(r.applicable);
            CHECK(r.count == rf_test::brute_covered_count(sys, m));
            CHECK(r.holds);
            ++applicable;
        }
    }
    CHECK(applicable > 1000);
}

TEST_CASE("rank density constants") {
    CHECK(m_dk(2, 5) == Rational(19, 10));
    CHECK(m_dk(2, 2) == 1);
    CHECK(m_dk(3, 4) == 2);
    CHECK(m_dk(2, 1) == Rational(1, 2));
    CHECK_THROWS_AS(m_dk(2, 6), InvalidArgument);
    CHECK_THROWS_AS(m_dk(2, 0), InvalidArgument);
    // Monotone in k and strictly below the rigid density d.
    for (int d = 1; d <= 5; ++d)
        for (int k = 1; k + 1 < d * (d + 1); ++k) {
            CHECK(m_dk(d, k) <= m_dk(d, k + 1));
            CHECK(m_dk(d, k + 1) < d);
        }
}

TEST_CASE("grn lower bound") {
    CHECK(grn_lower_bound(10, 60) == 1);
    CHECK(grn_lower_bound(10, 59) == 0);
    CHECK(grn_lower_bound(4, 6) == 0);
    CHECK(grn_lower_bound(1, 24) == 2);
    CHECK(grn_lower_bound(1, 23) == 1);
    CHECK(grn_lower_bound(3, 1'000'000'000'000ULL) == 235702);
    for (std::uint64_t e = 0; e < 2000; e += 7) {
        const std::uint64_t r = grn_lower_bound(5, e);
        CHECK(30 * r * r <= e);
        CHECK(30 * (r + 1) * (r + 1) > e);
    }
    CHECK_THROWS_AS(grn_lower_bound(0, 5), InvalidArgument);
}

TEST_CASE("exact expectation of the ordered subgraph size") {
    for (int d = 2; d <= 4; ++d)
        for (int n = d + 1; n <= 12; ++n) {
            const int k = n - 1;
            const Rational per_vertex = Rational(d) - Rational(d * (d + 1), 2 * (k + 1));
            const auto b = expected_gpi_breakdown(complete_graph(n), d);
            for (const auto& v : b.vertices) CHECK(v.expectation == per_vertex);
            CHECK(b.total == per_vertex * n);
            CHECK(b.total == d * n - d * (d + 1) / 2);
        }
    CHECK(exact_expected_gpi_edges(cycle_graph(5), 2) == 5);
    const Rational k77 = exact_expected_gpi_edges(complete_bipartite_graph(7, 7), 2);
    CHECK(k77 >= 28);
    CHECK(exact_expected_gpi_edges(complete_graph(10), 2) == 17);
    CHECK(exact_expected_gpi_edges(complete_graph(5), 2) == 7);
    CHECK_THROWS_AS(exact_expected_gpi_edges(complete_graph(22), 2), InvalidArgument);
    CHECK(exact_expected_gpi_edges(complete_graph(22), 2, 21) == 41);
}


TEST_CASE("covered subset count vanishes past the largest set") {
    Rng rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = static_cast<int>(rng.uniform(2, 4));
        const int n = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(d + 2), 12));
        CliqueSystem sys = random_clique_system(rng, n, d);
        std::size_t largest = 0;
        for (const auto& h : sys.sets) largest = std::max(largest, h.size());
        for (int m = static_cast<int>(largest); m < n; ++m)
            CHECK(covered_subset_count(sys, m) >= covered_subset_count(sys, m + 1));
        CHECK(covered_subset_count(sys, static_cast<int>(largest) + 1) == 0);
    }
}

TEST_CASE("rank density is strictly increasing above d") {
    for (int d = 1; d <= 6; ++d)
        for (int k = d + 1; k + 1 < d * (d + 1); ++k) CHECK(m_dk(d, k) < m_dk(d, k + 1));
}

TEST_CASE("expectation bound under the hypotheses") {
    int checked = 0;
    for (int a = 6; a <= 9; ++a)
        for (int b = a; b <= 9; ++b) {
            const Graph g = complete_bipartite_graph(a, b);
            REQUIRE(check_lemma7_hypotheses(g, 2).all());
            CHECK(exact_expected_gpi_edges(g, 2) >= 2 * (a + b));
            ++checked;
        }
    // Triangle-free 6-regular circulant on 14 vertices: offsets 1, 3, 5.
    std::vector<Edge> edges;
    for (int v = 0; v < 14; ++v)
        for (int j : {1, 3, 5}) edges.emplace_back(v, (v + j) % 14);
    const Graph circulant(14, edges);
    REQUIRE(check_lemma7_hypotheses(circulant, 2).all());
    CHECK(exact_expected_gpi_edges(circulant, 2) >= 28);
    CHECK(checked == 10);
}

}
