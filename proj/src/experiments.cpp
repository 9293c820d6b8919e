#include "rigidity_forge/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "rigidity_forge/constructions.hpp"
#include "rigidity_forge/error.hpp"

namespace rigidity_forge {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

nlohmann::json edge_json(const Edge& e) { return nlohmann::json::array({e.u, e.v}); }

nlohmann::json edges_json(const std::vector<Edge>& edges) {
    auto out = nlohmann::json::array();
    for (const Edge& e : edges) out.push_back(edge_json(e));
    return out;
}

nlohmann::json verdict_json(const Verdict& v) {
    return {{"value", v.value}, {"confidence", std::string(to_string(v.confidence))}};
}

CheckReport start_report(std::string operation, const Graph* g, const TrialConfig& cfg) {
    CheckReport r;
    r.operation = std::move(operation);
    r.input_digest = g != nullptr ? graph_digest(*g) : std::string();
    r.seed = cfg.seed;
    return r;
}

std::size_t binom2(int d) { return static_cast<std::size_t>(d) * static_cast<std::size_t>(d + 1) / 2; }

}  // namespace

nlohmann::json to_json(const CheckReport& report) {
    return {
        {"operation", report.operation},
        {"input_digest", report.input_digest},
        {"seed", report.seed},
        {"status", std::string(to_string(report.status))},
        {"verdicts", report.verdicts},
        {"witnesses", report.witnesses},
        {"runtime_ms", report.runtime_ms},
    };
}

Lemma7Hypotheses check_lemma7_hypotheses(const Graph& g, int dim) {
    if (dim < 2) throw InvalidArgument("the hypothesis check is defined for d >= 2");
    Lemma7Hypotheses report;
    auto note = [&](Vertex v, const char* condition, std::string detail) {
        if (!report.witness) report.witness = HypothesisWitness{v, condition, std::move(detail)};
    };
    const int needed = dim * (dim + 1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& nbrs = g.neighbors(v);
        if (g.degree(v) < needed) {
            report.min_degree_ok = false;
            note(v, "min_degree", "degree " + std::to_string(g.degree(v)) + " < " + std::to_string(needed));
        }
        if (is_clique(g, nbrs)) {
            report.no_clique_neighborhood = false;
            note(v, "no_clique_neighborhood", "the neighbourhood induces a clique");
        }
        const auto local = induced_subgraph(g, nbrs);
        const auto cliques = maximal_cliques(local.graph);
        for (std::size_t i = 0; i < cliques.size(); ++i) {
            for (std::size_t j = i + 1; j < cliques.size(); ++j) {
                std::vector<Vertex> common;
                std::set_intersection(cliques[i].begin(), cliques[i].end(), cliques[j].begin(), cliques[j].end(),
                                      std::back_inserter(common));
                if (static_cast<int>(common.size()) > dim - 2) {
                    report.intersection_ok = false;
                    note(v, "intersection",
                         "two maximal cliques of the neighbourhood share " + std::to_string(common.size()) +
                             " vertices");
                }
            }
        }
    }
    return report;
}

CheckReport lemma7_hypotheses_check(const Graph& g, int dim) {
    const auto start = Clock::now();
    CheckReport r = start_report("check-lemma7-hyp", &g, {});
    const auto h = check_lemma7_hypotheses(g, dim);
    r.status = h.all() ? CheckStatus::pass : CheckStatus::fail;
    r.verdicts = {{"min_degree_ok", h.min_degree_ok},
                  {"no_clique_neighborhood", h.no_clique_neighborhood},
                  {"intersection_ok", h.intersection_ok}};
    if (h.witness)
        r.witnesses = {{"vertex", h.witness->vertex}, {"condition", h.witness->condition}, {"detail", h.witness->detail}};
    r.runtime_ms = elapsed_ms(start);
    return r;
}

MonteCarloStats monte_carlo_gpi(const Graph& g, int dim, std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw InvalidArgument("at least one trial is required");
    std::vector<double> samples;
    samples.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const auto order = random_ordering(g.vertex_count(), derive_seed(seed, t));
        samples.push_back(static_cast<double>(build_gpi(g, dim, order).subgraph.edge_count()));
    }
    MonteCarloStats stats;
    stats.trials = trials;
    stats.seed = seed;
    stats.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(trials);
    if (trials > 1) {
        double squares = 0.0;
        for (double x : samples) squares += (x - stats.mean) * (x - stats.mean);
        stats.stddev = std::sqrt(squares / static_cast<double>(trials - 1));
    }
    stats.half_width = kZ99 * stats.stddev / std::sqrt(static_cast<double>(trials));
    return stats;
}

Rational brute_force_expected_gpi(const Graph& g, int dim) {
    const int n = g.vertex_count();
    if (n > 8) throw InvalidArgument("brute-force expectation supports at most 8 vertices");
    Ordering order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    BigInt total = 0;
    BigInt count = 0;
    do {
        total += build_gpi(g, dim, order).subgraph.edge_count();
        count += 1;
    } while (std::next_permutation(order.begin(), order.end()));
    return Rational(total, count);
}

std::size_t exact_rational_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            const Rational factor = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::size_t rational_rigidity_rank(const Graph& g, int dim, std::uint64_t seed, std::size_t trials) {
    if (dim < 1) throw InvalidArgument("dimension must be at least 1");
    const auto n = static_cast<std::size_t>(g.vertex_count());
    const auto d = static_cast<std::size_t>(dim);
    constexpr long long kRange = 1LL << 20;
    std::size_t best = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed ^ 0x5eedf00dULL, t));
        std::vector<long long> coords(n * d);
        for (auto& x : coords) x = static_cast<long long>(rng.uniform(0, 2 * kRange)) - kRange;
        std::vector<std::vector<Rational>> rows;
        for (const Edge& e : g.edges()) {
            std::vector<Rational> row(n * d, 0);
            for (std::size_t k = 0; k < d; ++k) {
                const long long diff = coords[static_cast<std::size_t>(e.u) * d + k] - coords[static_cast<std::size_t>(e.v) * d + k];
                row[static_cast<std::size_t>(e.u) * d + k] = diff;
                row[static_cast<std::size_t>(e.v) * d + k] = -diff;
            }
            rows.push_back(std::move(row));
        }
        best = std::max(best, exact_rational_rank(std::move(rows)));
    }
    return best;
}

CheckReport theorem1_spot_check(const Graph& g, int dim, const TrialConfig& cfg) {
    const auto start = Clock::now();
    CheckReport r = start_report("check-theorem1", &g, cfg);
    const int kappa = vertex_connectivity(g);
    r.verdicts["connectivity"] = kappa;
    r.verdicts["required_connectivity"] = dim * (dim + 1);
    if (kappa >= dim * (dim + 1)) {
        const Verdict rigid = is_rigid(g, dim, cfg);
        r.verdicts["rigid"] = verdict_json(rigid);
        r.status = rigid.value ? CheckStatus::pass : CheckStatus::fail;
    }
    r.runtime_ms = elapsed_ms(start);
    return r;
}

CheckReport theorem2_spot_check(const Graph& g, int dim, const TrialConfig& cfg) {
    const auto start = Clock::now();
    CheckReport r = start_report("check-theorem2", &g, cfg);
    const int kappa = vertex_connectivity(g);
    r.verdicts["connectivity"] = kappa;
    r.verdicts["required_connectivity"] = dim * (dim + 1);
    if (kappa >= dim * (dim + 1)) {
        const Verdict global = is_globally_rigid(g, dim, cfg);
        r.verdicts["globally_rigid"] = verdict_json(global);
        r.status = global.value ? CheckStatus::pass : CheckStatus::fail;
    }
    r.runtime_ms = elapsed_ms(start);
    return r;
}

CheckReport theorem9_check(int dim, const TrialConfig& cfg, bool allow_large_dim) {
    if (dim < 2) throw InvalidArgument("the redundancy check needs d >= 2");
    if (dim != 2 && !allow_large_dim)
        throw InvalidArgument("dimensions other than 2 need allow_large_dim (long enumeration)");
    const auto start = Clock::now();
    const Graph g = sharpness_example(dim);
    const auto matching = sharpness_matching(dim);
    const std::size_t b = binom2(dim);
    CheckReport r = start_report("check-theorem9", &g, cfg);

    const int kappa = vertex_connectivity(g);
    const auto redundant = is_t_redundantly_rigid(g, dim, static_cast<int>(b) + 1, cfg);

    const std::vector<Edge> drop_more(matching.begin(), matching.begin() + static_cast<std::ptrdiff_t>(b + 1));
    const Verdict rigid_after_more = is_rigid(g.without_edges(drop_more), dim, cfg);

    const auto global_redundant = is_t_redundantly_globally_rigid(g, dim, static_cast<int>(b), cfg);

    const std::vector<Edge> drop_b(matching.begin(), matching.begin() + static_cast<std::ptrdiff_t>(b));
    const Graph thinned = g.without_edges(drop_b);
    const Verdict rigid_after_b = is_rigid(thinned, dim, cfg);
    const Verdict global_after_b = is_globally_rigid(thinned, dim, cfg);

    r.verdicts = {
        {"connectivity", kappa},
        {"redundantly_rigid", {{"t", b + 1}, {"value", redundant.value}, {"subsets_checked", redundant.subsets_checked},
                               {"confidence", std::string(to_string(redundant.confidence))}}},
        {"rigid_after_removing_matching_edges", {{"removed", b + 1}, {"verdict", verdict_json(rigid_after_more)}}},
        {"redundantly_globally_rigid",
         {{"t", b}, {"value", global_redundant.value}, {"subsets_checked", global_redundant.subsets_checked},
          {"confidence", std::string(to_string(global_redundant.confidence))}}},
        {"after_removing_matching_edges",
         {{"removed", b}, {"rigid", verdict_json(rigid_after_b)}, {"globally_rigid", verdict_json(global_after_b)}}},
    };
    r.witnesses = {{"removed_for_non_rigidity", edges_json(drop_more)}, {"removed_for_non_global", edges_json(drop_b)}};
    if (!redundant.witness.empty()) r.witnesses["redundancy_failure"] = edges_json(redundant.witness);
    if (!global_redundant.witness.empty()) r.witnesses["global_redundancy_failure"] = edges_json(global_redundant.witness);

    const bool ok = kappa == dim * (dim + 1) && redundant.value && !rigid_after_more.value && global_redundant.value &&
                    rigid_after_b.value && !global_after_b.value;
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    r.runtime_ms = elapsed_ms(start);
    return r;
}

CheckReport theorem10_check(const Graph& g, int dim, const TrialConfig& cfg) {
    const auto start = Clock::now();
    CheckReport r = start_report("check-theorem10", &g, cfg);
    const int kappa = vertex_connectivity(g);
    r.verdicts["connectivity"] = kappa;
    const Verdict rigid = is_rigid(g, dim, cfg);
    r.verdicts["rigid"] = verdict_json(rigid);
    if (kappa >= 1 && kappa < dim * (dim + 1) && !rigid.value) {
        const Rational density = m_dk(dim, kappa);
        const Rational scaled = density * g.vertex_count();
        const auto report = generic_rank(g, dim, cfg);
        r.verdicts["m_dk"] = to_string(density);
        r.verdicts["bound"] = to_string(scaled);
        r.verdicts["bound_ceil"] = ceil(scaled).str();
        r.verdicts["rank"] = report.rank;
        r.verdicts["rank_confidence"] = std::string(to_string(report.confidence));
        r.status = Rational(report.rank) >= scaled ? CheckStatus::pass : CheckStatus::fail;
    }
    r.runtime_ms = elapsed_ms(start);
    return r;
}

namespace {

// Samples orderings and checks independence of each G_pi.
void sample_gpi_independence(const Graph& g, int dim, std::size_t orderings, const TrialConfig& cfg,
                             CheckReport& r, bool& all_independent) {
    all_independent = true;
    std::size_t min_edges = 0;
    std::size_t max_edges = 0;
    for (std::size_t i = 0; i < orderings; ++i) {
        const auto order = random_ordering(g.vertex_count(), derive_seed(cfg.seed, i));
        const auto gpi = build_gpi(g, dim, order);
        const std::size_t m = gpi.subgraph.edge_count();
        min_edges = i == 0 ? m : std::min(min_edges, m);
        max_edges = std::max(max_edges, m);
        if (!is_independent(gpi.subgraph, dim, cfg).value && all_independent) {
            all_independent = false;
            r.witnesses["dependent_ordering"] = order;
        }
    }
    r.verdicts["orderings"] = orderings;
    r.verdicts["gpi_edges_min"] = min_edges;
    r.verdicts["gpi_edges_max"] = max_edges;
    r.verdicts["all_independent"] = all_independent;
}

}  // namespace

CheckReport lemma6_property_check(const Graph& g, int dim, std::size_t orderings, const TrialConfig& cfg) {
    if (g.vertex_count() > 40) throw InvalidArgument("the linked-pair scan is limited to 40 vertices");
    if (dim < 2) throw InvalidArgument("the ordered construction is defined for d >= 2");
    const auto start = Clock::now();
    CheckReport r = start_report("check-lemma6", &g, cfg);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
            if (g.has_edge(u, v)) continue;
            if (is_linked(g, dim, u, v, cfg).value) {
                r.verdicts["hypothesis"] = false;
                r.witnesses["linked_non_edge"] = edge_json(Edge(u, v));
                r.runtime_ms = elapsed_ms(start);
                return r;
            }
        }
    }
    r.verdicts["hypothesis"] = true;
    bool all_independent = true;
    sample_gpi_independence(g, dim, orderings, cfg, r, all_independent);
    r.status = all_independent ? CheckStatus::pass : CheckStatus::fail;
    r.runtime_ms = elapsed_ms(start);
    return r;
}

CheckReport lemma8_property_check(const Graph& g, int dim, std::size_t orderings, const TrialConfig& cfg) {
    if (dim < 2) throw InvalidArgument("the ordered construction is defined for d >= 2");
    const auto start = Clock::now();
    CheckReport r = start_report("check-lemma8", &g, cfg);
    const int n = g.vertex_count();
    // Partial filter: a non-edge xy with a common neighbour z is weakly
    // globally linked when it is linked in G - z.
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            if (g.has_edge(x, y)) continue;
            std::vector<Vertex> common;
            std::set_intersection(g.neighbors(x).begin(), g.neighbors(x).end(), g.neighbors(y).begin(),
                                  g.neighbors(y).end(), std::back_inserter(common));
            for (Vertex z : common) {
                std::vector<Vertex> rest;
                for (Vertex w = 0; w < n; ++w)
                    if (w != z) rest.push_back(w);
                if (wgl_sufficient(g, dim, x, y, rest, cfg).value) {
                    r.verdicts["hypothesis"] = "violated";
                    r.witnesses["weakly_globally_linked_non_edge"] = edge_json(Edge(x, y));
                    r.witnesses["via"] = z;
                    r.runtime_ms = elapsed_ms(start);
                    return r;
                }
            }
        }
    }
    r.verdicts["hypothesis"] = "hypothesis not verifiable";
    bool all_independent = true;
    sample_gpi_independence(g, dim, orderings, cfg, r, all_independent);
    r.status = CheckStatus::not_verifiable;
    r.runtime_ms = elapsed_ms(start);
    return r;
}

}  // namespace rigidity_forge
