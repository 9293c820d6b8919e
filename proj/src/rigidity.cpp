#include "rigidity_forge/rigidity.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rigidity_forge/error.hpp"

namespace rigidity_forge {

std::string_view to_string(Confidence c) noexcept { return c == Confidence::certain ? "certain" : "whp"; }

namespace {

void check_dim(int dim) {
    if (dim < 1) throw InvalidArgument("dimension must be at least 1");
}

void check_trials(const TrialConfig& cfg) {
    if (cfg.trials < 1) throw InvalidArgument("at least one trial is required");
}

void check_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.vertex_count()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
}

std::size_t pairs(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

ModMatrix drop_rows(const ModMatrix& full, std::span<const std::size_t> removed_sorted) {
    ModMatrix out(0, full.cols(), full.field());
    std::size_t next = 0;
    for (std::size_t r = 0; r < full.rows(); ++r) {
        if (next < removed_sorted.size() && removed_sorted[next] == r) {
            ++next;
            continue;
        }
        out.append_row(full.row(r));
    }
    return out;
}

}  // namespace

Framework Framework::random(const Graph& g, int dim, std::uint64_t seed, const PrimeField& field) {
    check_dim(dim);
    Framework f{g, dim, field, seed, {}};
    f.points.resize(static_cast<std::size_t>(g.vertex_count()) * static_cast<std::size_t>(dim));
    Rng rng(seed);
    for (auto& x : f.points) x = rng.uniform(1, field.modulus() - 1);
    return f;
}

void append_rigidity_row(ModMatrix& m, const Framework& f, const Edge& e) {
    const auto d = static_cast<std::size_t>(f.dim);
    std::vector<std::uint64_t> row(m.cols(), 0);
    const auto pu = f.point(e.u);
    const auto pv = f.point(e.v);
    for (std::size_t k = 0; k < d; ++k) {
        const std::uint64_t diff = f.field.sub(pu[k], pv[k]);
        row[static_cast<std::size_t>(e.u) * d + k] = diff;
        row[static_cast<std::size_t>(e.v) * d + k] = f.field.neg(diff);
    }
    m.append_row(row);
}

ModMatrix rigidity_matrix(const Framework& f) {
    const std::size_t cols = static_cast<std::size_t>(f.graph.vertex_count()) * static_cast<std::size_t>(f.dim);
    ModMatrix m(0, cols, f.field);
    for (const Edge& e : f.graph.edges()) append_rigidity_row(m, f, e);
    return m;
}

std::size_t rank_cap(int n, int dim) {
    check_dim(dim);
    const auto nn = static_cast<std::size_t>(n);
    const auto d = static_cast<std::size_t>(dim);
    if (nn >= d + 1) return d * nn - d * (d + 1) / 2;
    return pairs(nn);
}

std::size_t rank_upper_bound(const Graph& g, int dim) {
    return std::min(g.edge_count(), rank_cap(g.vertex_count(), dim));
}

RankReport generic_rank(const Graph& g, int dim, const TrialConfig& cfg) {
    check_dim(dim);
    check_trials(cfg);
    const PrimeField field(cfg.prime);
    const std::size_t bound = rank_upper_bound(g, dim);
    RankReport report{0, dim, cfg.trials, Confidence::whp, cfg.seed, cfg.prime};
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const auto f = Framework::random(g, dim, derive_seed(cfg.seed, t), field);
        report.rank = std::max(report.rank, rank(rigidity_matrix(f)));
        // Further trials cannot raise the maximum.
        if (report.rank == bound) break;
    }
    if (report.rank == bound) report.confidence = Confidence::certain;
    return report;
}

Verdict is_independent(const Graph& g, int dim, const TrialConfig& cfg) {
    const auto report = generic_rank(g, dim, cfg);
    const bool independent = report.rank == g.edge_count();
    return {independent, independent ? Confidence::certain : Confidence::whp};
}

Verdict is_rigid(const Graph& g, int dim, const TrialConfig& cfg) {
    check_dim(dim);
    check_trials(cfg);
    const int n = g.vertex_count();
    if (n <= 1) return {true, Confidence::certain};
    if (n <= dim + 1) return {g.is_complete(), Confidence::certain};
    const std::size_t cap = rank_cap(n, dim);
    if (g.edge_count() < cap) return {false, Confidence::certain};
    const auto report = generic_rank(g, dim, cfg);
    if (report.rank == cap) return {true, Confidence::certain};
    return {false, Confidence::whp};
}

Verdict is_linked(const Graph& g, int dim, Vertex u, Vertex v, const TrialConfig& cfg) {
    check_dim(dim);
    check_trials(cfg);
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) throw InvalidArgument("a linked pair needs two distinct vertices");
    if (g.has_edge(u, v)) return {true, Confidence::certain};

    const PrimeField field(cfg.prime);
    const Graph plus = g.with_edge(Edge(u, v));
    const std::size_t bound_g = rank_upper_bound(g, dim);
    const std::size_t bound_plus = rank_upper_bound(plus, dim);

    std::size_t best_g = 0;
    std::size_t best_plus = 0;
    bool have = false;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const auto f = Framework::random(g, dim, derive_seed(cfg.seed, t), field);
        ModMatrix m = rigidity_matrix(f);
        const std::size_t r_g = rank(m);
        append_rigidity_row(m, f, Edge(u, v));
        const std::size_t r_plus = rank(m);
        if (!have || r_g + r_plus > best_g + best_plus) {
            best_g = r_g;
            best_plus = r_plus;
            have = true;
        }
        if (best_g == bound_g && best_plus == bound_plus) break;
    }
    const bool exact = best_g == bound_g && best_plus == bound_plus;
    return {best_g == best_plus, exact ? Confidence::certain : Confidence::whp};
}

RedundancyReport is_t_redundantly_rigid(const Graph& g, int dim, int t, const TrialConfig& cfg) {
    check_dim(dim);
    check_trials(cfg);
    if (t < 1) throw InvalidArgument("redundancy level t must be at least 1");
    const auto removed = static_cast<std::size_t>(t - 1);
    if (removed > g.edge_count()) throw InvalidArgument("t - 1 exceeds the number of edges");

    RedundancyReport report{true, Confidence::certain, t, 0, {}};
    const auto& edges = g.edges();
    auto fail = [&](std::span<const std::size_t> subset, Confidence c) {
        report.value = false;
        report.confidence = c;
        report.witness.clear();
        for (std::size_t i : subset) report.witness.push_back(edges[i]);
        return false;
    };

    const int n = g.vertex_count();
    if (n <= dim + 1) {
        // Only deleting nothing keeps a complete graph complete.
        report.subsets_checked = for_each_combination(edges.size(), removed, [&](std::span<const std::size_t> subset) {
            std::vector<Edge> drop;
            for (std::size_t i : subset) drop.push_back(edges[i]);
            if (is_rigid(g.without_edges(drop), dim, cfg).value) return true;
            return fail(subset, Confidence::certain);
        });
        return report;
    }

    const std::size_t cap = rank_cap(n, dim);
    if (edges.size() - removed < cap) {
        std::vector<std::size_t> first(removed);
        for (std::size_t i = 0; i < removed; ++i) first[i] = i;
        report.subsets_checked = 1;
        fail(first, Confidence::certain);
        return report;
    }

    const PrimeField field(cfg.prime);
    std::vector<ModMatrix> full;
    for (std::size_t trial = 0; trial < cfg.trials; ++trial)
        full.push_back(rigidity_matrix(Framework::random(g, dim, derive_seed(cfg.seed, trial), field)));

    report.subsets_checked = for_each_combination(edges.size(), removed, [&](std::span<const std::size_t> subset) {
        for (const ModMatrix& m : full)
            if (rank(drop_rows(m, subset)) == cap) return true;
        return fail(subset, Confidence::whp);
    });
    return report;
}

long long cover_rank_bound(const Graph& g, int dim, const EdgeCover& cover) {
    check_dim(dim);
    std::set<Edge> covered;
    auto absorb = [&](const std::vector<Edge>& part) {
        for (const Edge& e : part) {
            if (g.edge_index(e) == Graph::npos)
                throw InvalidArgument("cover edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                      "} is not an edge of the graph");
            covered.insert(e);
        }
    };
    absorb(cover.base);
    const long long d = dim;
    long long bound = static_cast<long long>(cover.base.size());
    for (std::size_t i = 0; i < cover.parts.size(); ++i) {
        absorb(cover.parts[i]);
        std::set<Vertex> touched;
        for (const Edge& e : cover.parts[i]) {
            touched.insert(e.u);
            touched.insert(e.v);
        }
        const auto span_size = static_cast<long long>(touched.size());
        if (span_size <= d)
            throw InvalidArgument("cover part " + std::to_string(i + 1) + " spans " + std::to_string(span_size) +
                                  " vertices; at least d+1 are required");
        bound += d * span_size - d * (d + 1) / 2;
    }
    if (covered.size() != g.edge_count()) throw InvalidArgument("cover does not contain every edge of the graph");
    return bound;
}

}  // namespace rigidity_forge
