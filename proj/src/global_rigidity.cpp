#include "rigidity_forge/global_rigidity.hpp"

#include <algorithm>
#include <string>

#include "rigidity_forge/error.hpp"

namespace rigidity_forge {

std::string_view to_string(CheckStatus s) noexcept {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inapplicable: return "inapplicable";
        case CheckStatus::not_verifiable: return "not-verifiable";
    }
    return "unknown";
}

ModMatrix stress_matrix(const Graph& g, std::span<const std::uint64_t> stress, const PrimeField& field) {
    if (stress.size() != g.edge_count()) throw InvalidArgument("stress needs one weight per edge");
    const auto n = static_cast<std::size_t>(g.vertex_count());
    ModMatrix omega(n, n, field);
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto u = static_cast<std::size_t>(edges[i].u);
        const auto v = static_cast<std::size_t>(edges[i].v);
        const std::uint64_t w = stress[i];
        omega.at(u, v) = field.neg(w);
        omega.at(v, u) = field.neg(w);
        omega.at(u, u) = field.add(omega.at(u, u), w);
        omega.at(v, v) = field.add(omega.at(v, v), w);
    }
    return omega;
}

StressCertificate stress_matrix_rank(const Graph& g, int dim, const TrialConfig& cfg) {
    if (dim < 1) throw InvalidArgument("dimension must be at least 1");
    if (cfg.trials < 1) throw InvalidArgument("at least one trial is required");
    const int n = g.vertex_count();
    if (n < dim + 2) throw InvalidArgument("stress certificates need at least d+2 vertices");

    const PrimeField field(cfg.prime);
    StressCertificate best;
    bool have = false;
    const std::size_t target = static_cast<std::size_t>(n - dim - 1);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const std::uint64_t trial_seed = derive_seed(cfg.seed, t);
        const auto f = Framework::random(g, dim, trial_seed, field);
        const ModMatrix r = rigidity_matrix(f);
        auto w = left_kernel_sample(r, derive_seed(trial_seed, 1));
        const std::size_t omega_rank = rank(stress_matrix(g, w, field));
        if (!have || omega_rank > best.omega_rank) {
            best = StressCertificate{g, dim, std::move(w), omega_rank, target, rank(r), trial_seed, cfg.prime};
            have = true;
        }
        if (best.omega_rank >= target) break;
    }
    return best;
}

Verdict is_globally_rigid(const Graph& g, int dim, const TrialConfig& cfg) {
    if (dim < 1) throw InvalidArgument("dimension must be at least 1");
    const int n = g.vertex_count();
    if (g.is_complete()) return {true, Confidence::certain};
    if (n <= dim + 1) return {false, Confidence::certain};
    if (dim == 1) return {vertex_connectivity(g) >= 2, Confidence::certain};

    const Verdict rigid = is_rigid(g, dim, cfg);
    if (!rigid.value) return rigid;
    const auto cert = stress_matrix_rank(g, dim, cfg);
    return {cert.omega_rank == cert.target, Confidence::whp};
}

GlobalRedundancyReport is_t_redundantly_globally_rigid(const Graph& g, int dim, int t, const TrialConfig& cfg) {
    if (t < 1) throw InvalidArgument("redundancy level t must be at least 1");
    const auto removed = static_cast<std::size_t>(t - 1);
    if (removed > g.edge_count()) throw InvalidArgument("t - 1 exceeds the number of edges");

    GlobalRedundancyReport report{true, Confidence::certain, t, 0, {}};
    const auto& edges = g.edges();
    report.subsets_checked = for_each_combination(edges.size(), removed, [&](std::span<const std::size_t> subset) {
        std::vector<Edge> drop;
        for (std::size_t i : subset) drop.push_back(edges[i]);
        const Verdict v = is_globally_rigid(g.without_edges(drop), dim, cfg);
        if (v.confidence == Confidence::whp) report.confidence = Confidence::whp;
        if (v.value) return true;
        report.value = false;
        report.confidence = v.confidence;
        report.witness = std::move(drop);
        return false;
    });
    return report;
}

Verdict wgl_sufficient(const Graph& g, int dim, Vertex u, Vertex v, std::span<const Vertex> v0,
                       const TrialConfig& cfg) {
    if (u == v) throw InvalidArgument("the pair must consist of two distinct vertices");
    const auto sub = induced_subgraph(g, v0);
    const auto where = [&](Vertex x) {
        auto it = std::lower_bound(sub.original.begin(), sub.original.end(), x);
        if (it == sub.original.end() || *it != x)
            throw InvalidArgument("vertex " + std::to_string(x) + " is not in the vertex set v0");
        return static_cast<Vertex>(it - sub.original.begin());
    };
    const Vertex su = where(u);
    const Vertex sv = where(v);
    if (!path_avoiding(g, u, v, v0)) return {false, Confidence::certain};
    return is_linked(sub.graph, dim, su, sv, cfg);
}

Lemma4Report lemma4_consistency(const Graph& g, int dim, Vertex u, Vertex v, std::span<const Vertex> v0,
                                const TrialConfig& cfg) {
    if (g.has_edge(u, v)) throw InvalidArgument("the consistency check needs a non-adjacent pair");
    Lemma4Report report;
    if (!wgl_sufficient(g, dim, u, v, v0, cfg).value) return report;
    report.before = is_globally_rigid(g, dim, cfg);
    report.after = is_globally_rigid(g.with_edge(Edge(u, v)), dim, cfg);
    report.status = report.before.value == report.after.value ? CheckStatus::pass : CheckStatus::fail;
    return report;
}

}  // namespace rigidity_forge
