#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rigidity_forge/combinatorics.hpp"
#include "rigidity_forge/global_rigidity.hpp"
#include "rigidity_forge/graph.hpp"
#include "rigidity_forge/rigidity.hpp"

namespace rigidity_forge {

/// Outcome of a theorem spot check or property check.
struct CheckReport {
    std::string operation;
    std::string input_digest;
    std::uint64_t seed = 0;
    CheckStatus status = CheckStatus::inapplicable;
    nlohmann::json verdicts = nlohmann::json::object();
    nlohmann::json witnesses = nlohmann::json::object();
    double runtime_ms = 0.0;
};

nlohmann::json to_json(const CheckReport& report);

// ---------------------------------------------------------------------------
// Hypotheses of the expectation bound

struct HypothesisWitness {
    Vertex vertex = 0;
    std::string condition;
    std::string detail;
};

struct Lemma7Hypotheses {
    bool min_degree_ok = true;
    bool no_clique_neighborhood = true;
    bool intersection_ok = true;
    /// First failure in vertex order (degree, then clique, then intersection).
    std::optional<HypothesisWitness> witness;

    bool all() const noexcept { return min_degree_ok && no_clique_neighborhood && intersection_ok; }
};

/// Checks, at every vertex: degree >= d(d+1), N(v) is not a clique, and any
/// two maximal cliques of G[N(v)] share at most d-2 vertices.
Lemma7Hypotheses check_lemma7_hypotheses(const Graph& g, int dim);

// ---------------------------------------------------------------------------
// Expectation of |E_pi|

struct MonteCarloStats {
    std::size_t trials = 0;
    double mean = 0.0;
    double stddev = 0.0;      // sample standard deviation
    double half_width = 0.0;  // 99% normal-approximation half-width, z * s / sqrt(trials)
    std::uint64_t seed = 0;
};

/// Two-sided 99% standard normal quantile.
inline constexpr double kZ99 = 2.5758293035489004;

/// |E_pi| over `trials` uniformly random orderings; ordering t uses derive_seed(seed, t).
MonteCarloStats monte_carlo_gpi(const Graph& g, int dim, std::size_t trials, std::uint64_t seed);

/// Exact average of |E_pi| over all n! orderings. Requires n <= 8.
Rational brute_force_expected_gpi(const Graph& g, int dim);

// ---------------------------------------------------------------------------
// Exact rational oracle for tiny rigidity matrices

/// Rank over Q by Gaussian elimination in exact rationals.
std::size_t exact_rational_rank(std::vector<std::vector<Rational>> rows);

/// Rigidity-matrix rank over Q with random integer coordinates in
/// [-2^20, 2^20], maximised over `trials` placements. Independent of the
/// modular fast path; meant for graphs with at most a few hundred matrix cells.
std::size_t rational_rigidity_rank(const Graph& g, int dim, std::uint64_t seed, std::size_t trials = 3);

// ---------------------------------------------------------------------------
// Theorem and lemma spot checks

/// Inapplicable when kappa < d(d+1); otherwise the graph must be rigid.
CheckReport theorem1_spot_check(const Graph& g, int dim, const TrialConfig& cfg = {});

/// Inapplicable when kappa < d(d+1); otherwise the graph must be globally rigid.
CheckReport theorem2_spot_check(const Graph& g, int dim, const TrialConfig& cfg = {});

/// Redundancy and sharpness on sharpness_example(d). Dimensions other than 2
/// are refused unless `allow_large_dim` is set (the enumeration grows quickly).
CheckReport theorem9_check(int dim, const TrialConfig& cfg = {}, bool allow_large_dim = false);

/// For a non-rigid k-connected graph with 1 <= k < d(d+1): r_d(G) >= m_{d,k} |V|.
CheckReport theorem10_check(const Graph& g, int dim, const TrialConfig& cfg = {});

/// If no non-adjacent pair is linked, every sampled G_pi must be independent.
CheckReport lemma6_property_check(const Graph& g, int dim, std::size_t orderings, const TrialConfig& cfg = {});

/// Variant for weakly globally linked pairs. The hypothesis cannot be decided;
/// non-edges certified by the path-plus-linked test make the check
/// inapplicable, and otherwise the result is reported as not verifiable.
CheckReport lemma8_property_check(const Graph& g, int dim, std::size_t orderings, const TrialConfig& cfg = {});

CheckReport lemma7_hypotheses_check(const Graph& g, int dim);

}  // namespace rigidity_forge
