#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rigidity_forge/graph.hpp"
#include "rigidity_forge/modlinalg.hpp"
#include "rigidity_forge/rigidity.hpp"

namespace rigidity_forge {

/// A random equilibrium stress of a pseudo-generic framework together with the
/// rank of its stress matrix. A generic framework on n >= d+2 vertices is
/// globally rigid iff some stress reaches rank n - d - 1.
struct StressCertificate {
    Graph graph;
    int dim = 0;
    std::vector<std::uint64_t> stress;  // one weight per edge, in edge order
    std::size_t omega_rank = 0;
    std::size_t target = 0;             // n - d - 1
    std::size_t framework_rank = 0;     // rigidity-matrix rank in the same trial
    std::uint64_t seed = 0;             // seed of the trial that produced the stress
    std::uint64_t prime = kMersenne61;
};

/// n x n matrix with -w_uv off the diagonal on edges and zero row sums.
ModMatrix stress_matrix(const Graph& g, std::span<const std::uint64_t> stress, const PrimeField& field);

/// Highest stress-matrix rank over the configured trials. Requires n >= d+2.
StressCertificate stress_matrix_rank(const Graph& g, int dim, const TrialConfig& cfg = {});

/// Generic global rigidity. Complete graphs (and n <= d+1) are decided exactly,
/// d = 1 reduces to 2-connectivity, otherwise rigid plus a full-rank stress.
Verdict is_globally_rigid(const Graph& g, int dim, const TrialConfig& cfg = {});

struct GlobalRedundancyReport {
    bool value = false;
    Confidence confidence = Confidence::whp;
    int t = 0;
    std::size_t subsets_checked = 0;
    std::vector<Edge> witness;
};

/// Globally rigid after deleting any t-1 edges (subsets of size exactly t-1,
/// since adding edges preserves global rigidity).
GlobalRedundancyReport is_t_redundantly_globally_rigid(const Graph& g, int dim, int t, const TrialConfig& cfg = {});

/// Sufficient test for weak global linkedness: {u,v} is linked in g[v0] and a
/// u-v path avoids v0 internally. A false result decides nothing.
Verdict wgl_sufficient(const Graph& g, int dim, Vertex u, Vertex v, std::span<const Vertex> v0,
                       const TrialConfig& cfg = {});

enum class CheckStatus { pass, fail, inapplicable, not_verifiable };

std::string_view to_string(CheckStatus s) noexcept;

struct Lemma4Report {
    CheckStatus status = CheckStatus::inapplicable;
    Verdict before;  // is_globally_rigid(g)
    Verdict after;   // is_globally_rigid(g + uv)
};

/// When wgl_sufficient certifies the non-edge uv, global rigidity of g and of
/// g + uv must agree. Otherwise the check is inapplicable.
Lemma4Report lemma4_consistency(const Graph& g, int dim, Vertex u, Vertex v, std::span<const Vertex> v0,
                                const TrialConfig& cfg = {});

}  // namespace rigidity_forge
