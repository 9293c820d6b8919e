#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rigidity_forge/graph.hpp"

namespace rigidity_forge {

using BigInt = boost::multiprecision::cpp_int;
/// Exact rational, always reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
BigInt binomial(long long n, long long k);
/// Smallest integer >= r.
BigInt ceil(const Rational& r);

/// A family H_1..H_r of subsets of {0..n-1}.
struct CliqueSystem {
    int n = 0;
    int d = 0;
    std::vector<VertexSet> sets;
};

/// Empty string when the system satisfies the counting lemma's hypotheses on
/// the sets (members in range, proper, pairwise distinct, pairwise
/// intersections of size at most d-2); otherwise the first violation.
std::string clique_system_violation(const CliqueSystem& sys);

/// Number of m-subsets of {0..n-1} contained in at least one set of the system.
BigInt covered_subset_count(const CliqueSystem& sys, int m);

struct CombLemmaReport {
    bool applicable = false;
    std::string reason;  // why the hypotheses fail, when not applicable
    BigInt count = 0;
    BigInt bound = 0;    // C(n-1, m)
    bool holds = false;
};

/// Evaluates count <= C(n-1, m) when 2 <= d, d+1 <= m <= n-1 and the system
/// is valid; reports "not applicable" otherwise.
CombLemmaReport verify_comblemma(const CliqueSystem& sys, int m);

/// k/2 for 1 <= k <= d; d + 1/2 - d(d+1)/(2k) for d+1 <= k < d(d+1).
Rational m_dk(int d, int k);

/// floor(sqrt(|E| / (6|V|))) in exact integer arithmetic.
std::uint64_t grn_lower_bound(std::uint64_t vertices, std::uint64_t edges);

/// Per-vertex pieces of the exact expectation of |E_pi|.
struct VertexGpiExpectation {
    Vertex vertex = 0;
    int degree = 0;
    /// clique_subsets[i] = number of i-subsets of N(v) inducing a clique.
    std::vector<BigInt> clique_subsets;
    /// E[min(backward degree, d)].
    Rational base;
    /// Probability that rule c fires at v.
    Rational rule_c_probability;
    /// base + rule_c_probability.
    Rational expectation;
};

struct GpiExpectation {
    Rational total;
    std::vector<VertexGpiExpectation> vertices;
};

inline constexpr int kDefaultDegreeCap = 20;

/// Exact E|E_pi| over a uniformly random ordering, by linearity over vertices.
/// Conditioned on having i earlier neighbours, the backward neighbourhood of v
/// is a uniform i-subset of N(v). Throws when a degree exceeds `degree_cap`.
GpiExpectation expected_gpi_breakdown(const Graph& g, int dim, int degree_cap = kDefaultDegreeCap);
Rational exact_expected_gpi_edges(const Graph& g, int dim, int degree_cap = kDefaultDegreeCap);

}  // namespace rigidity_forge
