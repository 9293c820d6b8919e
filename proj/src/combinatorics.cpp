#include "rigidity_forge/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "rigidity_forge/error.hpp"

namespace rigidity_forge {

std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt ceil(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;  // truncates toward zero
    if (q * den < num) ++q;
    return q;
}

namespace {

void check_members(const CliqueSystem& sys) {
    if (sys.n < 0) throw InvalidArgument("ground set size must be non-negative");
    for (const auto& h : sys.sets)
        for (Vertex v : h)
            if (v < 0 || v >= sys.n) throw InvalidArgument("clique system member out of range");
}

std::size_t intersection_size(const VertexSet& a, const VertexSet& b) {
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

// Calls f(mask) for each m-subset of `members` (as a bitmask).
template <typename F>
void for_each_subset_mask(const VertexSet& members, int m, F&& f) {
    const auto size = static_cast<int>(members.size());
    if (m > size) return;
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= std::uint64_t{1} << members[static_cast<std::size_t>(i)];
        f(mask);
        int i = m;
        while (i > 0 && idx[static_cast<std::size_t>(i - 1)] == size - m + (i - 1)) --i;
        if (i == 0) return;
        ++idx[static_cast<std::size_t>(i - 1)];
        for (int j = i; j < m; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

std::string clique_system_violation(const CliqueSystem& sys) {
    check_members(sys);
    std::vector<VertexSet> sorted;
    for (const auto& h : sys.sets) {
        VertexSet s = h;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) return "a set repeats a member";
        if (static_cast<int>(s.size()) >= sys.n) return "a set is not a proper subset of the ground set";
        sorted.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (sorted[i] == sorted[j])
                return "sets " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are equal";
            const auto common = static_cast<long long>(intersection_size(sorted[i], sorted[j]));
            if (common > sys.d - 2)
                return "sets " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " share " +
                       std::to_string(common) + " members, more than d-2 = " + std::to_string(sys.d - 2);
        }
    }
    return {};
}

BigInt covered_subset_count(const CliqueSystem& sys, int m) {
    check_members(sys);
    if (m < 0 || m > sys.n) throw InvalidArgument("subset size m must lie in [0, n]");

    std::vector<VertexSet> sets;
    for (const auto& h : sys.sets) {
        VertexSet s = h;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        sets.push_back(std::move(s));
    }

    // When m exceeds every pairwise intersection, no m-subset sits inside two
    // sets and the count is a plain sum of binomials.
    long long widest_overlap = -1;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            widest_overlap = std::max(widest_overlap, static_cast<long long>(intersection_size(sets[i], sets[j])));
    if (m > widest_overlap) {
        BigInt total = 0;
        for (const auto& s : sets) total += binomial(static_cast<long long>(s.size()), m);
        return total;
    }

    if (sys.n > 64) throw InvalidArgument("explicit enumeration supports ground sets of at most 64 elements");
    std::unordered_set<std::uint64_t> covered;
    for (const auto& s : sets) for_each_subset_mask(s, m, [&](std::uint64_t mask) { covered.insert(mask); });
    return covered.size();
}

CombLemmaReport verify_comblemma(const CliqueSystem& sys, int m) {
    CombLemmaReport report;
    if (sys.d < 2) {
        report.reason = "d must be at least 2";
    } else if (m < sys.d + 1 || m > sys.n - 1) {
        report.reason = "m must satisfy d+1 <= m <= n-1";
    } else {
        report.reason = clique_system_violation(sys);
    }
    if (!report.reason.empty()) return report;

    report.applicable = true;
    report.count = covered_subset_count(sys, m);
    report.bound = binomial(sys.n - 1, m);
    report.holds = report.count <= report.bound;
    return report;
}

Rational m_dk(int d, int k) {
    if (d < 1) throw InvalidArgument("d must be at least 1");
    if (k < 1 || k >= d * (d + 1)) throw InvalidArgument("k must satisfy 1 <= k < d(d+1)");
    if (k <= d) return Rational(k, 2);
    return Rational(d) + Rational(1, 2) - Rational(d * (d + 1), 2 * k);
}

std::uint64_t grn_lower_bound(std::uint64_t vertices, std::uint64_t edges) {
    if (vertices == 0) throw InvalidArgument("the graph needs at least one vertex");
    // floor(sqrt(x)) = floor(sqrt(floor(x))) for x >= 0.
    const BigInt ratio = BigInt(edges) / (BigInt(6) * vertices);
    BigInt root = boost::multiprecision::sqrt(ratio);
    return root.convert_to<std::uint64_t>();
}

namespace {

void count_cliques(const std::vector<std::uint64_t>& adjacent, std::uint64_t candidates, int size,
                   std::vector<BigInt>& counts) {
    counts[static_cast<std::size_t>(size)] += 1;
    while (candidates != 0) {
        const int j = std::countr_zero(candidates);
        candidates &= candidates - 1;
        count_cliques(adjacent, candidates & adjacent[static_cast<std::size_t>(j)], size + 1, counts);
    }
}

}  // namespace

GpiExpectation expected_gpi_breakdown(const Graph& g, int dim, int degree_cap) {
    if (dim < 2) throw InvalidArgument("the ordered construction is defined for d >= 2");
    if (degree_cap > 63) throw InvalidArgument("degree cap above 63 is not supported");

    GpiExpectation result;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& nbrs = g.neighbors(v);
        const int k = static_cast<int>(nbrs.size());
        if (k > degree_cap)
            throw InvalidArgument("vertex " + std::to_string(v) + " has degree " + std::to_string(k) +
                                  " above the cap " + std::to_string(degree_cap));

        std::vector<std::uint64_t> adjacent(static_cast<std::size_t>(k), 0);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (a != b && g.has_edge(nbrs[static_cast<std::size_t>(a)], nbrs[static_cast<std::size_t>(b)]))
                    adjacent[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;

        VertexGpiExpectation item;
        item.vertex = v;
        item.degree = k;
        item.clique_subsets.assign(static_cast<std::size_t>(k) + 1, 0);
        const std::uint64_t all = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
        count_cliques(adjacent, all, 0, item.clique_subsets);

        // Each backward degree i in 0..k has probability 1/(k+1).
        const Rational each(1, k + 1);
        for (int i = 0; i <= k; ++i) {
            item.base += each * std::min(i, dim);
            if (i >= dim + 1) {
                const Rational clique_share(item.clique_subsets[static_cast<std::size_t>(i)], binomial(k, i));
                item.rule_c_probability += each * (Rational(1) - clique_share);
            }
        }
        item.expectation = item.base + item.rule_c_probability;
        result.total += item.expectation;
        result.vertices.push_back(std::move(item));
    }
    return result;
}

Rational exact_expected_gpi_edges(const Graph& g, int dim, int degree_cap) {
    return expected_gpi_breakdown(g, dim, degree_cap).total;
}

}  // namespace rigidity_forge
