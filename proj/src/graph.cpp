#include "rigidity_forge/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <deque>
#include <iterator>
#include <limits>

#include "rigidity_forge/error.hpp"

namespace rigidity_forge {

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InvalidArgument("vertex count must be non-negative");
    build_adjacency();
}

Graph::Graph(int n, std::span<const Edge> edges, std::size_t* duplicates) : n_(n) {
    if (n < 0) throw InvalidArgument("vertex count must be non-negative");
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n)
            throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} has an endpoint outside [0, " + std::to_string(n) + ")");
        if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    auto last = std::unique(edges_.begin(), edges_.end());
    if (duplicates != nullptr) *duplicates = static_cast<std::size_t>(std::distance(last, edges_.end()));
    edges_.erase(last, edges_.end());
    build_adjacency();
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::build_adjacency() {
    adjacency_.assign(static_cast<std::size_t>(n_), {});
    for (const Edge& e : edges_) {
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

int Graph::min_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) {
        const int deg = degree(v);
        if (v == 0 || deg < best) best = deg;
    }
    return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
    const auto& na = adjacency_[static_cast<std::size_t>(a)];
    const auto& nb = adjacency_[static_cast<std::size_t>(b)];
    return na.size() <= nb.size() ? std::binary_search(na.begin(), na.end(), b)
                                  : std::binary_search(nb.begin(), nb.end(), a);
}

bool Graph::is_complete() const noexcept {
    const auto n = static_cast<std::size_t>(n_);
    return edges_.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::size_t Graph::edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return npos;
    return static_cast<std::size_t>(std::distance(edges_.begin(), it));
}

Graph Graph::with_edge(const Edge& e) const {
    std::vector<Edge> all = edges_;
    all.push_back(e);
    return Graph(n_, all);
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
    std::vector<Edge> drop(removed.begin(), removed.end());
    std::sort(drop.begin(), drop.end());
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    std::set_difference(edges_.begin(), edges_.end(), drop.begin(), drop.end(), std::back_inserter(kept));
    return Graph(n_, kept);
}

Graph Graph::with_vertices(int count) const {
    if (count < 0) throw InvalidArgument("cannot add a negative number of vertices");
    return Graph(n_ + count, edges_);
}

VertexSet make_vertex_set(std::vector<Vertex> members, int n) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw InvalidArgument("vertex set contains a repeated vertex");
    for (Vertex v : members)
        if (v < 0 || v >= n) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    return members;
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

long long parse_integer(std::string_view token, std::size_t line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line_no, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

}  // namespace

Graph parse_graph(std::string_view text, std::vector<std::string>* warnings) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError(0, "empty input");
    const auto c = static_cast<unsigned char>(text[first]);
    if (c == '>' || (c >= 63 && c <= 126)) return parse_graph6(text.substr(first));
    return parse_edge_list(text, warnings);
}

Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings) {
    const auto lines = split_lines(text);
    std::size_t idx = 0;
    while (idx < lines.size() && is_blank(lines[idx])) ++idx;
    if (idx == lines.size()) throw ParseError(0, "empty input");

    const std::size_t header_line = idx + 1;
    const auto header = split_tokens(lines[idx]);
    if (header.size() != 2) throw ParseError(header_line, "header must be \"n m\"");
    const long long n = parse_integer(header[0], header_line);
    const long long m = parse_integer(header[1], header_line);
    if (n < 0 || n > std::numeric_limits<int>::max()) throw ParseError(header_line, "vertex count out of range");
    if (m < 0) throw ParseError(header_line, "edge count must be non-negative");
    ++idx;

    std::vector<Edge> edges;
    std::vector<Edge> seen;
    for (; idx < lines.size(); ++idx) {
        if (is_blank(lines[idx])) continue;
        const std::size_t line_no = idx + 1;
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(line_no, "more edge lines than the header's m = " + std::to_string(m));
        const auto tokens = split_tokens(lines[idx]);
        if (tokens.size() != 2) throw ParseError(line_no, "edge line must be \"u v\"");
        const long long u = parse_integer(tokens[0], line_no);
        const long long v = parse_integer(tokens[1], line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line_no, "endpoint out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
        auto pos = std::lower_bound(seen.begin(), seen.end(), e);
        if (pos != seen.end() && *pos == e) {
            if (warnings != nullptr)
                warnings->push_back("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(e.u) +
                                    " " + std::to_string(e.v) + " ignored");
        } else {
            seen.insert(pos, e);
        }
        edges.push_back(e);
    }
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(lines.size(), "header announces " + std::to_string(m) + " edges, found " +
                                           std::to_string(edges.size()));

    Graph g(static_cast<int>(n), edges);
    if (warnings != nullptr && static_cast<long long>(g.edge_count()) != m)
        warnings->push_back("header edge count " + std::to_string(m) + " differs from " +
                            std::to_string(g.edge_count()) + " distinct edges");
    return g;
}

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());

    const auto lines = split_lines(text);
    std::string_view body;
    std::size_t body_line = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (is_blank(lines[i])) continue;
        if (!body.empty()) throw ParseError(i + 1, "graph6 input holds more than one graph");
        body = lines[i];
        body_line = i + 1;
    }
    if (body.empty()) throw ParseError(0, "empty graph6 input");

    std::size_t pos = 0;
    auto next = [&]() -> unsigned {
        if (pos >= body.size()) throw ParseError(body_line, "truncated graph6 string");
        const auto c = static_cast<unsigned char>(body[pos++]);
        if (c < 63 || c > 126) throw ParseError(body_line, "byte outside the graph6 range [63, 126]");
        return c - 63u;
    };

    std::uint64_t n = 0;
    if (static_cast<unsigned char>(body[0]) != 126) {
        n = next();
    } else {
        ++pos;
        int width = 3;
        if (body.size() > 1 && static_cast<unsigned char>(body[1]) == 126) {
            ++pos;
            width = 6;
        }
        for (int i = 0; i < width; ++i) n = (n << 6) | next();
    }
    if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
        throw ParseError(body_line, "graph6 vertex count too large");

    std::vector<Edge> edges;
    unsigned chunk = 0;
    int bits_left = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i) {
            if (bits_left == 0) {
                chunk = next();
                bits_left = 6;
            }
            --bits_left;
            if ((chunk >> bits_left) & 1u) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    if (pos != body.size()) throw ParseError(body_line, "trailing bytes after graph6 adjacency data");
    return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

std::string to_graph6(const Graph& g) {
    std::string out;
    const auto n = static_cast<std::uint64_t>(g.vertex_count());
    auto put = [&](std::uint64_t six) { out.push_back(static_cast<char>(63 + (six & 63u))); };
    if (n <= 62) {
        put(n);
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) put(n >> shift);
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) put(n >> shift);
    }
    unsigned chunk = 0;
    int filled = 0;
    for (Vertex j = 1; j < g.vertex_count(); ++j) {
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++filled == 6) {
                put(chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) put(chunk << (6 - filled));
    out.push_back('\n');
    return out;
}

// ---------------------------------------------------------------------------
// Structural queries

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == n;
}

bool is_clique(const Graph& g, std::span<const Vertex> members) {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!g.has_edge(members[i], members[j])) return false;
    return true;
}

namespace {

// Residual network for unit-capacity flow on the vertex-split digraph.
// Vertex x becomes in-node 2x and out-node 2x+1.
class SplitFlowNetwork {
public:
    SplitFlowNetwork(const Graph& g, Vertex s, Vertex t) : nodes_(2 * static_cast<std::size_t>(g.vertex_count())) {
        head_.assign(nodes_, -1);
        for (Vertex x = 0; x < g.vertex_count(); ++x) {
            const int cap = (x == s || x == t) ? kInfinite : 1;
            add_arc(in(x), out(x), cap);
        }
        for (const Edge& e : g.edges()) {
            add_arc(out(e.u), in(e.v), 1);
            add_arc(out(e.v), in(e.u), 1);
        }
        source_ = out(s);
        sink_ = in(t);
    }

    int max_flow(int limit) {
        int flow = 0;
        std::vector<int> via(nodes_);
        while (flow < limit) {
            std::fill(via.begin(), via.end(), -1);
            std::deque<int> queue{source_};
            via[static_cast<std::size_t>(source_)] = -2;
            while (!queue.empty() && via[static_cast<std::size_t>(sink_)] == -1) {
                const int x = queue.front();
                queue.pop_front();
                for (int a = head_[static_cast<std::size_t>(x)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
                    const Arc& arc = arcs_[static_cast<std::size_t>(a)];
                    if (arc.cap > 0 && via[static_cast<std::size_t>(arc.to)] == -1) {
                        via[static_cast<std::size_t>(arc.to)] = a;
                        queue.push_back(arc.to);
                    }
                }
            }
            if (via[static_cast<std::size_t>(sink_)] == -1) break;
            for (int x = sink_; x != source_;) {
                const int a = via[static_cast<std::size_t>(x)];
                arcs_[static_cast<std::size_t>(a)].cap -= 1;
                arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
                x = arcs_[static_cast<std::size_t>(a ^ 1)].to;
            }
            ++flow;
        }
        return flow;
    }

private:
    static constexpr int kInfinite = std::numeric_limits<int>::max() / 2;

    struct Arc {
        int to;
        int cap;
        int next;
    };

    static int in(Vertex x) { return 2 * x; }
    static int out(Vertex x) { return 2 * x + 1; }

    void add_arc(int from, int to, int cap) {
        arcs_.push_back({to, cap, head_[static_cast<std::size_t>(from)]});
        head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, 0, head_[static_cast<std::size_t>(to)]});
        head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
    }

    std::size_t nodes_;
    std::vector<int> head_;
    std::vector<Arc> arcs_;
    int source_ = 0;
    int sink_ = 0;
};

}  // namespace

int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
    if (s == t || g.has_edge(s, t)) throw InvalidArgument("local connectivity needs distinct non-adjacent vertices");
    SplitFlowNetwork net(g, s, t);
    return net.max_flow(limit);
}

int vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 0;
    if (g.is_complete()) return n - 1;
    if (!is_connected(g)) return 0;

    // Some vertex among the first best+1 lies outside a minimum separator, and
    // a vertex on the far side of that separator comes later in the order.
    int best = g.min_degree();
    for (Vertex i = 0; i < n && i <= best; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (g.has_edge(i, j)) continue;
            best = std::min(best, local_vertex_connectivity(g, i, j, best));
        }
    }
    return best;
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<Vertex>& clique, std::vector<Vertex> candidates,
                   std::vector<Vertex> excluded, std::vector<VertexSet>& out) {
    if (candidates.empty()) {
        if (excluded.empty()) {
            VertexSet found = clique;
            std::sort(found.begin(), found.end());
            out.push_back(std::move(found));
        }
        return;
    }
    auto common = [&](Vertex u, const std::vector<Vertex>& set) {
        std::vector<Vertex> result;
        const auto& nu = g.neighbors(u);
        std::set_intersection(set.begin(), set.end(), nu.begin(), nu.end(), std::back_inserter(result));
        return result;
    };

    // Tomita pivot: the vertex of P u X with the most neighbours in P.
    Vertex pivot = candidates.front();
    long pivot_score = -1;
    for (const auto* pool : {&candidates, &excluded}) {
        for (Vertex u : *pool) {
            const auto score = static_cast<long>(common(u, candidates).size());
            if (score > pivot_score) {
                pivot = u;
                pivot_score = score;
            }
        }
    }

    std::vector<Vertex> branch;
    const auto& np = g.neighbors(pivot);
    std::set_difference(candidates.begin(), candidates.end(), np.begin(), np.end(), std::back_inserter(branch));
    for (Vertex v : branch) {
        clique.push_back(v);
        bron_kerbosch(g, clique, common(v, candidates), common(v, excluded), out);
        clique.pop_back();
        candidates.erase(std::lower_bound(candidates.begin(), candidates.end(), v));
        excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
    }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.vertex_count() == 0) return out;
    std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
    std::vector<Vertex> clique;
    bron_kerbosch(g, clique, std::move(all), {}, out);
    std::sort(out.begin(), out.end());
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members) {
    VertexSet kept = make_vertex_set({members.begin(), members.end()}, g.vertex_count());
    std::vector<Vertex> relabel(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < kept.size(); ++i) relabel[static_cast<std::size_t>(kept[i])] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        const Vertex a = relabel[static_cast<std::size_t>(e.u)];
        const Vertex b = relabel[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) edges.emplace_back(a, b);
    }
    return {Graph(static_cast<int>(kept.size()), edges), std::move(kept)};
}

bool path_avoiding(const Graph& g, Vertex u, Vertex v, std::span<const Vertex> blocked) {
    const int n = g.vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidArgument("path endpoint out of range");
    if (u == v) throw InvalidArgument("path endpoints must differ");
    std::vector<char> usable(static_cast<std::size_t>(n), 1);
    for (Vertex b : blocked) {
        if (b < 0 || b >= n) throw InvalidArgument("blocked vertex out of range");
        usable[static_cast<std::size_t>(b)] = 0;
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<Vertex> queue{u};
    seen[static_cast<std::size_t>(u)] = 1;
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : g.neighbors(x)) {
            if (y == v) return true;
            if (seen[static_cast<std::size_t>(y)] || !usable[static_cast<std::size_t>(y)]) continue;
            seen[static_cast<std::size_t>(y)] = 1;
            queue.push_back(y);
        }
    }
    return false;
}

std::string graph_digest(const Graph& g) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : to_edge_list(g)) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

}  // namespace rigidity_forge
