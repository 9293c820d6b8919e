#include "rigidity_forge/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rigidity_forge/combinatorics.hpp"
#include "rigidity_forge/constructions.hpp"
#include "rigidity_forge/error.hpp"
#include "rigidity_forge/experiments.hpp"
#include "rigidity_forge/global_rigidity.hpp"
#include "rigidity_forge/graph.hpp"
#include "rigidity_forge/rigidity.hpp"

namespace rigidity_forge::cli {

namespace {

using nlohmann::json;

struct Config {
    int dim = 2;
    std::uint64_t seed = 0;
    std::size_t trials = 2;
    std::uint64_t prime = kMersenne61;
    std::string format;  // empty: the command's default
    std::string input = "-";
};

struct Args {
    Vertex u = -1;
    Vertex v = -1;
    int t = 0;
    int s = 0;
    int k = 0;
    int n = 0;
    int m = 0;
    std::string sets;
    std::string v0;
    std::string ordering;
    std::size_t orderings = 20;
    int degree_cap = kDefaultDegreeCap;
    std::optional<std::uint64_t> vertices;
    std::optional<std::uint64_t> edges;
    bool allow_large_dim = false;
};

struct Outcome {
    json result;
    std::optional<std::string> confidence;
    json params = json::object();
    std::optional<std::string> digest;
    int exit_code = kExitOk;
    /// Replaces the JSON document in text mode (generators emit edge lists).
    std::optional<std::string> text;
};

struct Context {
    Config cfg;
    Args args;
    std::istream& in;
    std::ostream& err;

    TrialConfig trials() const { return {cfg.trials, cfg.seed, cfg.prime}; }

    Graph graph() {
        std::string text;
        if (cfg.input == "-") {
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        } else {
            std::ifstream file(cfg.input, std::ios::binary);
            if (!file) throw InvalidArgument("cannot open input file '" + cfg.input + "'");
            std::ostringstream buf;
            buf << file.rdbuf();
            text = buf.str();
        }
        std::vector<std::string> warnings;
        Graph g = parse_graph(text, &warnings);
        for (const auto& w : warnings) err << "warning: " << w << '\n';
        return g;
    }
};

std::vector<Vertex> parse_list(const std::string& text, const char* what) {
    std::vector<Vertex> out;
    std::string token;
    std::istringstream stream(text);
    while (std::getline(stream, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto last = token.find_last_not_of(" \t");
        token = token.substr(first, last - first + 1);
        try {
            std::size_t used = 0;
            const int value = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(value);
        } catch (const std::exception&) {
            throw InvalidArgument(std::string("malformed ") + what + " entry '" + token + "'");
        }
    }
    return out;
}

json edges_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

json graph_json(const Graph& g) { return {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges_json(g.edges())}}; }

Outcome answer(json result, std::string_view confidence) {
    Outcome o;
    o.result = std::move(result);
    o.confidence = std::string(confidence);
    return o;
}

Outcome verdict_outcome(const Verdict& v) { return answer(v.value, to_string(v.confidence)); }

Outcome check_outcome(const CheckReport& r) {
    Outcome o;
    o.result = to_json(r);
    o.result.erase("runtime_ms");
    o.result.erase("seed");
    o.exit_code = r.status == CheckStatus::fail ? kExitCheckFailed : kExitOk;
    return o;
}

Outcome generator_outcome(const Graph& g) {
    Outcome o;
    o.result = graph_json(g);
    o.digest = graph_digest(g);
    o.text = to_edge_list(g);
    return o;
}

using Handler = std::function<Outcome(Context&)>;

std::map<std::string, Handler> handlers() {
    std::map<std::string, Handler> h;

    h["rank"] = [](Context& c) {
        const Graph g = c.graph();
        const auto r = generic_rank(g, c.cfg.dim, c.trials());
        Outcome o = answer(r.rank, to_string(r.confidence));
        o.digest = graph_digest(g);
        return o;
    };
    h["rigid"] = [](Context& c) {
        const Graph g = c.graph();
        Outcome o = verdict_outcome(is_rigid(g, c.cfg.dim, c.trials()));
        o.digest = graph_digest(g);
        return o;
    };
    h["globally-rigid"] = [](Context& c) {
        const Graph g = c.graph();
        Outcome o = verdict_outcome(is_globally_rigid(g, c.cfg.dim, c.trials()));
        o.digest = graph_digest(g);
        return o;
    };
    h["linked"] = [](Context& c) {
        const Graph g = c.graph();
        Outcome o = verdict_outcome(is_linked(g, c.cfg.dim, c.args.u, c.args.v, c.trials()));
        o.params = {{"u", c.args.u}, {"v", c.args.v}};
        o.digest = graph_digest(g);
        return o;
    };
    h["redundant"] = [](Context& c) {
        const Graph g = c.graph();
        const auto r = is_t_redundantly_rigid(g, c.cfg.dim, c.args.t, c.trials());
        Outcome o = answer(r.value, to_string(r.confidence));
        o.params = {{"t", c.args.t}};
        o.result = {{"value", r.value}, {"subsets_checked", r.subsets_checked}, {"witness", edges_json(r.witness)}};
        o.digest = graph_digest(g);
        return o;
    };
    h["connectivity"] = [](Context& c) {
        const Graph g = c.graph();
        Outcome o = answer(vertex_connectivity(g), "certain");
        o.digest = graph_digest(g);
        return o;
    };
    h["gpi"] = [](Context& c) {
        const Graph g = c.graph();
        Ordering order = c.args.ordering.empty() ? random_ordering(g.vertex_count(), c.cfg.seed)
                                                 : parse_list(c.args.ordering, "ordering");
        const auto r = build_gpi(g, c.cfg.dim, order);
        json trace = json::array();
        for (const auto& step : r.trace) {
            json item = {{"vertex", step.vertex},
                         {"position", step.position},
                         {"back_degree", step.back_degree},
                         {"rule", std::string(to_string(step.rule))},
                         {"chosen", step.chosen}};
            if (step.non_adjacent_pair) item["pair"] = {step.non_adjacent_pair->u, step.non_adjacent_pair->v};
            trace.push_back(std::move(item));
        }
        Outcome o;
        o.result = {{"ordering", order}, {"subgraph", graph_json(r.subgraph)}, {"trace", trace}};
        o.digest = graph_digest(g);
        o.text = to_edge_list(r.subgraph);
        return o;
    };
    h["expected-gpi"] = [](Context& c) {
        const Graph g = c.graph();
        const auto r = expected_gpi_breakdown(g, c.cfg.dim, c.args.degree_cap);
        json per_vertex = json::array();
        for (const auto& item : r.vertices) {
            json counts = json::array();
            for (const auto& a : item.clique_subsets) counts.push_back(a.str());
            per_vertex.push_back({{"vertex", item.vertex},
                                  {"degree", item.degree},
                                  {"clique_subsets", counts},
                                  {"min_term", to_string(item.base)},
                                  {"rule_c_probability", to_string(item.rule_c_probability)},
                                  {"expectation", to_string(item.expectation)}});
        }
        Outcome o;
        o.result = {{"expectation", to_string(r.total)}, {"per_vertex", per_vertex}};
        o.confidence = "certain";
        o.params = {{"degree_cap", c.args.degree_cap}};
        o.digest = graph_digest(g);
        return o;
    };
    h["gen-ly"] = [](Context& c) {
        const auto family = lovasz_yemini_family(c.cfg.dim, c.args.s);
        Outcome o = generator_outcome(family.graph);
        o.params = {{"s", c.args.s}, {"k", family.k}};
        return o;
    };
    h["gen-sharpness"] = [](Context& c) { return generator_outcome(sharpness_example(c.cfg.dim)); };
    h["gen-harary"] = [](Context& c) {
        Outcome o = generator_outcome(harary_graph(c.args.k, c.args.s));
        o.params = {{"k", c.args.k}, {"s", c.args.s}};
        return o;
    };
    h["comblemma"] = [](Context& c) {
        CliqueSystem sys{c.args.n, c.cfg.dim, {}};
        std::istringstream stream(c.args.sets);
        std::string part;
        while (std::getline(stream, part, ';')) sys.sets.push_back(parse_list(part, "set"));
        const auto r = verify_comblemma(sys, c.args.m);
        Outcome o;
        o.result = {{"applicable", r.applicable}};
        if (r.applicable) {
            o.result["count"] = r.count.str();
            o.result["bound"] = r.bound.str();
            o.result["holds"] = r.holds;
        } else {
            o.result["reason"] = r.reason;
        }
        o.confidence = "certain";
        o.params = {{"n", c.args.n}, {"m", c.args.m}, {"sets", c.args.sets}};
        return o;
    };
    h["mdk"] = [](Context& c) {
        Outcome o = answer(to_string(m_dk(c.cfg.dim, c.args.k)), "certain");
        o.params = {{"k", c.args.k}};
        return o;
    };
    h["grn-bound"] = [](Context& c) {
        Outcome o;
        std::uint64_t vertices = 0;
        std::uint64_t edges = 0;
        if (c.args.vertices && c.args.edges) {
            vertices = *c.args.vertices;
            edges = *c.args.edges;
            o.params = {{"vertices", vertices}, {"edges", edges}};
        } else {
            const Graph g = c.graph();
            vertices = static_cast<std::uint64_t>(g.vertex_count());
            edges = g.edge_count();
            o.digest = graph_digest(g);
        }
        o.result = grn_lower_bound(vertices, edges);
        o.confidence = "certain";
        return o;
    };
    h["check-theorem1"] = [](Context& c) {
        const Graph g = c.graph();
        Outcome o = check_outcome(theorem1_spot_check(g, c.cfg.dim, c.trials()));
        o.digest = graph_digest(g);
        return o;
    };
    h["check-theorem2"] = [](Context& c) {
        const Graph g = c.graph();
        Outcome o = check_outcome(theorem2_spot_check(g, c.cfg.dim, c.trials()));
        o.digest = graph_digest(g);
        return o;
    };
    h["check-theorem9"] = [](Context& c) {
        Outcome o = check_outcome(theorem9_check(c.cfg.dim, c.trials(), c.args.allow_large_dim));
        o.params = {{"allow_large_dim", c.args.allow_large_dim}};
        return o;
    };
    h["check-theorem10"] = [](Context& c) {
        const Graph g = c.graph();
        Outcome o = check_outcome(theorem10_check(g, c.cfg.dim, c.trials()));
        o.digest = graph_digest(g);
        return o;
    };
    h["check-lemma6"] = [](Context& c) {
        const Graph g = c.graph();
        Outcome o = check_outcome(lemma6_property_check(g, c.cfg.dim, c.args.orderings, c.trials()));
        o.params = {{"orderings", c.args.orderings}};
        o.digest = graph_digest(g);
        return o;
    };
    h["check-lemma7-hyp"] = [](Context& c) {
        const Graph g = c.graph();
        Outcome o = check_outcome(lemma7_hypotheses_check(g, c.cfg.dim));
        o.digest = graph_digest(g);
        return o;
    };
    h["wgl"] = [](Context& c) {
        const Graph g = c.graph();
        const auto v0 = parse_list(c.args.v0, "v0");
        Outcome o = verdict_outcome(wgl_sufficient(g, c.cfg.dim, c.args.u, c.args.v, v0, c.trials()));
        o.params = {{"u", c.args.u}, {"v", c.args.v}, {"v0", v0}};
        o.digest = graph_digest(g);
        return o;
    };
    return h;
}

void add_graph_input_note(CLI::App* sub) { sub->footer("Reads an edge-list or graph6 graph from --input (default: stdin)."); }

std::string render_text(const std::string& command, const Outcome& o) {
    std::ostringstream s;
    s << command << ": " << (o.result.is_string() ? o.result.get<std::string>() : o.result.dump());
    if (o.confidence) s << " (" << *o.confidence << ")";
    s << '\n';
    return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Config cfg;
    Args a;
    CLI::App app{"Combinatorial rigidity toolkit: generic rigidity-matroid ranks, rigidity and global-rigidity "
                 "verdicts, graph constructions and theorem spot checks."};
    app.name("rigidity-forge");
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--dim", cfg.dim, "Dimension d")->envname("RIGIDITY_FORGE_DIM")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Random seed")->envname("RIGIDITY_FORGE_SEED");
    app.add_option("--trials", cfg.trials, "Independent random frameworks per verdict")
        ->envname("RIGIDITY_FORGE_TRIALS")
        ->check(CLI::PositiveNumber);
    app.add_option("--prime", cfg.prime, "Prime modulus in (2^32, 2^63)")->envname("RIGIDITY_FORGE_PRIME");
    app.add_option("--format", cfg.format, "Output format")
        ->envname("RIGIDITY_FORGE_FORMAT")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--input", cfg.input, "Graph file, or - for standard input")->envname("RIGIDITY_FORGE_INPUT");

    auto graph_cmd = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        add_graph_input_note(sub);
        return sub;
    };

    graph_cmd("rank", "Generic rigidity-matroid rank r_d(G)");
    graph_cmd("rigid", "Generic rigidity verdict");
    graph_cmd("globally-rigid", "Generic global rigidity verdict");
    auto* linked = graph_cmd("linked", "Whether {u,v} is linked");
    linked->add_option("--u", a.u)->required();
    linked->add_option("--v", a.v)->required();
    auto* redundant = graph_cmd("redundant", "t-redundant rigidity");
    redundant->add_option("--t", a.t)->required();
    graph_cmd("connectivity", "Exact vertex connectivity");
    auto* gpi = graph_cmd("gpi", "Ordered subgraph G_pi with rule trace");
    gpi->add_option("--ordering", a.ordering, "Comma-separated vertex order (default: random from --seed)");
    auto* expected = graph_cmd("expected-gpi", "Exact expectation of |E_pi|");
    expected->add_option("--degree-cap", a.degree_cap);
    auto* gen_ly = app.add_subcommand("gen-ly", "Connected non-rigid family built from a Harary base graph");
    gen_ly->add_option("--s", a.s, "Number of base vertices")->required();
    app.add_subcommand("gen-sharpness", "Two K_{d(d+1)} joined by a perfect matching");
    auto* gen_harary = app.add_subcommand("gen-harary", "Harary graph H_{k,s}");
    gen_harary->add_option("--k", a.k)->required();
    gen_harary->add_option("--s", a.s)->required();
    auto* comb = app.add_subcommand("comblemma", "Clique-system subset count against C(n-1, m)");
    comb->add_option("--n", a.n)->required();
    comb->add_option("--m", a.m)->required();
    comb->add_option("--sets", a.sets, "Sets separated by ';', members by ','")->required();
    auto* mdk = app.add_subcommand("mdk", "Rank density constant m_{d,k}");
    mdk->add_option("--k", a.k)->required();
    auto* grn = graph_cmd("grn-bound", "Lower bound floor(sqrt(|E| / 6|V|))");
    grn->add_option("--vertices", a.vertices, "Use this |V| instead of reading a graph");
    grn->add_option("--edges", a.edges, "Use this |E| instead of reading a graph");
    graph_cmd("check-theorem1", "Connectivity d(d+1) implies rigidity");
    graph_cmd("check-theorem2", "Connectivity d(d+1) implies global rigidity");
    auto* t9 = app.add_subcommand("check-theorem9", "Redundant rigidity of the sharpness example");
    t9->add_flag("--allow-large-dim", a.allow_large_dim);
    graph_cmd("check-theorem10", "Rank lower bound for k-connected non-rigid graphs");
    auto* l6 = graph_cmd("check-lemma6", "Independence of G_pi when no non-edge is linked");
    l6->add_option("--orderings", a.orderings)->check(CLI::PositiveNumber);
    graph_cmd("check-lemma7-hyp", "Degree, neighbourhood and clique-intersection hypotheses");
    auto* wgl = graph_cmd("wgl", "Sufficient condition for weak global linkedness");
    wgl->add_option("--u", a.u)->required();
    wgl->add_option("--v", a.v)->required();
    wgl->add_option("--v0", a.v0, "Comma-separated vertex set containing u and v")->required();

    std::vector<const char*> argv{"rigidity-forge"};
    for (const auto& s : args) argv.push_back(s.c_str());

    std::string command;
    auto usage_error = [&](const std::string& message) {
        json doc = {{"schema", kSchema}, {"command", command.empty() ? json(nullptr) : json(command)}, {"error", message}};
        out << doc.dump() << '\n';
        err << "error: " << message << '\n';
        return kExitUsage;
    };

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        return usage_error(e.what());
    }

    command = app.get_subcommands().front()->get_name();
    const auto table = handlers();
    const auto handler = table.find(command);
    if (handler == table.end()) return usage_error("unknown command '" + command + "'");

    Context ctx{cfg, a, in, err};
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
        PrimeField validated(cfg.prime);
        (void)validated;
        outcome = handler->second(ctx);
    } catch (const Error& e) {
        return usage_error(e.what());
    }
    const double runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    const bool generator = command.rfind("gen-", 0) == 0;
    const std::string format = cfg.format.empty() ? (generator ? "text" : "json") : cfg.format;
    if (format == "text") {
        out << (outcome.text ? *outcome.text : render_text(command, outcome));
        return outcome.exit_code;
    }

    json params = {{"dim", cfg.dim}, {"trials", cfg.trials}, {"prime", cfg.prime}};
    for (auto& [key, value] : outcome.params.items()) params[key] = value;
    json doc = {
        {"schema", kSchema},
        {"command", command},
        {"input_digest", outcome.digest ? json(*outcome.digest) : json(nullptr)},
        {"params", params},
        {"result", outcome.result},
        {"confidence", outcome.confidence ? json(*outcome.confidence) : json(nullptr)},
        {"seed", cfg.seed},
        {"runtime_ms", runtime_ms},
    };
    out << doc.dump() << '\n';
    return outcome.exit_code;
}

}  // namespace rigidity_forge::cli
