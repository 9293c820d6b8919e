#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "rigidity_forge/cli.hpp"
#include "rigidity_forge/graph.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = rigidity_forge::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json doc(const Run& r) { return nlohmann::json::parse(r.out); }

const std::string kK4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("rigid on K4") {
    const auto r = run({"rigid", "--dim", "2"}, kK4);
    CHECK(r.code == 0);
    const auto j = doc(r);
    CHECK(j.at("result") == true);
    CHECK(j.at("confidence") == "certain");
    CHECK(j.at("schema") == rigidity_forge::cli::kSchema);
    CHECK(j.at("command") == "rigid");
    for (const char* key : {"input_digest", "params", "seed", "runtime_ms"}) CHECK(j.contains(key));
}

TEST_CASE("generator output pipes into queries") {
    const auto gen = run({"gen-ly", "--dim", "2", "--s", "8"});
    CHECK(gen.code == 0);
    CHECK(gen.out.rfind("40 ", 0) == 0);
    const auto r = run({"rigid", "--dim", "2"}, gen.out);
    CHECK(doc(r).at("result") == false);
    const auto kappa = run({"connectivity"}, gen.out);
    CHECK(doc(kappa).at("result") == 5);

    const auto json_gen = run({"--format", "json", "gen-harary", "--k", "4", "--s", "7"});
    CHECK(doc(json_gen).at("result").at("m") == 14);
}

TEST_CASE("exact constants") {
    CHECK(doc(run({"mdk", "--dim", "2", "--k", "5"})).at("result") == "19/10");
    CHECK(doc(run({"mdk", "--dim", "2", "--k", "5"})).at("input_digest").is_null());
    CHECK(doc(run({"grn-bound", "--vertices", "10", "--edges", "60"})).at("result") == 1);
    CHECK(doc(run({"grn-bound"}, kK4)).at("result") == 0);
    const auto comb = doc(run({"comblemma", "--n", "6", "--m", "3", "--sets", "0,1,2;3,4,5"}));
    CHECK(comb.at("result").at("count") == "2");
    CHECK(comb.at("result").at("holds") == true);
    CHECK(doc(run({"expected-gpi"}, "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n")).at("result").at("expectation") == "5");
}

TEST_CASE("graph queries") {
    CHECK(doc(run({"rank", "--dim", "3"}, "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")).at("result") == 9);
    CHECK(doc(run({"globally-rigid"}, kK4)).at("result") == true);
    CHECK(doc(run({"linked", "--u", "0", "--v", "2"}, "4 4\n0 1\n1 2\n2 3\n0 3\n")).at("result") == false);
    CHECK(doc(run({"redundant", "--t", "2"}, kK4)).at("result").at("value") == true);
    CHECK(doc(run({"gpi", "--ordering", "0,1,2,3"}, kK4)).at("result").at("subgraph").at("m") == 5);
    CHECK(doc(run({"wgl", "--u", "0", "--v", "1", "--v0", "0,1"}, kK4)).at("result") == true);
    CHECK(doc(run({"rigid"}, "C~")).at("result") == true);
}

TEST_CASE("check commands and exit codes") {
    const auto pass = run({"check-theorem1"}, "12 36\n" + [] {
        std::string s;
        for (int a = 0; a < 6; ++a)
            for (int b = 6; b < 12; ++b) s += std::to_string(a) + " " + std::to_string(b) + "\n";
        return s;
    }());
    CHECK(pass.code == 0);
    CHECK(doc(pass).at("result").at("status") == "pass");
    const auto hyp = run({"check-lemma7-hyp"}, "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    CHECK(hyp.code == rigidity_forge::cli::kExitCheckFailed);
    CHECK(doc(hyp).at("result").at("status") == "fail");
    const auto refused = run({"check-theorem9", "--dim", "3"});
    CHECK(refused.code == rigidity_forge::cli::kExitUsage);
}

TEST_CASE("usage and input errors") {
    const auto none = run({});
    CHECK(none.code == rigidity_forge::cli::kExitUsage);
    CHECK(doc(none).contains("error"));
    CHECK(run({"bogus"}).code == rigidity_forge::cli::kExitUsage);
    CHECK(run({"linked"}, kK4).code == rigidity_forge::cli::kExitUsage);
    CHECK(run({"--format", "xml", "rigid"}, kK4).code == rigidity_forge::cli::kExitUsage);
    CHECK(run({"--prime", "1000003", "rigid"}, kK4).code == rigidity_forge::cli::kExitUsage);
    const auto bad = run({"rigid"}, "3 2\n0 1\n1 7\n");
    CHECK(bad.code == rigidity_forge::cli::kExitUsage);
    CHECK(doc(bad).at("error").get<std::string>().find("line 3") != std::string::npos);
    CHECK(run({"--input", "/nonexistent/graph.txt", "rigid"}).code == rigidity_forge::cli::kExitUsage);
}

TEST_CASE("duplicate edges warn on stderr") {
    const auto r = run({"rank"}, "3 2\n0 1\n0 1\n");
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(doc(r).at("result") == 1);
}

TEST_CASE("text format") {
    const auto r = run({"--format", "text", "rigid"}, kK4);
    CHECK(r.out == "rigid: true (certain)\n");
}

TEST_CASE("environment defaults yield to flags") {
    setenv("RIGIDITY_FORGE_DIM", "3", 1);
    CHECK(doc(run({"rank"}, kK4)).at("params").at("dim") == 3);
    CHECK(doc(run({"rank", "--dim", "2"}, kK4)).at("params").at("dim") == 2);
    unsetenv("RIGIDITY_FORGE_DIM");
}

TEST_CASE("reruns are byte identical apart from timing") {
    auto strip = [](const Run& r) {
        auto j = doc(r);
        j.erase("runtime_ms");
        return j.dump();
    };
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--seed", "5", "rank"}, {"--seed", "5", "gpi"}, {"--seed", "5", "globally-rigid"}}) {
        CHECK(strip(run(args, kK4)) == strip(run(args, kK4)));
    }
}


TEST_CASE("generator output round trips") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"gen-ly", "--s", "8"}, {"--dim", "3", "gen-sharpness"}, {"gen-harary", "--k", "5", "--s", "8"}}) {
        const auto text = run(args);
        auto json_args = args;
        json_args.insert(json_args.begin(), {"--format", "json"});
        const auto j = doc(run(json_args));
        const auto reparsed = run({"--format", "json", "connectivity"}, text.out);
        CHECK(doc(reparsed).at("input_digest") == j.at("input_digest"));
        const auto g = rigidity_forge::parse_graph(text.out);
        CHECK(rigidity_forge::to_edge_list(g) == text.out);
        CHECK(rigidity_forge::parse_graph(rigidity_forge::to_graph6(g)) == g);
    }
}

}
