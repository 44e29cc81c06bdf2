#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "io.hpp"
#include "report.hpp"
#include "test_util.hpp"
#include "xbound/graph.hpp"

using namespace xbound;
using namespace xbound::cli;
using nlohmann::json;

namespace {

struct TempDir {
    std::filesystem::path path;

    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("xbound_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }

    std::string file(const std::string& name, const std::string& contents) const {
        auto p = path / name;
        std::ofstream out(p);
        out << contents;
        return p.string();
    }
    std::string name(const std::string& leaf) const { return (path / leaf).string(); }
};

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

// Minimal structural validator for the subset of JSON Schema used in docs/:
// type, properties, required, items, additionalProperties.
bool validates(const json& doc, const json& schema, std::string& why) {
    if (schema.contains("type")) {
        const std::string& t = schema.at("type").get_ref<const std::string&>();
        bool ok = (t == "object" && doc.is_object()) || (t == "array" && doc.is_array()) ||
                  (t == "string" && doc.is_string()) || (t == "boolean" && doc.is_boolean()) ||
                  (t == "number" && doc.is_number()) || (t == "integer" && doc.is_number_integer());
        if (!ok) {
            why = "expected type " + t + " got " + doc.dump().substr(0, 40);
            return false;
        }
    }
    if (doc.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema.at("required"))
                if (!doc.contains(key.get<std::string>())) {
                    why = "missing required key " + key.get<std::string>();
                    return false;
                }
        if (schema.contains("properties")) {
            const auto& props = schema.at("properties");
            for (const auto& [key, value] : doc.items()) {
                if (props.contains(key)) {
                    if (!validates(value, props.at(key), why)) {
                        why = key + ": " + why;
                        return false;
                    }
                } else if (schema.value("additionalProperties", json(true)) == json(false)) {
                    why = "unexpected key " + key;
                    return false;
                }
            }
        }
    }
    if (doc.is_array() && schema.contains("items"))
        for (const auto& item : doc)
            if (!validates(item, schema.at("items"), why)) {
                why = "item: " + why;
                return false;
            }
    return true;
}

json load_schema(const std::string& leaf) {
    std::ifstream in(std::string(XBOUND_DOCS_DIR) + "/" + leaf);
    REQUIRE(in.good());
    return json::parse(in);
}

}  // namespace

TEST_CASE("graph serialization round-trips in both formats") {
    RandomStream rng(271828);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng.next_u64() % 64);
        Graph g = testutil::random_graph(n, rng.next_open_unit(), rng);
        for (GraphFormat f : {GraphFormat::Dimacs, GraphFormat::Json}) {
            std::istringstream in(serialize_graph(g, f));
            CHECK(parse_graph(in, f) == g);
        }
    }
}

TEST_CASE("dimacs parsing") {
    std::istringstream pentagon("p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    CHECK(parse_graph(pentagon, GraphFormat::Dimacs) == cycle_graph(5));

    std::istringstream with_comments("c a pentagon\np edge 5 5\nc body\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1");
    CHECK(parse_graph(with_comments, GraphFormat::Dimacs) == cycle_graph(5));

    std::istringstream zero("p edge 0 0\n");
    CHECK_THROWS_AS(parse_graph(zero, GraphFormat::Dimacs), std::invalid_argument);

    std::istringstream empty("");
    CHECK_THROWS_AS(parse_graph(empty, GraphFormat::Dimacs), std::invalid_argument);

    std::istringstream out_of_range("p edge 3 1\ne 1 4\n");
    CHECK_THROWS_AS(parse_graph(out_of_range, GraphFormat::Dimacs), std::invalid_argument);

    std::istringstream junk("p edge 3 0\nx nonsense\n");
    CHECK_THROWS_AS(parse_graph(junk, GraphFormat::Dimacs), std::invalid_argument);

    // Header/edge-count mismatch warns but still parses.
    std::istringstream mismatch("p edge 3 2\ne 1 2\n");
    std::ostringstream warnings;
    Graph g = parse_graph(mismatch, GraphFormat::Dimacs, &warnings);
    CHECK(g.edge_count() == 1);
    CHECK(warnings.str().find("warning") != std::string::npos);
}

TEST_CASE("json graph parsing matches the circulant") {
    Graph ci8 = circulant(8, {1, 2});
    json j;
    j["n"] = 8;
    j["edges"] = json::array();
    for (auto [a, b] : ci8.edges()) j["edges"].push_back({a, b});
    std::istringstream in(j.dump());
    CHECK(parse_graph(in, GraphFormat::Json) == ci8);

    std::istringstream bad("{\"n\": 3}");
    CHECK_THROWS_AS(parse_graph(bad, GraphFormat::Json), std::invalid_argument);
    std::istringstream not_json("p edge 3 0");
    CHECK_THROWS_AS(parse_graph(not_json, GraphFormat::Json), std::invalid_argument);
}

TEST_CASE("distribution files and fingerprints") {
    Graph c5 = cycle_graph(5);
    std::istringstream plain(R"({"p": [0.1, 0.2, 0.3, 0.4, 0.5]})");
    auto d = parse_distribution(plain);
    CHECK(d.values.size() == 5);
    CHECK_FALSE(d.fingerprint_hex.has_value());

    DistributionFile tagged{d.values, c5.fingerprint_hex()};
    CHECK_NOTHROW(check_distribution_fingerprint(tagged, c5, "test"));
    DistributionFile wrong{d.values, std::string("0000000000000000")};
    CHECK_THROWS_AS(check_distribution_fingerprint(wrong, c5, "test"), std::invalid_argument);

    std::istringstream bad(R"({"q": [1]})");
    CHECK_THROWS_AS(parse_distribution(bad), std::invalid_argument);
}

TEST_CASE("gen, complement, and product subcommands") {
    TempDir tmp;
    auto ci8_path = tmp.name("ci8.dimacs");
    auto r = run({"gen", "--family", "circulant", "--n", "8", "--conn", "1,2", "-o", ci8_path});
    CHECK(r.exit_code == 0);
    CHECK(read_graph_file(ci8_path) == circulant(8, {1, 2}));

    auto chsh_path = tmp.name("chsh.json");
    CHECK(run({"complement", ci8_path, "-o", chsh_path}).exit_code == 0);
    CHECK(read_graph_file(chsh_path) == complement(circulant(8, {1, 2})));

    auto k2_path = tmp.name("k2.dimacs");
    CHECK(run({"gen", "--family", "complete", "--n", "2", "-o", k2_path}).exit_code == 0);
    auto prod_path = tmp.name("k4.dimacs");
    CHECK(run({"product", k2_path, k2_path, "-o", prod_path}).exit_code == 0);
    CHECK(read_graph_file(prod_path) == complete_graph(4));

    CHECK(run({"gen", "--family", "nonsense", "--n", "3", "-o", tmp.name("x")}).exit_code == 2);
    CHECK(run({"gen", "--family", "cycle", "--n", "2", "-o", tmp.name("x")}).exit_code == 2);
}

TEST_CASE("alpha, alphastar, theta subcommands") {
    TempDir tmp;
    auto k7 = tmp.file("k7.dimacs", serialize_graph(complete_graph(7), GraphFormat::Dimacs));
    auto r = run({"alpha", k7});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");

    auto chsh = tmp.file("chsh.dimacs",
                         serialize_graph(complement(circulant(8, {1, 2})), GraphFormat::Dimacs));
    auto star = run({"alphastar", chsh});
    CHECK(star.exit_code == 0);
    CHECK(star.out == "4.0000000\n");

    auto th = run({"theta", chsh});
    CHECK(th.exit_code == 0);
    CHECK(th.out == "3.4142136\n");

    auto loose = run({"theta", chsh, "--tol", "1e-4"});
    CHECK(loose.exit_code == 0);

    // Weighted: scaling all weights by 1/2 halves the CHSH theta.
    json w;
    w["p"] = std::vector<double>(8, 0.5);
    auto weights = tmp.file("w.json", w.dump());
    auto weighted = run({"theta", chsh, "--weights", weights});
    CHECK(weighted.exit_code == 0);
    CHECK(weighted.out == "1.7071068\n");

    CHECK(run({"theta", tmp.name("missing.dimacs")}).exit_code == 2);
}

TEST_CASE("bounds report text and json") {
    TempDir tmp;
    auto k3 = tmp.file("k3.dimacs", serialize_graph(complete_graph(3), GraphFormat::Dimacs));
    auto r = run({"bounds", k3});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("alpha 1 ≤ theta 1.0000000 ≤ alpha* 1.0000000") != std::string::npos);
    CHECK(r.out.find("chain_consistent: true") != std::string::npos);
    CHECK(r.err.find("timing alpha") != std::string::npos);

    auto chsh = tmp.file("chsh.dimacs",
                         serialize_graph(complement(circulant(8, {1, 2})), GraphFormat::Dimacs));
    auto j1 = run({"bounds", chsh, "--json"});
    auto j2 = run({"bounds", chsh, "--json"});
    CHECK(j1.exit_code == 0);
    CHECK(j1.out == j2.out);  // byte-identical documents

    json doc = json::parse(j1.out);
    CHECK(doc.at("alpha").at("value") == 3);
    CHECK(doc.at("alpha_star").at("value").get<double>() == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(doc.at("theta").at("value").get<double>() ==
          doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-7));
    CHECK(doc.at("chain_consistent") == true);

    std::string why;
    CHECK_MESSAGE(validates(doc, load_schema("bound_report.schema.json"), why), why);

    // Text chain line for chsh.
    auto text = run({"bounds", chsh});
    CHECK(text.out.find("alpha 3 ≤ theta 3.4142136 ≤ alpha* 4.0000000") !=
          std::string::npos);
}

TEST_CASE("certify subcommand") {
    TempDir tmp;
    auto c5 = tmp.file("c5.dimacs", serialize_graph(cycle_graph(5), GraphFormat::Dimacs));
    auto r = run({"certify", c5});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("result: PASS (5/5 checks)") != std::string::npos);
    CHECK(r.out.find("witness q uniform 0.4472136") != std::string::npos);

    auto j = run({"certify", c5, "--json"});
    CHECK(j.exit_code == 0);
    json doc = json::parse(j.out);
    CHECK(doc.at("ep_certificate").at("all_passed") == true);
    std::string why;
    CHECK_MESSAGE(validates(doc, load_schema("certify_report.schema.json"), why), why);
}

TEST_CASE("check-ep subcommand accepts and rejects") {
    TempDir tmp;
    Graph chsh_graph = complement(circulant(8, {1, 2}));
    auto chsh = tmp.file("chsh.dimacs", serialize_graph(chsh_graph, GraphFormat::Dimacs));

    json pr;
    pr["p"] = std::vector<double>(8, 0.5);
    auto pr_path = tmp.file("pr.json", pr.dump());

    json witness;
    witness["p"] = std::vector<double>(8, 1.0 / (2.0 + std::sqrt(2.0)));
    auto q_path = tmp.file("q.json", witness.dump());

    auto fail = run({"check-ep", chsh, "--p", pr_path, "--q", q_path});
    CHECK(fail.exit_code == 1);
    CHECK(fail.out.find("value 1.1715729") != std::string::npos);
    CHECK(fail.out.find("FAIL") != std::string::npos);

    // The quantum-saturating uniform behavior passes at the boundary.
    json qm;
    qm["p"] = std::vector<double>(8, 1.0 / (2.0 + std::sqrt(2.0)));
    auto qm_path = tmp.file("qm.json", qm.dump());
    auto pass = run({"check-ep", chsh, "--p", qm_path, "--q", q_path});
    CHECK(pass.exit_code == 0);
    CHECK(pass.out.find("PASS") != std::string::npos);
}

TEST_CASE("check-ep with an explicit complement isomorphism map") {
    TempDir tmp;
    Graph c5 = cycle_graph(5);
    auto c5_path = tmp.file("c5.dimacs", serialize_graph(c5, GraphFormat::Dimacs));
    auto iso = find_isomorphism(complement(c5), c5);
    REQUIRE(iso.has_value());

    json m;
    m["map"] = iso->permutation;
    auto map_path = tmp.file("map.json", m.dump());
    json p;
    p["p"] = std::vector<double>(5, 1.0 / std::sqrt(5.0));
    auto p_path = tmp.file("p.json", p.dump());

    auto r = run({"check-ep", c5_path, c5_path, "--p", p_path, "--q", p_path, "--map", map_path});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("value 1.0000000") != std::string::npos);

    // Without the map, C5 against C5 itself is a structural mismatch.
    CHECK(run({"check-ep", c5_path, c5_path, "--p", p_path, "--q", p_path}).exit_code == 2);
}

TEST_CASE("check-cliques subcommand") {
    TempDir tmp;
    auto k3 = tmp.file("k3.dimacs", serialize_graph(complete_graph(3), GraphFormat::Dimacs));
    json heavy;
    heavy["p"] = std::vector<double>{0.5, 0.5, 0.5};
    auto heavy_path = tmp.file("heavy.json", heavy.dump());

    auto r = run({"check-cliques", "--p", heavy_path, k3});
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("violation: clique {0 1 2} sum 1.5000000") != std::string::npos);

    json light;
    light["p"] = std::vector<double>{0.2, 0.3, 0.4};
    auto light_path = tmp.file("light.json", light.dump());
    auto ok = run({"check-cliques", "--p", light_path, k3});
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "no violations\n");
}

TEST_CASE("two-copy subcommand") {
    TempDir tmp;
    auto c5 = tmp.file("c5.dimacs", serialize_graph(cycle_graph(5), GraphFormat::Dimacs));
    auto r = run({"two-copy", c5});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("product_alpha_star 5.0000000") != std::string::npos);
    CHECK(r.out.find("per_copy_bound 2.2360680") != std::string::npos);
}

TEST_CASE("scenario subcommand") {
    auto info = run({"scenario", "kcbs"});
    CHECK(info.exit_code == 0);
    CHECK(info.out.find("scenario kcbs: n=5, 5 edges") != std::string::npos);
    CHECK(info.out.find("theta expected 2.2360680") != std::string::npos);

    auto verify = run({"scenario", "kcbs", "--verify"});
    CHECK(verify.exit_code == 0);
    CHECK(verify.out.find("verified") != std::string::npos);

    auto complete = run({"scenario", "complete:4", "--verify"});
    CHECK(complete.exit_code == 0);

    CHECK(run({"scenario", "bogus"}).exit_code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({"gen", "--family", "cycle", "--n", "5"}).exit_code == 2);  // missing -o
    CHECK(run({"check-ep", "nonexistent.dimacs", "--p", "x", "--q", "y"}).exit_code == 2);
    CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("seed threads into the json documents") {
    TempDir tmp;
    auto k3 = tmp.file("k3.dimacs", serialize_graph(complete_graph(3), GraphFormat::Dimacs));
    auto r = run({"--seed", "7", "bounds", k3, "--json"});
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).at("seed") == 7);
}
