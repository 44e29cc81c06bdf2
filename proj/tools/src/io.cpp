#include "io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace xbound::cli {

using nlohmann::json;

GraphFormat format_for_path(const std::string& path) {
    return path.size() >= 5 && path.substr(path.size() - 5) == ".json" ? GraphFormat::Json
                                                                       : GraphFormat::Dimacs;
}

namespace {

Graph parse_dimacs(std::istream& in, std::ostream* warnings) {
    std::string line;
    long declared_n = -1, declared_m = -1;
    long edge_lines = 0;
    int lineno = 0;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream tokens(line);
        std::string tag;
        if (!(tokens >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (declared_n >= 0 || !(tokens >> kind >> declared_n >> declared_m) || kind != "edge")
                throw std::invalid_argument("dimacs: malformed problem line at line " +
                                            std::to_string(lineno));
            if (declared_n < 1)
                throw std::invalid_argument("dimacs: vertex count must be >= 1");
            continue;
        }
        if (tag == "e") {
            long u = 0, v = 0;
            if (declared_n < 0)
                throw std::invalid_argument("dimacs: edge before problem line at line " +
                                            std::to_string(lineno));
            if (!(tokens >> u >> v))
                throw std::invalid_argument("dimacs: malformed edge at line " +
                                            std::to_string(lineno));
            if (u < 1 || u > declared_n || v < 1 || v > declared_n)
                throw std::invalid_argument("dimacs: vertex index out of range at line " +
                                            std::to_string(lineno));
            ++edge_lines;
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw std::invalid_argument("dimacs: unrecognized line " + std::to_string(lineno) + ": '" +
                                    line + "'");
    }
    if (declared_n < 0) throw std::invalid_argument("dimacs: empty input (no problem line)");
    if (warnings && declared_m >= 0 && declared_m != edge_lines)
        *warnings << "warning: dimacs header declares " << declared_m << " edges but " << edge_lines
                  << " edge lines were found\n";
    return graph_from_edges(static_cast<int>(declared_n), edges);
}

Graph parse_json_graph(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("json graph: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("json graph: expected {\"n\": int, \"edges\": [[i,j],...]}");
    try {
        int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("json graph: each edge must be a pair");
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        }
        return graph_from_edges(n, edges);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("json graph: ") + e.what());
    }
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format, std::ostream* warnings) {
    return format == GraphFormat::Dimacs ? parse_dimacs(in, warnings) : parse_json_graph(in);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    auto edges = g.edges();
    if (format == GraphFormat::Dimacs) {
        std::ostringstream out;
        out << "p edge " << g.vertex_count() << ' ' << edges.size() << '\n';
        for (auto [i, j] : edges) out << "e " << i + 1 << ' ' << j + 1 << '\n';
        return out.str();
    }
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = json::array();
    for (auto [a, b] : edges) j["edges"].push_back(json::array({a, b}));
    return j.dump(2) + "\n";
}

Graph read_graph_file(const std::string& path, std::ostream* warnings) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    return parse_graph(in, format_for_path(path), warnings);
}

void write_graph_file(const Graph& g, const std::string& path, std::optional<GraphFormat> format) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write graph file '" + path + "'");
    out << serialize_graph(g, format.value_or(format_for_path(path)));
}

DistributionFile parse_distribution(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("distribution file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("p") || !j.at("p").is_array())
        throw std::invalid_argument("distribution file: expected {\"p\": [real, ...]}");
    DistributionFile d;
    try {
        for (const auto& v : j.at("p")) d.values.push_back(v.get<double>());
        if (j.contains("graph_fingerprint"))
            d.fingerprint_hex = j.at("graph_fingerprint").get<std::string>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("distribution file: ") + e.what());
    }
    return d;
}

DistributionFile read_distribution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open distribution file '" + path + "'");
    return parse_distribution(in);
}

void check_distribution_fingerprint(const DistributionFile& d, const Graph& g,
                                    const std::string& what) {
    if (d.fingerprint_hex && *d.fingerprint_hex != g.fingerprint_hex())
        throw std::invalid_argument(what + ": graph fingerprint mismatch (file " +
                                    *d.fingerprint_hex + ", graph " + g.fingerprint_hex() + ")");
}

ProbabilityAssignment load_assignment(const std::string& path, const Graph& g,
                                      const std::string& what) {
    DistributionFile d = read_distribution_file(path);
    check_distribution_fingerprint(d, g, what);
    return ProbabilityAssignment::for_graph(g, d.values);
}

VertexMap read_vertex_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open map file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("map file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("map") || !j.at("map").is_array())
        throw std::invalid_argument("map file: expected {\"map\": [int, ...]}");
    VertexMap m;
    try {
        for (const auto& v : j.at("map")) m.permutation.push_back(v.get<int>());
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("map file: ") + e.what());
    }
    if (!VertexMap::is_permutation(m.permutation))
        throw std::invalid_argument("map file: entries are not a permutation of 0..n-1");
    return m;
}

}  // namespace xbound::cli
