#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "xbound/graph.hpp"
#include "xbound/probability.hpp"

namespace xbound::cli {

enum class GraphFormat { Dimacs, Json };

/// ".json" selects the JSON format; everything else is DIMACS.
GraphFormat format_for_path(const std::string& path);

/// DIMACS ("p edge N M" header, 1-based "e u v" lines, "c" comments) or
/// JSON {"n": int, "edges": [[i,j], ...]} with 0-based indices. A DIMACS
/// edge-count mismatch is reported on `warnings` but is not an error.
Graph parse_graph(std::istream& in, GraphFormat format, std::ostream* warnings = nullptr);

std::string serialize_graph(const Graph& g, GraphFormat format);

Graph read_graph_file(const std::string& path, std::ostream* warnings = nullptr);
void write_graph_file(const Graph& g, const std::string& path,
                      std::optional<GraphFormat> format = std::nullopt);

/// Distribution file: {"p": [real, ...]} with an optional
/// {"graph_fingerprint": "<hex>"} guard.
struct DistributionFile {
    std::vector<double> values;
    std::optional<std::string> fingerprint_hex;
};

DistributionFile parse_distribution(std::istream& in);
DistributionFile read_distribution_file(const std::string& path);

/// Throws when the file carries a fingerprint that does not match g.
void check_distribution_fingerprint(const DistributionFile& d, const Graph& g,
                                    const std::string& what);

ProbabilityAssignment load_assignment(const std::string& path, const Graph& g,
                                      const std::string& what);

/// Vertex map file: {"map": [int, ...]}.
VertexMap read_vertex_map_file(const std::string& path);

}  // namespace xbound::cli
