#pragma once

#include <iosfwd>
#include <string>

#include "mdim/graph.hpp"

namespace mdim {

/// Edge-list text format: one edge per line "u v" (0-based decimal), '#'
/// starts a comment line, and the first non-comment line may be
/// "n <count>" to declare isolated vertices.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

/// Graphviz output. Vertex labels become label attributes; labels of the
/// form a<k>/b<k>/c<k> additionally get a layer attribute for 3-ring layout.
void write_dot(std::ostream& out, const Graph& g, const std::string& name = "G");

}  // namespace mdim
