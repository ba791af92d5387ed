#include "mdim/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

namespace mdim {

namespace {

bool is_blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    VertexId declared_n = -1;
    VertexId max_seen = -1;
    bool first_content_line = true;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#' || is_blank(line))
            continue;
        std::istringstream ls(line);
        if (first_content_line) {
            first_content_line = false;
            std::string head;
            ls >> head;
            if (head == "n") {
                if (!(ls >> declared_n) || declared_n < 0)
                    throw ParseError("line " + std::to_string(line_no) +
                                     ": malformed vertex-count declaration");
                continue;
            }
            ls.clear();
            ls.seekg(0);
        }
        VertexId u, v;
        if (!(ls >> u >> v))
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
        if (u < 0 || v < 0)
            throw ParseError("line " + std::to_string(line_no) + ": negative vertex id");
        edges.emplace_back(u, v);
        max_seen = std::max({max_seen, u, v});
    }

    VertexId n = declared_n >= 0 ? declared_n : max_seen + 1;
    return Graph::from_edge_list(edges, n);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    // The count header is only needed when edges alone underdetermine n.
    bool needs_header = g.n_vertices() == 0;
    for (VertexId v = 0; v < g.n_vertices() && !needs_header; ++v)
        if (g.degree(v) == 0)
            needs_header = true;
    if (needs_header)
        out << "n " << g.n_vertices() << "\n";
    for (auto [u, v] : g.edges())
        out << u << " " << v << "\n";
}

void write_dot(std::ostream& out, const Graph& g, const std::string& name) {
    out << "graph " << name << " {\n";
    for (VertexId v = 0; v < g.n_vertices(); ++v) {
        const std::string label = g.label(v);
        out << "  v" << v << " [label=\"" << label << "\"";
        if (label.size() >= 2 && (label[0] == 'a' || label[0] == 'b' || label[0] == 'c') &&
            std::all_of(label.begin() + 1, label.end(),
                        [](unsigned char c) { return std::isdigit(c); }))
            out << ", layer=\"" << label[0] << "\"";
        out << "];\n";
    }
    for (auto [u, v] : g.edges())
        out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
}

}  // namespace mdim
