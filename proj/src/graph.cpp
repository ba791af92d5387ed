#include "mdim/graph.hpp"

#include <algorithm>
#include <charconv>

namespace mdim {

Graph Graph::from_edge_list(const std::vector<Edge>& edges, VertexId n,
                            std::vector<std::string> labels) {
    if (n < 0)
        throw Error("vertex count must be non-negative");
    if (!labels.empty() && static_cast<VertexId>(labels.size()) != n)
        throw Error("label vector size does not match vertex count");

    Graph g;
    g.n_ = n;
    g.labels_ = std::move(labels);
    g.adjacency_.assign(static_cast<std::size_t>(n), {});

    for (auto [u, v] : edges) {
        if (u < 0 || u >= n) throw VertexOutOfRangeError(u, n);
        if (v < 0 || v >= n) throw VertexOutOfRangeError(v, n);
        if (u == v) throw SelfLoopError(u);
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        g.n_edges_ += adj.size();
    }
    g.n_edges_ /= 2;
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& adj = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(n_edges_);
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v : adjacency_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string Graph::label(VertexId v) const {
    check_vertex(v);
    if (labels_.empty())
        return std::to_string(v);
    return labels_[static_cast<std::size_t>(v)];
}

std::optional<VertexId> Graph::vertex_by_label(const std::string& s) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == s)
            return static_cast<VertexId>(i);
    VertexId v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc{} && ptr == s.data() + s.size() && v >= 0 && v < n_)
        return v;
    return std::nullopt;
}

std::uint64_t graph_hash(const Graph& g) {
    constexpr std::uint64_t offset = 1469598103934665603ull;
    constexpr std::uint64_t prime = 1099511628211ull;
    std::uint64_t h = offset;
    auto mix32 = [&](std::uint32_t x) {
        for (int i = 0; i < 4; ++i) {
            h ^= (x >> (8 * i)) & 0xFF;
            h *= prime;
        }
    };
    mix32(static_cast<std::uint32_t>(g.n_vertices()));
    for (auto [u, v] : g.edges()) {
        mix32(static_cast<std::uint32_t>(u));
        mix32(static_cast<std::uint32_t>(v));
    }
    return h;
}

namespace {

// Single-source BFS into a preallocated row of hop counts.
void bfs_row(const Graph& g, VertexId source, std::span<std::uint16_t> row,
             std::vector<VertexId>& queue) {
    std::fill(row.begin(), row.end(), DistanceMatrix::UNREACHABLE);
    queue.clear();
    queue.push_back(source);
    row[static_cast<std::size_t>(source)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        std::uint16_t du = row[static_cast<std::size_t>(u)];
        for (VertexId v : g.neighbors(u)) {
            if (row[static_cast<std::size_t>(v)] == DistanceMatrix::UNREACHABLE) {
                row[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(du + 1);
                queue.push_back(v);
            }
        }
    }
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.n_vertices() <= 1)
        return true;
    std::vector<std::uint16_t> row(static_cast<std::size_t>(g.n_vertices()));
    std::vector<VertexId> queue;
    bfs_row(g, 0, row, queue);
    return std::none_of(row.begin(), row.end(),
                        [](std::uint16_t d) { return d == DistanceMatrix::UNREACHABLE; });
}

bool DistanceMatrix::all_reachable() const {
    return std::none_of(dist_.begin(), dist_.end(),
                        [](std::uint16_t d) { return d == UNREACHABLE; });
}

int DistanceMatrix::max_finite_distance() const {
    int best = 0;
    for (std::uint16_t d : dist_)
        if (d != UNREACHABLE && d > best)
            best = d;
    return best;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const VertexId n = g.n_vertices();
    DistanceMatrix dm(n);
#pragma omp parallel
    {
        std::vector<VertexId> queue;
        queue.reserve(static_cast<std::size_t>(n));
#pragma omp for schedule(dynamic, 16)
        for (VertexId s = 0; s < n; ++s)
            bfs_row(g, s, dm.mutable_row(s), queue);
    }
    return dm;
}

DistanceMatrix all_pairs_distances_serial(const Graph& g) {
    const VertexId n = g.n_vertices();
    DistanceMatrix dm(n);
    std::vector<VertexId> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (VertexId s = 0; s < n; ++s)
        bfs_row(g, s, dm.mutable_row(s), queue);
    return dm;
}

std::vector<VertexId> open_neighborhood(const Graph& g, VertexId v) {
    auto nb = g.neighbors(v);
    return {nb.begin(), nb.end()};
}

std::vector<VertexId> closed_neighborhood(const Graph& g, VertexId v) {
    auto out = open_neighborhood(g, v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

}  // namespace mdim
