#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mdim/errors.hpp"

namespace mdim {

using VertexId = std::int32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Immutable simple undirected graph: sorted adjacency lists plus optional
/// human-facing vertex labels. Connectivity is not an invariant here; the
/// distance-based layers check it explicitly.
class Graph {
public:
    static Graph from_edge_list(const std::vector<Edge>& edges, VertexId n,
                                std::vector<std::string> labels = {});

    VertexId n_vertices() const { return n_; }
    std::size_t n_edges() const { return n_edges_; }

    std::span<const VertexId> neighbors(VertexId v) const {
        check_vertex(v);
        return adjacency_[static_cast<std::size_t>(v)];
    }

    int degree(VertexId v) const {
        return static_cast<int>(neighbors(v).size());
    }

    bool has_edge(VertexId u, VertexId v) const;

    /// All edges as (u, v) with u < v, sorted ascending.
    std::vector<Edge> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    /// Label of v; falls back to the decimal id when no labels were attached.
    std::string label(VertexId v) const;
    /// Inverse lookup: exact label match first, then a plain decimal id.
    std::optional<VertexId> vertex_by_label(const std::string& s) const;

    void check_vertex(VertexId v) const {
        if (v < 0 || v >= n_)
            throw VertexOutOfRangeError(v, n_);
    }

private:
    Graph() = default;

    VertexId n_ = 0;
    std::size_t n_edges_ = 0;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::string> labels_;
};

/// Order-independent 64-bit FNV-1a hash of (n, sorted edge set). Binds report
/// output to the exact input graph.
std::uint64_t graph_hash(const Graph& g);

/// True iff a BFS from vertex 0 reaches every vertex (vacuously for n <= 1).
bool is_connected(const Graph& g);

/// All-pairs hop-count distances with an UNREACHABLE sentinel for
/// disconnected pairs. Stored as a flat n*n matrix of 16-bit counts.
class DistanceMatrix {
public:
    static constexpr std::uint16_t UNREACHABLE = 0xFFFF;

    DistanceMatrix(VertexId n) : n_(n), dist_(static_cast<std::size_t>(n) * n, UNREACHABLE) {}

    VertexId n_vertices() const { return n_; }

    std::uint16_t at(VertexId u, VertexId v) const {
        return dist_[static_cast<std::size_t>(u) * n_ + v];
    }

    std::span<const std::uint16_t> row(VertexId u) const {
        return {dist_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
    }

    std::span<std::uint16_t> mutable_row(VertexId u) {
        return {dist_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
    }

    /// True iff no entry is UNREACHABLE.
    bool all_reachable() const;

    /// Largest finite distance in the matrix.
    int max_finite_distance() const;

private:
    VertexId n_;
    std::vector<std::uint16_t> dist_;
};

/// BFS from every source. The parallel kernel splits sources across OpenMP
/// threads; rows are independent, so the result is identical to the serial
/// reference below.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Serial reference for the kernel above; kept for tests and benchmarks.
DistanceMatrix all_pairs_distances_serial(const Graph& g);

/// N(v): the sorted neighbor list.
std::vector<VertexId> open_neighborhood(const Graph& g, VertexId v);
/// N[v]: N(v) plus v itself, sorted.
std::vector<VertexId> closed_neighborhood(const Graph& g, VertexId v);

}  // namespace mdim
