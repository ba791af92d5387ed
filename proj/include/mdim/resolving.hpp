#pragma once

#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

/// Ordered list of distinct landmark vertices; the order defines the
/// component order of every representation tuple.
using LandmarkSet = std::vector<VertexId>;

/// Distance tuple of one vertex with respect to a landmark set.
using Representation = std::vector<int>;

/// r(v|W): the tuple (d(v, W[0]), ..., d(v, W[k-1])).
Representation representation(const DistanceMatrix& dm, VertexId v, const LandmarkSet& w);

/// True iff representation(., w) is injective over all vertices. The empty
/// set resolves only the one-vertex graph.
bool is_resolving(const DistanceMatrix& dm, const LandmarkSet& w);

/// True iff every one-element deletion of w still resolves.
bool is_fault_tolerant(const DistanceMatrix& dm, const LandmarkSet& w);

/// Vertices pairwise equidistant from every other vertex. Any resolving set
/// must contain all but at most one member of each class.
struct TwinClass {
    std::vector<VertexId> members;  // sorted, size >= 2
};

std::vector<TwinClass> twin_classes(const DistanceMatrix& dm);

/// All vertex pairs sharing a representation, sorted lexicographically.
/// Empty exactly when w is resolving.
std::vector<std::pair<VertexId, VertexId>> unresolved_pairs(const DistanceMatrix& dm,
                                                            const LandmarkSet& w);

}  // namespace mdim
