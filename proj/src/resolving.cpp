#include "mdim/resolving.hpp"

#include <algorithm>
#include <numeric>

namespace mdim {

namespace {

void require_connected(const DistanceMatrix& dm) {
    if (!dm.all_reachable())
        throw DisconnectedGraphError();
}

void validate_landmarks(const DistanceMatrix& dm, const LandmarkSet& w) {
    for (VertexId v : w)
        if (v < 0 || v >= dm.n_vertices())
            throw VertexOutOfRangeError(v, dm.n_vertices());
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] == w[j])
                throw Error("duplicate landmark " + std::to_string(w[i]));
}

// Sort vertex ids by their gathered distance tuple; equal-tuple vertices end
// up adjacent. Shared by the resolving predicate and the pair diagnostic.
std::vector<VertexId> order_by_signature(const DistanceMatrix& dm, const LandmarkSet& w) {
    const VertexId n = dm.n_vertices();
    std::vector<VertexId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
        for (VertexId lm : w) {
            auto dx = dm.at(x, lm), dy = dm.at(y, lm);
            if (dx != dy) return dx < dy;
        }
        return false;
    });
    return order;
}

bool signatures_equal(const DistanceMatrix& dm, const LandmarkSet& w, VertexId x, VertexId y) {
    for (VertexId lm : w)
        if (dm.at(x, lm) != dm.at(y, lm))
            return false;
    return true;
}

}  // namespace

Representation representation(const DistanceMatrix& dm, VertexId v, const LandmarkSet& w) {
    require_connected(dm);
    if (v < 0 || v >= dm.n_vertices())
        throw VertexOutOfRangeError(v, dm.n_vertices());
    validate_landmarks(dm, w);
    Representation r;
    r.reserve(w.size());
    for (VertexId lm : w)
        r.push_back(dm.at(v, lm));
    return r;
}

bool is_resolving(const DistanceMatrix& dm, const LandmarkSet& w) {
    require_connected(dm);
    validate_landmarks(dm, w);
    if (w.empty())
        return dm.n_vertices() <= 1;
    auto order = order_by_signature(dm, w);
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (signatures_equal(dm, w, order[i], order[i + 1]))
            return false;
    return true;
}

bool is_fault_tolerant(const DistanceMatrix& dm, const LandmarkSet& w) {
    require_connected(dm);
    validate_landmarks(dm, w);
    if (w.empty())
        throw Error("fault tolerance is undefined for an empty landmark set");
    LandmarkSet reduced;
    reduced.reserve(w.size() - 1);
    for (std::size_t skip = 0; skip < w.size(); ++skip) {
        reduced.clear();
        for (std::size_t i = 0; i < w.size(); ++i)
            if (i != skip)
                reduced.push_back(w[i]);
        if (!is_resolving(dm, reduced))
            return false;
    }
    return true;
}

std::vector<TwinClass> twin_classes(const DistanceMatrix& dm) {
    const VertexId n = dm.n_vertices();
    auto twins = [&](VertexId a, VertexId b) {
        for (VertexId u = 0; u < n; ++u) {
            if (u == a || u == b) continue;
            if (dm.at(a, u) != dm.at(b, u)) return false;
        }
        return true;
    };

    std::vector<VertexId> root(static_cast<std::size_t>(n));
    std::iota(root.begin(), root.end(), 0);
    for (VertexId a = 0; a < n; ++a) {
        if (root[static_cast<std::size_t>(a)] != a) continue;  // already grouped
        for (VertexId b = a + 1; b < n; ++b)
            if (root[static_cast<std::size_t>(b)] == b && twins(a, b))
                root[static_cast<std::size_t>(b)] = a;
    }

    std::vector<TwinClass> classes;
    for (VertexId a = 0; a < n; ++a) {
        if (root[static_cast<std::size_t>(a)] != a) continue;
        TwinClass c;
        for (VertexId b = a; b < n; ++b)
            if (root[static_cast<std::size_t>(b)] == a)
                c.members.push_back(b);
        if (c.members.size() >= 2)
            classes.push_back(std::move(c));
    }

    // The twin relation is an equivalence; grouping by first representative
    // is only sound if it actually is. Verify transitivity on the result.
    for (const auto& c : classes)
        for (std::size_t i = 0; i < c.members.size(); ++i)
            for (std::size_t j = i + 1; j < c.members.size(); ++j)
                if (!twins(c.members[i], c.members[j]))
                    throw Error("twin relation failed transitivity check");
    return classes;
}

std::vector<std::pair<VertexId, VertexId>> unresolved_pairs(const DistanceMatrix& dm,
                                                            const LandmarkSet& w) {
    require_connected(dm);
    validate_landmarks(dm, w);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    if (w.empty()) {
        for (VertexId a = 0; a < dm.n_vertices(); ++a)
            for (VertexId b = a + 1; b < dm.n_vertices(); ++b)
                pairs.emplace_back(a, b);
        return pairs;
    }
    auto order = order_by_signature(dm, w);
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i + 1;
        while (j < order.size() && signatures_equal(dm, w, order[i], order[j]))
            ++j;
        if (j - i >= 2) {
            std::vector<VertexId> group(order.begin() + i, order.begin() + j);
            std::sort(group.begin(), group.end());
            for (std::size_t x = 0; x < group.size(); ++x)
                for (std::size_t y = x + 1; y < group.size(); ++y)
                    pairs.emplace_back(group[x], group[y]);
        }
        i = j;
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

}  // namespace mdim
