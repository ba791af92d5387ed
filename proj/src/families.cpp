#include "mdim/families.hpp"

namespace mdim {

namespace {

// Map a 1-based index to its representative in 1..n.
int wrap1(int i, int n) {
    int r = (i - 1) % n;
    if (r < 0) r += n;
    return r + 1;
}

}  // namespace

std::string to_string(EdgeVariant v) {
    return v == EdgeVariant::Repaired ? "repaired" : "literal";
}

EdgeVariant edge_variant_from_string(const std::string& s) {
    if (s == "repaired") return EdgeVariant::Repaired;
    if (s == "literal") return EdgeVariant::Literal;
    throw ParseError("unknown edge variant '" + s + "' (expected repaired|literal)");
}

Graph prism_petersen(int n, EdgeVariant variant) {
    if (n < 5)
        throw TooSmallError("prism_petersen", n, 5);
    auto a = [&](int xi) { return static_cast<VertexId>(wrap1(xi, n) - 1); };
    auto b = [&](int xi) { return static_cast<VertexId>(n + wrap1(xi, n) - 1); };
    auto c = [&](int xi) { return static_cast<VertexId>(2 * n + wrap1(xi, n) - 1); };

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(5 * n));
    for (int xi = 1; xi <= n; ++xi) {
        if (variant == EdgeVariant::Repaired)
            edges.emplace_back(a(xi), a(xi + 2));
        else
            edges.emplace_back(a(xi), b(xi + 2));
        edges.emplace_back(b(xi), b(xi + 1));
        edges.emplace_back(c(xi), c(xi + 1));
        edges.emplace_back(a(xi), b(xi));
        edges.emplace_back(b(xi), c(xi));
    }

    std::vector<std::string> labels(static_cast<std::size_t>(3 * n));
    for (int xi = 1; xi <= n; ++xi) {
        labels[static_cast<std::size_t>(a(xi))] = "a" + std::to_string(xi);
        labels[static_cast<std::size_t>(b(xi))] = "b" + std::to_string(xi);
        labels[static_cast<std::size_t>(c(xi))] = "c" + std::to_string(xi);
    }
    return Graph::from_edge_list(edges, static_cast<VertexId>(3 * n), std::move(labels));
}

namespace {

Graph petersen_labeled(int n, int m, const std::string& outer_prefix,
                       const std::string& inner_prefix) {
    if (n < 3)
        throw TooSmallError("petersen", n, 3);
    if (m < 1 || 2 * m >= n + 1)  // m < ceil(n/2)
        throw BadSkipError(n, m);
    auto outer = [&](int xi) { return static_cast<VertexId>(wrap1(xi, n) - 1); };
    auto inner = [&](int xi) { return static_cast<VertexId>(n + wrap1(xi, n) - 1); };

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(3 * n));
    for (int xi = 1; xi <= n; ++xi) {
        edges.emplace_back(outer(xi), outer(xi + 1));
        edges.emplace_back(inner(xi), inner(xi + m));
        edges.emplace_back(outer(xi), inner(xi));
    }
    std::vector<std::string> labels(static_cast<std::size_t>(2 * n));
    for (int xi = 1; xi <= n; ++xi) {
        labels[static_cast<std::size_t>(outer(xi))] = outer_prefix + std::to_string(xi);
        labels[static_cast<std::size_t>(inner(xi))] = inner_prefix + std::to_string(xi);
    }
    return Graph::from_edge_list(edges, static_cast<VertexId>(2 * n), std::move(labels));
}

}  // namespace

Graph petersen(int n, int m) { return petersen_labeled(n, m, "u", "v"); }

Graph prism(int n) { return petersen_labeled(n, 1, "u", "v"); }

Graph cycle(int n) {
    if (n < 3)
        throw TooSmallError("cycle", n, 3);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        labels[static_cast<std::size_t>(i)] = "v" + std::to_string(i + 1);
    return Graph::from_edge_list(edges, static_cast<VertexId>(n), std::move(labels));
}

Graph path(int n) {
    if (n < 1)
        throw TooSmallError("path", n, 1);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        labels[static_cast<std::size_t>(i)] = "v" + std::to_string(i + 1);
    return Graph::from_edge_list(edges, static_cast<VertexId>(n), std::move(labels));
}

FamilySpec::Kind FamilySpec::kind_from_string(const std::string& s) {
    if (s == "prism-petersen") return Kind::PrismPetersen;
    if (s == "petersen") return Kind::Petersen;
    if (s == "cycle") return Kind::Cycle;
    if (s == "path") return Kind::Path;
    if (s == "prism") return Kind::Prism;
    throw ParseError("unknown family '" + s +
                     "' (expected prism-petersen|petersen|cycle|path|prism)");
}

Graph FamilySpec::build() const {
    switch (kind) {
        case Kind::PrismPetersen: return prism_petersen(n, variant);
        case Kind::Petersen: return petersen(n, m);
        case Kind::Cycle: return cycle(n);
        case Kind::Path: return path(n);
        case Kind::Prism: return prism(n);
    }
    throw Error("unreachable family kind");
}

}  // namespace mdim
