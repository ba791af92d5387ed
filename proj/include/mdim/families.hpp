#pragma once

#include <string>

#include "mdim/graph.hpp"

namespace mdim {

/// Which inner-layer edge rule to use for the three-layer family. The
/// printed source rule ("literal") joins a_xi to b_{xi+2}; the repaired rule
/// closes the inner layer with skip-2 edges a_xi a_{xi+2}, which is the
/// reading the claimed distance tables actually agree with. Both are
/// generated so the audit can demonstrate the difference.
enum class EdgeVariant { Repaired, Literal };

std::string to_string(EdgeVariant v);
EdgeVariant edge_variant_from_string(const std::string& s);

/// Three-layer graph on 3n vertices: inner skip-2 layer a_1..a_n, middle
/// cycle b_1..b_n, outer cycle c_1..c_n, spokes a_xi b_xi and b_xi c_xi.
/// Labels follow the 1-based a/b/c convention; ids are a_xi -> xi-1,
/// b_xi -> n+xi-1, c_xi -> 2n+xi-1. 5n edges, n >= 5.
Graph prism_petersen(int n, EdgeVariant variant = EdgeVariant::Repaired);

/// Generalized Petersen graph: outer n-cycle u_1..u_n, inner skip-m layer
/// v_1..v_n, spokes. Requires n >= 3 and 1 <= m < ceil(n/2).
Graph petersen(int n, int m);

/// C_n x K_2: petersen(n, 1) with prism labels.
Graph prism(int n);

Graph cycle(int n);
Graph path(int n);

struct FamilySpec {
    enum class Kind { PrismPetersen, Petersen, Cycle, Path, Prism };
    Kind kind = Kind::PrismPetersen;
    int n = 0;
    int m = 2;  // petersen only
    EdgeVariant variant = EdgeVariant::Repaired;

    static FamilySpec::Kind kind_from_string(const std::string& s);
    Graph build() const;
};

}  // namespace mdim
