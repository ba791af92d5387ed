#pragma once

#include <optional>
#include <string>

#include "mdim/search.hpp"

namespace mdim {

/// T(w) = { x : N(w) is a subset of N(x) }. Always contains w.
std::vector<VertexId> t_set(const Graph& g, VertexId w);

/// Build the union of N[w] and T(w) over all landmarks of a resolving set,
/// deduplicated and sorted. The construction is supposed to yield a
/// fault-tolerant resolving set; the result is verified before returning and
/// a failure surfaces as LemmaViolationError with the counterexample, since
/// falsifying the construction is a first-class outcome of this toolkit.
LandmarkSet ft_from_resolving(const Graph& g, const DistanceMatrix& dm, const LandmarkSet& w);

/// |{ x : d(w,x) <= k }| including w itself.
int ball_size(const DistanceMatrix& dm, VertexId w, int k);

/// 1 + k*(2k+1)^(set_size-1), saturating.
long long lemma3_bound(int k, int set_size);

/// beta * (1 + 2*5^(beta-1)), saturating. The "2*5" reading follows from the
/// radius-2 ball bound; the alternative 2.5^(beta-1) reading is reported
/// alongside for transparency (see BoundReport::alt_bound_value).
long long theorem4_bound(int beta);

struct BoundReport {
    std::string check;    // "lemma3_ball" or "theorem4_ftdim"
    int k = 0;            // radius (lemma3 checks only)
    int beta = 0;         // |W| for ball checks; metric dimension for the ftdim check
    long long bound_value = 0;
    long long observed_max = 0;
    bool holds = false;
    std::optional<VertexId> witness_vertex;      // attains observed_max (ball checks)
    std::optional<double> alt_bound_value;       // 2.5-power reading (ftdim check)
};

/// Full bound audit: metric basis via exact search, per-radius ball-size
/// checks for every landmark of that basis, then the fault-tolerant
/// dimension against its bound. Reports are ordered by check name, then k.
std::vector<BoundReport> audit_bounds(const Graph& g, const SearchBudget& budget = {});

}  // namespace mdim
