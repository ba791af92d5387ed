#pragma once

#include <chrono>
#include <cstdint>
#include <limits>

#include "mdim/resolving.hpp"

namespace mdim {

enum class SearchStatus { Found, BudgetExceeded };

struct SearchBudget {
    std::uint64_t max_subsets = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();
};

struct SearchResult {
    SearchStatus status = SearchStatus::Found;
    int dimension = 0;
    LandmarkSet witness;                 // colex-least witness of minimum size
    std::uint64_t nodes_explored = 0;    // candidates that reached the full predicate
    std::uint64_t pruned_by_twins = 0;   // candidates rejected by the twin filter
    std::chrono::duration<double> wall_time{0};
};

/// Exact metric dimension by level-wise subset enumeration in colex order.
/// Level k starts at the twin lower bound max(1, sum(|T|-1)); candidates
/// leaving two or more members of a twin class uncovered are pruned before
/// the injectivity test. Each level is scanned fully (OpenMP across colex
/// rank ranges) so counters and the colex-least witness are independent of
/// thread count.
SearchResult min_resolving_set(const Graph& g, const SearchBudget& budget = {});

/// Exact fault-tolerant metric dimension. Levels start at dim(G)+1; the twin
/// filter requires every twin class entirely inside the candidate.
SearchResult min_fault_tolerant_set(const Graph& g, const SearchBudget& budget = {});

/// Serial unpruned reference implementations. Deliberately built on the
/// plain resolving predicates, with their own combination stepper, so they
/// can serve as an independent oracle for the pruned kernels (and as the
/// baseline in the benchmark target).
SearchResult min_resolving_set_naive(const Graph& g);
SearchResult min_fault_tolerant_set_naive(const Graph& g);

/// Upper-bound heuristic: repeatedly add the vertex separating the most
/// still-unseparated pairs (ties to the least id). Always returns a
/// resolving set.
LandmarkSet greedy_resolving_set(const Graph& g);

}  // namespace mdim
