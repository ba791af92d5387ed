#include "mdim/search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mdim {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max() / 2;

std::uint64_t binom_sat(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > kSaturated) return kSaturated;
    }
    return static_cast<std::uint64_t>(r);
}

// Advance a sorted k-subset of [0, n) to its colex successor. Returns false
// when c was the last subset {n-k, ..., n-1}.
bool next_colex(std::vector<VertexId>& c, int n) {
    const int k = static_cast<int>(c.size());
    int i = 0;
    while (i + 1 < k && c[static_cast<std::size_t>(i)] + 1 == c[static_cast<std::size_t>(i) + 1]) {
        c[static_cast<std::size_t>(i)] = static_cast<VertexId>(i);
        ++i;
    }
    if (c[static_cast<std::size_t>(i)] + 1 >= (i + 1 < k ? c[static_cast<std::size_t>(i) + 1]
                                                         : static_cast<VertexId>(n)))
        return false;  // only possible for i == k-1
    ++c[static_cast<std::size_t>(i)];
    return true;
}

// Subset with the given colex rank: rank(c) = sum_i C(c[i], i+1).
void unrank_colex(std::uint64_t rank, int k, std::vector<VertexId>& c) {
    c.resize(static_cast<std::size_t>(k));
    for (int i = k; i >= 1; --i) {
        int v = i - 1;
        while (binom_sat(v + 1, i) <= rank)
            ++v;
        c[static_cast<std::size_t>(i) - 1] = static_cast<VertexId>(v);
        rank -= binom_sat(v, i);
    }
}

// Lemma-1 style filter: a resolving set must contain all but at most one
// member of every twin class; a fault-tolerant one must contain them all.
struct TwinFilter {
    std::vector<int> class_of;   // -1 for vertices in no class
    std::vector<int> class_size;
    std::uint64_t lower_bound_resolving = 0;
    std::uint64_t lower_bound_ft = 0;

    explicit TwinFilter(const DistanceMatrix& dm) {
        class_of.assign(static_cast<std::size_t>(dm.n_vertices()), -1);
        for (const auto& tc : twin_classes(dm)) {
            int id = static_cast<int>(class_size.size());
            class_size.push_back(static_cast<int>(tc.members.size()));
            for (VertexId v : tc.members)
                class_of[static_cast<std::size_t>(v)] = id;
            lower_bound_resolving += tc.members.size() - 1;
            lower_bound_ft += tc.members.size();
        }
    }

    bool admits(std::span<const VertexId> candidate, int slack,
                std::vector<int>& counts, std::vector<int>& touched) const {
        for (VertexId v : candidate) {
            int id = class_of[static_cast<std::size_t>(v)];
            if (id >= 0) {
                if (counts[static_cast<std::size_t>(id)] == 0)
                    touched.push_back(id);
                ++counts[static_cast<std::size_t>(id)];
            }
        }
        bool ok = true;
        for (std::size_t id = 0; id < class_size.size(); ++id)
            if (class_size[id] - counts[id] > slack) {
                ok = false;
                break;
            }
        for (int id : touched)
            counts[static_cast<std::size_t>(id)] = 0;
        touched.clear();
        return ok;
    }
};

// Injectivity check of gathered distance tuples. Columns for k <= 4 pack
// into one 64-bit key per vertex; larger sets fall back to an index sort
// over the raw gathered rows. Scratch buffers live per thread.
struct SignatureTester {
    const DistanceMatrix& dm;
    std::vector<std::uint64_t> keys;
    std::vector<std::uint16_t> rows;
    std::vector<VertexId> order;

    explicit SignatureTester(const DistanceMatrix& d) : dm(d) {}

    bool injective(std::span<const VertexId> w) {
        const VertexId n = dm.n_vertices();
        const std::size_t k = w.size();
        if (k == 0)
            return n <= 1;
        if (k <= 4) {
            keys.resize(static_cast<std::size_t>(n));
            for (VertexId v = 0; v < n; ++v) {
                std::uint64_t key = 0;
                for (std::size_t i = 0; i < k; ++i)
                    key = key << 16 | dm.at(v, w[i]);
                keys[static_cast<std::size_t>(v)] = key;
            }
            std::sort(keys.begin(), keys.end());
            return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
        }
        rows.resize(static_cast<std::size_t>(n) * k);
        for (VertexId v = 0; v < n; ++v)
            for (std::size_t i = 0; i < k; ++i)
                rows[static_cast<std::size_t>(v) * k + i] = dm.at(v, w[i]);
        order.resize(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        auto cmp = [&](VertexId x, VertexId y) {
            return std::lexicographical_compare(
                rows.begin() + static_cast<std::ptrdiff_t>(x * k),
                rows.begin() + static_cast<std::ptrdiff_t>((x + 1) * k),
                rows.begin() + static_cast<std::ptrdiff_t>(y * k),
                rows.begin() + static_cast<std::ptrdiff_t>((y + 1) * k));
        };
        std::sort(order.begin(), order.end(), cmp);
        for (std::size_t i = 0; i + 1 < order.size(); ++i)
            if (!cmp(order[i], order[i + 1]) && !cmp(order[i + 1], order[i]))
                return false;
        return true;
    }

    // Fault tolerance: every single-element deletion stays injective.
    bool fault_tolerant(std::span<const VertexId> w, std::vector<VertexId>& reduced) {
        reduced.resize(w.size() - 1);
        for (std::size_t skip = 0; skip < w.size(); ++skip) {
            std::size_t j = 0;
            for (std::size_t i = 0; i < w.size(); ++i)
                if (i != skip)
                    reduced[j++] = w[i];
            if (!injective(reduced))
                return false;
        }
        return true;
    }
};

struct LevelOutcome {
    std::uint64_t explored = 0;
    std::uint64_t pruned = 0;
    std::uint64_t best_rank = std::numeric_limits<std::uint64_t>::max();
    std::vector<VertexId> best;
    bool timed_out = false;
};

// Scan every k-subset of [0, n). The rank space is split into chunks; each
// chunk is unranked once and then stepped, so counters and the minimum-rank
// witness come out identical for any thread count.
template <typename Predicate>
LevelOutcome scan_level(int n, int k, std::uint64_t total, const TwinFilter& filter,
                        int slack, const DistanceMatrix& dm, Predicate&& pred,
                        Clock::time_point deadline) {
    int n_chunks = 1;
#ifdef _OPENMP
    n_chunks = static_cast<int>(
        std::min<std::uint64_t>(total, static_cast<std::uint64_t>(omp_get_max_threads()) * 8));
    n_chunks = std::max(n_chunks, 1);
#endif
    std::vector<LevelOutcome> partial(static_cast<std::size_t>(n_chunks));
    std::atomic<bool> stop{false};

#pragma omp parallel
    {
        SignatureTester tester(dm);
        std::vector<VertexId> combo, reduced;
        std::vector<int> counts(filter.class_size.size(), 0), touched;
#pragma omp for schedule(dynamic, 1)
        for (int chunk = 0; chunk < n_chunks; ++chunk) {
            LevelOutcome& out = partial[static_cast<std::size_t>(chunk)];
            const std::uint64_t begin = total / n_chunks * chunk +
                                        std::min<std::uint64_t>(total % n_chunks, chunk);
            const std::uint64_t end = total / n_chunks * (chunk + 1) +
                                      std::min<std::uint64_t>(total % n_chunks, chunk + 1);
            if (begin >= end) continue;
            unrank_colex(begin, k, combo);
            for (std::uint64_t rank = begin; rank < end; ++rank) {
                if ((rank - begin) % 1024 == 0 &&
                    (stop.load(std::memory_order_relaxed) ||
                     (deadline != Clock::time_point::max() && Clock::now() > deadline))) {
                    stop.store(true, std::memory_order_relaxed);
                    out.timed_out = true;
                    break;
                }
                if (!filter.admits(combo, slack, counts, touched)) {
                    ++out.pruned;
                } else {
                    ++out.explored;
                    if (pred(tester, combo, reduced) && rank < out.best_rank) {
                        out.best_rank = rank;
                        out.best = combo;
                    }
                }
                if (rank + 1 < end)
                    next_colex(combo, n);
            }
        }
    }

    LevelOutcome merged;
    for (auto& p : partial) {
        merged.explored += p.explored;
        merged.pruned += p.pruned;
        merged.timed_out = merged.timed_out || p.timed_out;
        if (p.best_rank < merged.best_rank) {
            merged.best_rank = p.best_rank;
            merged.best = std::move(p.best);
        }
    }
    return merged;
}

struct SearchContext {
    Clock::time_point start = Clock::now();
    std::uint64_t enumerated = 0;
    std::uint64_t explored = 0;
    std::uint64_t pruned = 0;

    SearchResult result(SearchStatus status, int dimension, LandmarkSet witness) const {
        SearchResult r;
        r.status = status;
        r.dimension = dimension;
        r.witness = std::move(witness);
        r.nodes_explored = explored;
        r.pruned_by_twins = pruned;
        r.wall_time = Clock::now() - start;
        return r;
    }
};

Clock::time_point deadline_for(const SearchBudget& budget, Clock::time_point start) {
    if (budget.max_seconds == std::numeric_limits<double>::infinity())
        return Clock::time_point::max();
    return start + std::chrono::duration_cast<Clock::duration>(
                       std::chrono::duration<double>(budget.max_seconds));
}

template <typename Predicate>
SearchResult run_search(const Graph& g, const DistanceMatrix& dm, const TwinFilter& filter,
                        int first_level, int slack, const SearchBudget& budget,
                        SearchContext& ctx, Predicate&& pred) {
    const int n = g.n_vertices();
    const auto deadline = deadline_for(budget, ctx.start);
    for (int k = first_level; k <= n; ++k) {
        const std::uint64_t total = binom_sat(n, k);
        if (total == kSaturated || total > budget.max_subsets ||
            ctx.enumerated > budget.max_subsets - total)
            return ctx.result(SearchStatus::BudgetExceeded, k, {});
        if (deadline != Clock::time_point::max() && Clock::now() > deadline)
            return ctx.result(SearchStatus::BudgetExceeded, k, {});

        auto level = scan_level(n, k, total, filter, slack, dm, pred, deadline);
        ctx.enumerated += level.explored + level.pruned;
        ctx.explored += level.explored;
        ctx.pruned += level.pruned;
        if (level.timed_out)
            return ctx.result(SearchStatus::BudgetExceeded, k, {});
        if (!level.best.empty())
            return ctx.result(SearchStatus::Found, k, std::move(level.best));
    }
    throw Error("subset search exhausted all sizes without a witness");
}

DistanceMatrix distances_checked(const Graph& g) {
    if (!is_connected(g))
        throw DisconnectedGraphError();
    return all_pairs_distances(g);
}

}  // namespace

SearchResult min_resolving_set(const Graph& g, const SearchBudget& budget) {
    SearchContext ctx;
    DistanceMatrix dm = distances_checked(g);
    TwinFilter filter(dm);
    const int first = std::max(1, static_cast<int>(filter.lower_bound_resolving));
    return run_search(g, dm, filter, first, /*slack=*/1, budget, ctx,
                      [](SignatureTester& t, std::span<const VertexId> c,
                         std::vector<VertexId>&) { return t.injective(c); });
}

SearchResult min_fault_tolerant_set(const Graph& g, const SearchBudget& budget) {
    if (g.n_vertices() < 2)
        throw TooSmallError("fault-tolerant search", g.n_vertices(), 2);
    SearchContext ctx;
    DistanceMatrix dm = distances_checked(g);
    TwinFilter filter(dm);

    const int first_res = static_cast<int>(std::max<std::uint64_t>(1, filter.lower_bound_resolving));
    SearchResult base = run_search(g, dm, filter, first_res, /*slack=*/1, budget, ctx,
                                   [](SignatureTester& t, std::span<const VertexId> c,
                                      std::vector<VertexId>&) { return t.injective(c); });
    if (base.status == SearchStatus::BudgetExceeded)
        return base;

    std::uint64_t first_ft = std::max<std::uint64_t>(
        {static_cast<std::uint64_t>(base.dimension) + 1, filter.lower_bound_ft, 2});
    first_ft = std::min<std::uint64_t>(first_ft, static_cast<std::uint64_t>(g.n_vertices()));
    return run_search(g, dm, filter, static_cast<int>(first_ft), /*slack=*/0, budget, ctx,
                      [](SignatureTester& t, std::span<const VertexId> c,
                         std::vector<VertexId>& reduced) { return t.fault_tolerant(c, reduced); });
}

namespace {

template <typename Accept>
SearchResult naive_search(const Graph& g, int first_level, Accept&& accept) {
    SearchContext ctx;
    if (!is_connected(g))
        throw DisconnectedGraphError();
    DistanceMatrix dm = all_pairs_distances_serial(g);
    const int n = g.n_vertices();
    for (int k = first_level; k <= n; ++k) {
        std::vector<VertexId> combo(static_cast<std::size_t>(k));
        std::iota(combo.begin(), combo.end(), 0);
        while (true) {
            ++ctx.explored;
            if (accept(dm, combo))
                return ctx.result(SearchStatus::Found, k, combo);
            if (!next_colex(combo, n))
                break;
        }
    }
    throw Error("subset search exhausted all sizes without a witness");
}

}  // namespace

SearchResult min_resolving_set_naive(const Graph& g) {
    return naive_search(g, 1, [](const DistanceMatrix& dm, const LandmarkSet& w) {
        return is_resolving(dm, w);
    });
}

SearchResult min_fault_tolerant_set_naive(const Graph& g) {
    if (g.n_vertices() < 2)
        throw TooSmallError("fault-tolerant search", g.n_vertices(), 2);
    return naive_search(g, 2, [](const DistanceMatrix& dm, const LandmarkSet& w) {
        return is_fault_tolerant(dm, w);
    });
}

LandmarkSet greedy_resolving_set(const Graph& g) {
    DistanceMatrix dm = distances_checked(g);
    const VertexId n = g.n_vertices();

    std::vector<std::vector<VertexId>> groups;
    if (n > 1) {
        groups.emplace_back(static_cast<std::size_t>(n));
        std::iota(groups[0].begin(), groups[0].end(), 0);
    }
    LandmarkSet chosen;
    std::vector<bool> in_set(static_cast<std::size_t>(n), false);

    auto pairs_of = [](std::size_t m) {
        return static_cast<std::uint64_t>(m) * (m - 1) / 2;
    };

    while (!groups.empty()) {
        VertexId best_v = -1;
        std::uint64_t best_gain = 0;
        std::vector<std::uint16_t> dist_sorted;
        for (VertexId v = 0; v < n; ++v) {
            if (in_set[static_cast<std::size_t>(v)]) continue;
            std::uint64_t gain = 0;
            for (const auto& grp : groups) {
                dist_sorted.clear();
                for (VertexId x : grp)
                    dist_sorted.push_back(dm.at(x, v));
                std::sort(dist_sorted.begin(), dist_sorted.end());
                gain += pairs_of(grp.size());
                std::size_t i = 0;
                while (i < dist_sorted.size()) {
                    std::size_t j = i;
                    while (j < dist_sorted.size() && dist_sorted[j] == dist_sorted[i])
                        ++j;
                    gain -= pairs_of(j - i);
                    i = j;
                }
            }
            if (gain > best_gain) {
                best_gain = gain;
                best_v = v;
            }
        }
        if (best_v < 0)
            throw Error("greedy selection stalled with unseparated pairs");

        chosen.push_back(best_v);
        in_set[static_cast<std::size_t>(best_v)] = true;
        std::vector<std::vector<VertexId>> refined;
        for (auto& grp : groups) {
            std::stable_sort(grp.begin(), grp.end(), [&](VertexId x, VertexId y) {
                return dm.at(x, best_v) < dm.at(y, best_v);
            });
            std::size_t i = 0;
            while (i < grp.size()) {
                std::size_t j = i;
                while (j < grp.size() && dm.at(grp[j], best_v) == dm.at(grp[i], best_v))
                    ++j;
                if (j - i >= 2) {
                    std::vector<VertexId> part(grp.begin() + static_cast<std::ptrdiff_t>(i),
                                               grp.begin() + static_cast<std::ptrdiff_t>(j));
                    std::sort(part.begin(), part.end());
                    refined.push_back(std::move(part));
                }
                i = j;
            }
        }
        groups = std::move(refined);
    }
    return chosen;
}

}  // namespace mdim
