#include "mdim/ft_construct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mdim {

std::vector<VertexId> t_set(const Graph& g, VertexId w) {
    g.check_vertex(w);
    auto nw = g.neighbors(w);
    std::vector<VertexId> out;
    for (VertexId x = 0; x < g.n_vertices(); ++x) {
        auto nx = g.neighbors(x);
        if (std::includes(nx.begin(), nx.end(), nw.begin(), nw.end()))
            out.push_back(x);
    }
    return out;
}

LandmarkSet ft_from_resolving(const Graph& g, const DistanceMatrix& dm, const LandmarkSet& w) {
    if (!is_resolving(dm, w))
        throw NotResolvingError(LandmarkSet(w));

    LandmarkSet prime;
    for (VertexId v : w) {
        auto closed = closed_neighborhood(g, v);
        prime.insert(prime.end(), closed.begin(), closed.end());
        auto t = t_set(g, v);
        prime.insert(prime.end(), t.begin(), t.end());
    }
    std::sort(prime.begin(), prime.end());
    prime.erase(std::unique(prime.begin(), prime.end()), prime.end());

    // Verify before handing the set back; a failing deletion is evidence
    // against the construction and must carry enough context to reproduce.
    LandmarkSet reduced;
    for (std::size_t skip = 0; skip < prime.size(); ++skip) {
        reduced.clear();
        for (std::size_t i = 0; i < prime.size(); ++i)
            if (i != skip)
                reduced.push_back(prime[i]);
        if (!is_resolving(dm, reduced))
            throw LemmaViolationError(LandmarkSet(w), prime, prime[skip]);
    }
    return prime;
}

int ball_size(const DistanceMatrix& dm, VertexId w, int k) {
    if (k < 0)
        throw Error("ball radius must be non-negative");
    if (w < 0 || w >= dm.n_vertices())
        throw VertexOutOfRangeError(w, dm.n_vertices());
    int count = 0;
    for (std::uint16_t d : dm.row(w))
        if (d != DistanceMatrix::UNREACHABLE && d <= k)
            ++count;
    return count;
}

namespace {

long long pow_sat(long long base, int exp) {
    constexpr long long cap = std::numeric_limits<long long>::max();
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / base) return cap;
        r *= base;
    }
    return r;
}

long long mul_sat(long long a, long long b) {
    constexpr long long cap = std::numeric_limits<long long>::max();
    if (a != 0 && b > cap / a) return cap;
    return a * b;
}

}  // namespace

long long lemma3_bound(int k, int set_size) {
    if (k < 1 || set_size < 1)
        throw Error("lemma3_bound requires k >= 1 and set_size >= 1");
    long long p = pow_sat(2ll * k + 1, set_size - 1);
    long long kp = mul_sat(k, p);
    return kp == std::numeric_limits<long long>::max() ? kp : 1 + kp;
}

long long theorem4_bound(int beta) {
    if (beta < 1)
        throw Error("theorem4_bound requires beta >= 1");
    long long inner = mul_sat(2, pow_sat(5, beta - 1));
    if (inner == std::numeric_limits<long long>::max()) return inner;
    return mul_sat(beta, 1 + inner);
}

std::vector<BoundReport> audit_bounds(const Graph& g, const SearchBudget& budget) {
    if (!is_connected(g))
        throw DisconnectedGraphError();
    DistanceMatrix dm = all_pairs_distances(g);

    SearchResult basis = min_resolving_set(g, budget);
    if (basis.status == SearchStatus::BudgetExceeded)
        throw BudgetExceededError();
    const int beta = basis.dimension;

    std::vector<BoundReport> reports;
    const int diameter = dm.max_finite_distance();
    for (int k = 1; k <= diameter; ++k) {
        BoundReport r;
        r.check = "lemma3_ball";
        r.k = k;
        r.beta = beta;
        r.bound_value = lemma3_bound(k, static_cast<int>(basis.witness.size()));
        r.observed_max = 0;
        for (VertexId w : basis.witness) {
            int b = ball_size(dm, w, k);
            if (b > r.observed_max) {
                r.observed_max = b;
                r.witness_vertex = w;
            }
        }
        r.holds = r.observed_max <= r.bound_value;
        reports.push_back(std::move(r));
    }

    SearchResult ft = min_fault_tolerant_set(g, budget);
    if (ft.status == SearchStatus::BudgetExceeded)
        throw BudgetExceededError();
    BoundReport t4;
    t4.check = "theorem4_ftdim";
    t4.k = 0;
    t4.beta = beta;
    t4.bound_value = theorem4_bound(beta);
    t4.observed_max = ft.dimension;
    t4.holds = t4.observed_max <= t4.bound_value;
    t4.alt_bound_value = beta * (1.0 + std::pow(2.5, beta - 1));
    reports.push_back(std::move(t4));

    return reports;
}

}  // namespace mdim
