#include "bilevel/generators.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "bilevel/interval_dp.hpp"

namespace bilevel {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) fail(ErrorCode::BadParameter, "empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % n;
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) fail(ErrorCode::BadParameter, "empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo);
    if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(next());
    return lo + static_cast<std::int64_t>(below(span + 1));
}

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::BadParameter, std::string(what) + " must lie in [0, 1]");
}

void check_weight_bound(Weight max_weight) {
    if (max_weight < 0 || max_weight > kMaxWeight) fail(ErrorCode::BadParameter, "max_weight outside [0, 2^40]");
}

}  // namespace

BisGraph gen_random_graph(std::size_t n, double edge_prob, double leader_fraction, Weight max_weight, bool bipartite,
                          std::uint64_t seed) {
    check_probability(edge_prob, "edge_prob");
    check_probability(leader_fraction, "leader_fraction");
    check_weight_bound(max_weight);
    if (n > kMaxItems) fail(ErrorCode::BadParameter, "too many vertices");
    Rng rng(seed);
    std::vector<Vertex> vertices(n);
    for (auto& v : vertices) {
        v.owner = rng.bernoulli(leader_fraction) ? Owner::Leader : Owner::Follower;
        v.wl = rng.uniform(0, max_weight);
        v.wf = rng.uniform(0, max_weight);
    }
    std::vector<int> side(n, 0);
    if (bipartite) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        rng.shuffle(perm);
        for (std::size_t i = 0; i < n / 2; ++i) side[perm[i]] = 1;
    }
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (bipartite && side[u] == side[v]) continue;
            if (rng.bernoulli(edge_prob)) edges.emplace_back(static_cast<Id>(u), static_cast<Id>(v));
        }
    }
    return BisGraph(std::move(vertices), std::move(edges));
}

IntervalInstance gen_random_intervals(std::size_t n, Coord coord_max, double leader_fraction, Weight max_weight,
                                      std::uint64_t seed) {
    if (coord_max < 1) fail(ErrorCode::BadParameter, "coord_max must be at least 1");
    check_probability(leader_fraction, "leader_fraction");
    check_weight_bound(max_weight);
    if (n > kMaxItems) fail(ErrorCode::BadParameter, "too many intervals");
    Rng rng(seed);
    std::vector<Interval> xs(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& x = xs[i];
        x.id = static_cast<Id>(i);
        x.start = rng.uniform(0, coord_max - 1);
        x.end = rng.uniform(x.start + 1, coord_max);
        x.owner = rng.bernoulli(leader_fraction) ? Owner::Leader : Owner::Follower;
        x.wl = rng.uniform(0, max_weight);
        x.wf = rng.uniform(0, max_weight);
    }
    return IntervalInstance(std::move(xs));
}

std::vector<BenchRow> bench_dp(const std::vector<std::size_t>& sizes, std::uint64_t seed) {
    if (!std::is_sorted(sizes.begin(), sizes.end())) fail(ErrorCode::BadParameter, "sizes must be ascending");
    std::vector<BenchRow> rows;
    for (std::size_t n : sizes) {
        const auto inst = gen_random_intervals(n, static_cast<Coord>(2 * n + 2), 0.5, 100, seed + n);
        const auto t0 = std::chrono::steady_clock::now();
        const auto outcome = solve_bisel(inst, Setting::Optimistic);
        const auto t1 = std::chrono::steady_clock::now();
        (void)outcome;
        rows.push_back({n, std::chrono::duration<double, std::milli>(t1 - t0).count()});
    }
    return rows;
}

}  // namespace bilevel
