#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "bilevel/core.hpp"

namespace bilevel {

/// mt19937_64 with hand-written draws, so streams agree across standard
/// libraries (the std distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n), n > 0, by rejection.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return unit() < p; }

    template <class T>
    void shuffle(std::vector<T>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

BisGraph gen_random_graph(std::size_t n, double edge_prob, double leader_fraction, Weight max_weight, bool bipartite,
                          std::uint64_t seed);

/// Intervals get ids 0..n-1 and endpoints 0 <= start < end <= coord_max.
IntervalInstance gen_random_intervals(std::size_t n, Coord coord_max, double leader_fraction, Weight max_weight,
                                      std::uint64_t seed);

struct BenchRow {
    std::size_t n = 0;
    double milliseconds = 0;
};

/// Times solve_bisel (optimistic) on one random instance per size.
std::vector<BenchRow> bench_dp(const std::vector<std::size_t>& sizes, std::uint64_t seed);

}  // namespace bilevel
