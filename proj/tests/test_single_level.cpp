#include <doctest.h>

#include "bilevel/follower.hpp"
#include "bilevel/generators.hpp"
#include "bilevel/single_level.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace bilevel;

namespace {

WeightTable follower_only(const IntervalInstance& inst) {
    WeightTable w;
    for (const auto& x : inst.intervals()) w.push_back({x.wf, 0});
    return w;
}

IdSet all_vertices(const BisGraph& g) {
    IdSet out;
    for (Id v = 0; v < static_cast<Id>(g.size()); ++v) out.push_back(v);
    return out;
}

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("sort_and_index") {
    const auto s = sort_and_index(fixtures::i1());
    CHECK(s.order == std::vector<std::size_t>{0, 1, 2});
    CHECK(s.pred == std::vector<std::size_t>{0, 0, 0, 2});

    const auto single = sort_and_index(IntervalInstance({{1, 5, 9}}));
    CHECK(single.pred == std::vector<std::size_t>{0, 0});

    const auto touch = sort_and_index(IntervalInstance({{1, 0, 3}, {2, 3, 5}}));
    CHECK(touch.pred == std::vector<std::size_t>{0, 0, 1});
}

TEST_CASE("sort_and_index invariants") {
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const auto inst = gen_random_intervals(static_cast<std::size_t>(rng.uniform(0, 15)), 10, 0.5, 5, rng.next());
        const auto s = sort_and_index(inst);
        const auto& xs = inst.intervals();
        REQUIRE(s.pred[0] == 0);
        for (std::size_t k = 1; k <= s.size(); ++k) {
            if (k > 1) REQUIRE(xs[s.order[k - 2]].end <= xs[s.order[k - 1]].end);
            const auto p = s.pred[k];
            REQUIRE(p < k);
            if (p > 0) REQUIRE(xs[s.order[p - 1]].end <= xs[s.order[k - 1]].start);
            if (p + 1 < k) REQUIRE(xs[s.order[p]].end > xs[s.order[k - 1]].start);
        }
    }
}

TEST_CASE("frank_dp examples") {
    const auto i1 = fixtures::i1();
    auto r = frank_dp(i1, follower_only(i1), {2, 3});
    CHECK(r.value == CompositeWeight{6, 0});
    CHECK(r.chosen == IdSet{2, 3});

    r = frank_dp(i1, follower_only(i1), {});
    CHECK(r.value == CompositeWeight{});
    CHECK(r.chosen.empty());

    const auto i2 = fixtures::i2();
    r = frank_dp(i2, perturb(i2, Setting::Optimistic), {1, 2});
    CHECK(r.value == CompositeWeight{2, 3});
    CHECK(r.chosen == IdSet{1});
}

TEST_CASE("frank_dp matches exhaustive search") {
    Rng rng(1);
    for (int trial = 0; trial < 500; ++trial) {
        const auto inst = gen_random_intervals(static_cast<std::size_t>(rng.uniform(0, 12)), 20, 0.5, 9, rng.next());
        const auto setting = rng.bernoulli(0.5) ? Setting::Optimistic : Setting::Pessimistic;
        const auto w = perturb(inst, setting);
        IdSet restrict;
        naive::Mask pool = 0;
        for (std::size_t i = 0; i < inst.size(); ++i) {
            if (rng.bernoulli(0.8)) {
                restrict.push_back(inst.intervals()[i].id);
                pool |= naive::Mask{1} << i;
            }
        }
        const auto r = frank_dp(inst, w, restrict);
        const auto best = naive::best_subset(naive::from_intervals(inst), pool, w, false);
        REQUIRE(r.value == *best);
        REQUIRE(intervals_pairwise_disjoint(inst, r.chosen));
        REQUIRE(std::includes(restrict.begin(), restrict.end(), r.chosen.begin(), r.chosen.end()));
        CompositeWeight recomputed;
        for (Id id : r.chosen) recomputed += w[inst.index_of(id)];
        REQUIRE(recomputed == r.value);

        // The scaled single-integer problem has the same optimum.
        const Wide base = scale_base(inst);
        REQUIRE(scaled(r.value, base) == scaled(*best, base));
    }
}

TEST_CASE("mwis_bipartite examples") {
    const auto g2 = fixtures::g2();
    WeightTable wl;
    for (const auto& v : g2.vertices()) wl.push_back({v.wl, 0});
    auto r = mwis_bipartite(g2, wl, all_vertices(g2), false);
    CHECK(r.value == CompositeWeight{7, 0});
    CHECK(r.chosen == IdSet{0, 2});

    const BisGraph one({{Owner::Follower, 0, 9}}, {});
    r = mwis_bipartite(one, {{9, 0}}, {0}, false);
    CHECK(r.value == CompositeWeight{9, 0});
    CHECK(r.chosen == IdSet{0});

    r = mwis_bipartite(g2, WeightTable(4), all_vertices(g2), true);
    CHECK(r.value == CompositeWeight{});
    CHECK(r.chosen.size() == 1);

    CHECK(code_of([&] { mwis_bipartite(g2, wl, {}, true); }) == ErrorCode::EmptyRestrict);
    const auto k3 = fixtures::k3_followers();
    CHECK(code_of([&] { mwis_bipartite(k3, WeightTable(3), {0, 1, 2}, false); }) == ErrorCode::NotBipartite);
    CHECK(mwis_bipartite(k3, WeightTable(3, {1, 0}), {0, 1}, false).value == CompositeWeight{1, 0});
}

TEST_CASE("mwis_bipartite matches exhaustive search") {
    Rng rng(2);
    for (int trial = 0; trial < 500; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 14));
        const auto g = gen_random_graph(n, rng.unit(), 0.5, 9, true, rng.next());
        const auto setting = rng.bernoulli(0.5) ? Setting::Optimistic : Setting::Pessimistic;
        const auto w = perturb(g, setting);
        IdSet restrict;
        naive::Mask pool = 0;
        for (Id v = 0; v < static_cast<Id>(n); ++v) {
            if (rng.bernoulli(0.85)) {
                restrict.push_back(v);
                pool |= naive::Mask{1} << v;
            }
        }
        const bool nonempty = !restrict.empty() && rng.bernoulli(0.3);
        const auto r = mwis_bipartite(g, w, restrict, nonempty);
        const auto best = naive::best_subset(naive::from_graph(g), pool, w, nonempty);
        REQUIRE(r.value == *best);
        REQUIRE(is_independent(g, r.chosen));
        REQUIRE(total_weight(w, r.chosen) == r.value);
        if (nonempty) REQUIRE_FALSE(r.chosen.empty());
    }
}

TEST_CASE("two_coloring") {
    CHECK(is_bipartite(fixtures::g2()));
    CHECK_FALSE(is_bipartite(fixtures::k3_followers()));
    const auto colors = two_coloring(fixtures::g2(), {0, 1, 2});
    REQUIRE(colors);
    CHECK((*colors)[0] != (*colors)[1]);
    CHECK((*colors)[3] == -1);
}
