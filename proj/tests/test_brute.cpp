#include <doctest.h>

#include "bilevel/brute.hpp"
#include "bilevel/generators.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace bilevel;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidInput;
}

Literal lit(Side side, int var, bool neg) { return {side, var, neg}; }

BisGraph edgeless_followers(std::size_t n) {
    return BisGraph(std::vector<Vertex>(n, Vertex{Owner::Follower, 1, 1}), {});
}

}  // namespace

TEST_CASE("brute_follower examples") {
    CHECK(brute_follower(fixtures::g1(), {}, Variant::parse("cs-ds-p")) == IdSet{1});
    CHECK(brute_follower(fixtures::i2(), {}, Variant::parse("cs-ds-o")) == IdSet{1});
    CHECK(brute_follower(fixtures::g2(), {0, 2}, Variant::parse("cs-ds-o")).empty());
    CHECK(code_of([] { brute_follower(BisGraph({{Owner::Leader, 1, 1}}, {}), {}, Variant::parse("cs-ds-o")); }) ==
          ErrorCode::Infeasible);
    CHECK(code_of([] { brute_follower(edgeless_followers(23), {}, Variant::parse("cs-ds-o")); }) ==
          ErrorCode::CapExceeded);
}

TEST_CASE("brute_force examples") {
    const auto a = brute_force(fixtures::g1(), Variant::parse("cs-ds-o"));
    CHECK(a.leader_value == 7);
    CHECK(a.leader_set == IdSet{0, 2});
    CHECK(a.follower_set.empty());
    const auto b = brute_force(fixtures::g1(), Variant::parse("cb-db-p"));
    CHECK(b.leader_value == 5);
    CHECK(b.leader_set == IdSet{0});
    const auto c = brute_force(BisGraph({{Owner::Follower, 0, 1}}, {}), Variant::parse("cb-db-o"));
    CHECK(c.leader_value == 0);
    CHECK(c.leader_set.empty());
    CHECK(c.follower_set == IdSet{0});
    CHECK(code_of([] { brute_force(BisGraph{}, Variant::parse("cs-ds-o")); }) == ErrorCode::Infeasible);
    CHECK(code_of([] { brute_force(edgeless_followers(17), Variant::parse("cs-ds-o")); }) == ErrorCode::CapExceeded);
}

TEST_CASE("brute_bisel examples") {
    CHECK(brute_bisel(fixtures::i1(), Setting::Optimistic).leader_value == 6);
    CHECK(brute_bisel(fixtures::i2(), Setting::Pessimistic).leader_value == 0);
    const auto e = brute_bisel(IntervalInstance{}, Setting::Pessimistic);
    CHECK(e.leader_value == 0);
    CHECK(e.leader_set.empty());
    CHECK(e.follower_set.empty());
}

TEST_CASE("brute_mwis") {
    const auto k3 = fixtures::k3_followers();
    const WeightTable w{{3, 0}, {5, 0}, {4, 0}};
    const auto r = brute_mwis(k3, w, {0, 1, 2}, false);
    CHECK(r.value == CompositeWeight{5, 0});
    CHECK(r.chosen == IdSet{1});
    const WeightTable zero{{0, 0}, {0, 0}, {0, 0}};
    CHECK(brute_mwis(k3, zero, {0, 1, 2}, false).chosen.empty());
    CHECK(brute_mwis(k3, zero, {0, 1, 2}, true).chosen.size() == 1);
    CHECK(code_of([&] { brute_mwis(k3, w, {}, true); }) == ErrorCode::EmptyRestrict);
}

TEST_CASE("decide_vc_brute") {
    CHECK_FALSE(decide_vc_brute(fixtures::k3(), 1));
    CHECK(decide_vc_brute(fixtures::k3(), 2));
    CHECK(decide_vc_brute(PlainGraph(4, {}), 0));
    CHECK(code_of([] { decide_vc_brute(PlainGraph(21, {}), 1); }) == ErrorCode::CapExceeded);
}

TEST_CASE("decide_b2cnf_brute") {
    // x1 = true leaves (~y1 v ~y1), which y1 = false satisfies, so no X
    // assignment defeats every Y.
    CHECK_FALSE(decide_b2cnf_brute({1, 1, {{lit(Side::X, 1, true), lit(Side::Y, 1, true), lit(Side::Y, 1, true)}}}));
    CHECK_FALSE(decide_b2cnf_brute({1, 1, {{lit(Side::X, 1, false), lit(Side::Y, 1, false), lit(Side::Y, 1, false)}}}));
    // A pure-X clause is falsified by X alone.
    CHECK(decide_b2cnf_brute({1, 1, {{lit(Side::X, 1, false), lit(Side::X, 1, false), lit(Side::X, 1, false)}}}));
    // (y1 v y1 v y1) and (~y1 v ~y1 v ~y1) cannot both hold.
    CHECK(decide_b2cnf_brute({1, 1,
                              {{lit(Side::Y, 1, false), lit(Side::Y, 1, false), lit(Side::Y, 1, false)},
                               {lit(Side::Y, 1, true), lit(Side::Y, 1, true), lit(Side::Y, 1, true)}}}));
    CHECK_FALSE(decide_b2cnf_brute({1, 1, {}}));
    CHECK(code_of([] { decide_b2cnf_brute({1, 1, {{lit(Side::X, 1, false), lit(Side::Y, 1, false)}}}); }) ==
          ErrorCode::MalformedClause);
    CHECK(code_of([] {
              decide_b2cnf_brute({1, 1, {{lit(Side::X, 2, false), lit(Side::Y, 1, false), lit(Side::Y, 1, false)}}});
          }) == ErrorCode::MalformedClause);
    CHECK(code_of([] { decide_b2cnf_brute({9, 8, {}}); }) == ErrorCode::CapExceeded);
}

TEST_CASE("brute_follower is optimal against a second enumeration") {
    Rng rng(91);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto g = gen_random_graph(static_cast<std::size_t>(rng.uniform(1, 10)), rng.unit() * 0.6, rng.unit(), 5,
                                        false, rng.next());
        const auto in = naive::from_graph(g);
        IdSet leader;
        for (Id v : g.leaders())
            if (rng.bernoulli(0.5) && is_independent(g, set_union(leader, {v}))) leader = set_union(leader, {v});
        const auto v = all_variants()[rng.below(8)];
        const auto expect = naive::follower(in, naive::mask_of(leader), v);
        if (!expect) {
            REQUIRE(code_of([&] { brute_follower(g, leader, v); }) == ErrorCode::Infeasible);
            continue;
        }
        const auto f = brute_follower(g, leader, v);
        const auto all = set_union(leader, f);
        REQUIRE(evaluate(v.follower, Role::Follower, all, g) == expect->d);
        REQUIRE(evaluate(v.leader, Role::Leader, all, g) == expect->c);
        ++checked;
    }
    CHECK(checked > 200);
}

TEST_CASE("brute_force matches the bitmask oracle") {
    Rng rng(101);
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = gen_random_graph(static_cast<std::size_t>(rng.uniform(0, 9)), rng.unit() * 0.6, rng.unit(), 5,
                                        false, rng.next());
        for (const auto& v : all_variants()) {
            const auto expect = naive::bilevel(naive::from_graph(g), v);
            if (!expect) {
                REQUIRE(code_of([&] { brute_force(g, v); }) == ErrorCode::Infeasible);
                continue;
            }
            REQUIRE(brute_force(g, v).leader_value == *expect);
        }
    }
}

TEST_CASE("interval graphs without the nonemptiness rule match brute_bisel") {
    Rng rng(111);
    BruteLimits relaxed;
    relaxed.require_nonempty = false;
    for (int trial = 0; trial < 200; ++trial) {
        const auto inst = gen_random_intervals(static_cast<std::size_t>(rng.uniform(0, 9)), 20, rng.unit(), 9, rng.next());
        const auto g = to_interval_graph(inst);
        for (Setting s : {Setting::Optimistic, Setting::Pessimistic}) {
            const Variant v{Objective::Sum, Objective::Sum, s};
            REQUIRE(brute_force(g, v, relaxed).leader_value == brute_bisel(inst, s).leader_value);
            REQUIRE(brute_force(inst, v).leader_value == brute_bisel(inst, s).leader_value);
        }
    }
}
