#include <doctest.h>

#include "bilevel/bis_solvers.hpp"
#include "bilevel/brute.hpp"
#include "bilevel/follower.hpp"
#include "bilevel/generators.hpp"
#include "bilevel/single_level.hpp"
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

void check_outcome(const BisGraph& g, Variant v, const BilevelOutcome& o) {
    for (Id x : o.leader_set) REQUIRE(g.owner(x) == Owner::Leader);
    for (Id x : o.follower_set) REQUIRE(g.owner(x) == Owner::Follower);
    const auto all = set_union(o.leader_set, o.follower_set);
    REQUIRE_FALSE(all.empty());
    REQUIRE(is_independent(g, all));
    REQUIRE(o.leader_value == evaluate(v.leader, Role::Leader, all, g));
    REQUIRE(o.follower_value == evaluate(v.follower, Role::Follower, all, g));
}

std::optional<Weight> naive_value(const BisGraph& g, Variant v) { return naive::bilevel(naive::from_graph(g), v); }

}  // namespace

TEST_CASE("solve_cb_db_o examples") {
    const auto o = solve_cb_db_o(fixtures::g1());
    CHECK(o.leader_value == 5);
    CHECK(o.leader_set == IdSet{0});
    CHECK(o.follower_set.empty());
    const auto f = solve_cb_db_o(BisGraph({{Owner::Follower, 9, 1}}, {}));
    CHECK(f.leader_value == 9);
    CHECK(f.follower_set == IdSet{0});
    const auto l = solve_cb_db_o(BisGraph({{Owner::Leader, 9, 1}}, {}));
    CHECK(l.leader_value == 9);
    CHECK(l.leader_set == IdSet{0});
    CHECK(code_of([] { solve_cb_db_o(BisGraph{}); }) == ErrorCode::Infeasible);
}

TEST_CASE("solve_cs_db_o_bipartite examples") {
    const auto o = solve_cs_db_o_bipartite(fixtures::g2());
    CHECK(o.leader_value == 7);
    CHECK(o.leader_set == IdSet{0, 2});
    CHECK(o.follower_set.empty());
    const auto p = solve_cs_db_o_bipartite(fixtures::g1());
    CHECK(p.leader_value == 7);
    CHECK(p.leader_set == IdSet{0, 2});
    CHECK(solve_cs_db_o_bipartite(BisGraph({{Owner::Follower, 4, 4}}, {})).leader_value == 4);
    CHECK(code_of([] { solve_cs_db_o_bipartite(fixtures::k3_followers()); }) == ErrorCode::NotBipartite);
    CHECK(code_of([] { solve_cs_db_o_bipartite(BisGraph{}); }) == ErrorCode::Infeasible);
}

TEST_CASE("solve_cs_db_p_bipartite examples") {
    const auto o = solve_cs_db_p_bipartite(fixtures::g2());
    CHECK(o.leader_value == 7);
    CHECK(o.leader_set == IdSet{0, 2});
    const auto f = solve_cs_db_p_bipartite(BisGraph({{Owner::Follower, 3, 5}, {Owner::Follower, 0, 5}}, {}));
    CHECK(f.leader_value == 0);
    CHECK(f.follower_set == IdSet{1});
    CHECK(solve_cs_db_p_bipartite(BisGraph({{Owner::Leader, 2, 0}}, {})).leader_value == 2);
    CHECK(code_of([] { solve_cs_db_p_bipartite(BisGraph{}); }) == ErrorCode::Infeasible);
}

TEST_CASE("solve_enum_leader examples") {
    const auto g2 = fixtures::g2();
    const auto v = Variant::parse("cs-ds-o");
    CHECK(solve_enum_leader(g2, v).leader_value == brute_force(g2, v).leader_value);
    const auto o = solve_enum_leader(fixtures::g1(), Variant::parse("cb-db-p"));
    CHECK(o.leader_value == 5);
    CHECK(o.leader_set == IdSet{0});
    CHECK(code_of([] { solve_enum_leader(BisGraph{}, Variant::parse("cs-db-o")); }) == ErrorCode::Infeasible);
    CHECK(code_of([] { solve_enum_leader(fixtures::k3_followers(), Variant::parse("cs-ds-o")); }) ==
          ErrorCode::OracleUnavailable);
}

TEST_CASE("verify_certificate") {
    const auto g1 = fixtures::g1();
    CHECK(verify_certificate(g1, Variant::parse("cb-db-p"), {0}, 5));
    CHECK_FALSE(verify_certificate(g1, Variant::parse("cb-db-p"), {0}, 6));
    CHECK(verify_certificate(fixtures::g2(), Variant::parse("cs-db-o"), {0, 2}, 7));
    const BisGraph lonely({{Owner::Leader, 1, 1}}, {});
    CHECK_FALSE(verify_certificate(lonely, Variant::parse("cs-ds-o"), {}, 0));
    // No oracle for d_s off bipartite graphs: falls back to exhaustive search.
    const BisGraph tri({{Owner::Leader, 4, 0}, {Owner::Follower, 1, 1}, {Owner::Follower, 1, 1}, {Owner::Follower, 1, 1}},
                       {{1, 2}, {2, 3}, {1, 3}});
    CHECK(verify_certificate(tri, Variant::parse("cs-ds-o"), {0}, 5));
    CHECK_FALSE(verify_certificate(tri, Variant::parse("cs-ds-o"), {0}, 6));
}

TEST_CASE("polynomial solvers match exhaustive search") {
    Rng rng(61);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 11));
        const Weight w = rng.bernoulli(0.5) ? 3 : 9;
        const auto general = gen_random_graph(n, rng.unit() * 0.7, rng.unit(), w, false, rng.next());
        const auto bip = gen_random_graph(n, rng.unit() * 0.7, rng.unit(), w, true, rng.next());

        const auto v1 = Variant::parse("cb-db-o");
        const auto a = solve_cb_db_o(general);
        check_outcome(general, v1, a);
        REQUIRE(a.leader_value == *naive_value(general, v1));

        const auto v2 = Variant::parse("cs-db-o");
        const auto b = solve_cs_db_o_bipartite(bip);
        check_outcome(bip, v2, b);
        REQUIRE(b.leader_value == *naive_value(bip, v2));

        const auto v3 = Variant::parse("cs-db-p");
        const auto c = solve_cs_db_p_bipartite(bip);
        check_outcome(bip, v3, c);
        REQUIRE(c.leader_value == *naive_value(bip, v3));
    }
}

TEST_CASE("enumeration matches exhaustive search") {
    Rng rng(71);
    for (int trial = 0; trial < 150; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(0, 11));
        const bool bipartite = rng.bernoulli(0.5);
        const auto g = gen_random_graph(n, rng.unit() * 0.6, rng.unit(), rng.bernoulli(0.5) ? 3 : 9, bipartite, rng.next());
        for (const auto& v : all_variants()) {
            if (v.follower == Objective::Sum && !is_bipartite(g, g.followers())) continue;
            const auto expect = naive_value(g, v);
            if (!expect) {
                REQUIRE(code_of([&] { solve_enum_leader(g, v); }) == ErrorCode::Infeasible);
                continue;
            }
            const auto out = solve_enum_leader(g, v);
            check_outcome(g, v, out);
            REQUIRE(out.leader_value == *expect);
            REQUIRE(solve(g, v).leader_value == *expect);
        }
    }
}

TEST_CASE("threaded enumeration is deterministic") {
    Rng rng(81);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = gen_random_graph(12, 0.25, 0.6, 5, true, rng.next());
        for (const auto& v : all_variants()) {
            BilevelOutcome seq;
            try {
                seq = solve_enum_leader(g, v);
            } catch (const Error& e) {
                REQUIRE(e.code() == ErrorCode::Infeasible);
                continue;
            }
            for (unsigned threads : {2u, 3u}) REQUIRE(solve_enum_leader(g, v, {threads}) == seq);
        }
    }
}
