#pragma once

#include "bilevel/core.hpp"

namespace bilevel {

/// (wf, +wl) when optimistic, (wf, -wl) when pessimistic.
WeightTable perturb(const BisGraph& g, Setting setting);
WeightTable perturb(const IntervalInstance& inst, Setting setting);

/// Follower reaction for BISel under (c_s, d_s, setting). May be empty.
IdSet react_intervals(const IntervalInstance& inst, const IdSet& leader, Setting setting);

/// Follower reaction under (c_s, d_s, setting) on graphs: a perturbed MWIS
/// of the follower vertices outside N(L).
IdSet react_sum_graph(const BisGraph& g, const IdSet& leader, Setting setting, bool require_nonempty);

/// Closed-form reactions for the four d_b variants.
IdSet react_bottleneck(const BisGraph& g, const IdSet& leader, Variant variant);

/// Reaction under (c_b, d_s, setting); needs g[V_f \ N(L)] bipartite.
IdSet react_bottleneck_leader(const BisGraph& g, const IdSet& leader, Setting setting);

/// The part of L a reaction depends on besides the available followers.
struct LeaderSummary {
    bool empty = true;
    Weight min_wf = 0;
};

LeaderSummary summarize_leader(const BisGraph& g, const IdSet& leader);

/// Follower vertices not adjacent to any vertex of L.
IdSet available_followers(const BisGraph& g, const IdSet& leader);

/// Reaction given the available follower set directly. Throws Infeasible
/// when the leader set is empty and no follower vertex is available.
IdSet react_available(const BisGraph& g, const IdSet& available, LeaderSummary leader, Variant variant);

/// Dispatches to the matching oracle. d_s variants need g[V_f \ N(L)]
/// bipartite and throw OracleUnavailable otherwise.
IdSet react(const BisGraph& g, const IdSet& leader, Variant variant);

/// Only (c_s, d_s, *) has an interval oracle; other variants throw
/// OracleUnavailable.
IdSet react(const IntervalInstance& inst, const IdSet& leader, Variant variant);

/// Checks that L is an independent set of leader vertices.
void check_leader_action(const BisGraph& g, const IdSet& leader);
void check_leader_action(const IntervalInstance& inst, const IdSet& leader);

}  // namespace bilevel
