#include "bilevel/follower.hpp"

#include <algorithm>

#include "bilevel/brute.hpp"
#include "bilevel/single_level.hpp"

namespace bilevel {

namespace {

template <class Items>
WeightTable perturb_items(const Items& items, Setting setting) {
    WeightTable out;
    out.reserve(items.size());
    for (const auto& x : items) {
        out.push_back({x.wf, setting == Setting::Optimistic ? x.wl : -x.wl});
    }
    return out;
}

WeightTable table(const BisGraph& g, Weight (*pick)(const Vertex&)) {
    WeightTable out;
    out.reserve(g.size());
    for (const auto& v : g.vertices()) out.push_back({pick(v), 0});
    return out;
}

WeightTable follower_table(const BisGraph& g) {
    return table(g, [](const Vertex& v) { return v.wf; });
}

WeightTable leader_table(const BisGraph& g) {
    return table(g, [](const Vertex& v) { return v.wl; });
}

// MWIS that falls back to exhaustive search off bipartite graphs.
SelectionResult any_mwis(const BisGraph& g, const WeightTable& w, const IdSet& restrict, bool require_nonempty) {
    if (is_bipartite(g, restrict)) return mwis_bipartite(g, w, restrict, require_nonempty);
    return brute_mwis(g, w, restrict, require_nonempty);
}

IdSet without_closed_neighborhood(const BisGraph& g, const IdSet& set, Id v) {
    IdSet out;
    for (Id u : set) {
        if (u != v && !g.adjacent(u, v)) out.push_back(u);
    }
    return out;
}

// Single vertex maximizing wf; ties by max wl (prefer_high) or min wl.
Id best_single(const BisGraph& g, const IdSet& available, bool prefer_high) {
    Id best = available.front();
    for (Id v : available) {
        const auto& x = g.vertex(v);
        const auto& b = g.vertex(best);
        if (x.wf > b.wf || (x.wf == b.wf && (prefer_high ? x.wl > b.wl : x.wl < b.wl))) best = v;
    }
    return best;
}

IdSet react_sum_available(const BisGraph& g, const IdSet& available, Setting setting, bool require_nonempty) {
    if (require_nonempty && available.empty()) fail(ErrorCode::Infeasible, "no follower vertex can react");
    return mwis_bipartite(g, perturb(g, setting), available, require_nonempty).chosen;
}

IdSet react_bottleneck_available(const BisGraph& g, const IdSet& available, LeaderSummary leader, Variant variant) {
    const bool optimistic = variant.setting == Setting::Optimistic;
    if (leader.empty) {
        if (available.empty()) fail(ErrorCode::Infeasible, "no follower vertex can react");
        if (variant.leader == Objective::Bottleneck || !optimistic) {
            // Any nonempty reaction lies in the argmax-wf class; a single
            // vertex is best (o, c_b) or worst (p) for the leader.
            return {best_single(g, available, optimistic)};
        }
        Weight top = 0;
        for (Id v : available) top = std::max(top, g.vertex(v).wf);
        IdSet pool;
        for (Id v : available)
            if (g.vertex(v).wf == top) pool.push_back(v);
        return any_mwis(g, leader_table(g), pool, true).chosen;
    }

    // (c_b, d_b, o) and (c_s, d_b, p): the empty reaction already keeps d_b
    // at its maximum and is best resp. worst for the leader.
    if (optimistic == (variant.leader == Objective::Bottleneck)) return {};
    IdSet eligible;
    for (Id v : available)
        if (g.vertex(v).wf >= leader.min_wf) eligible.push_back(v);
    if (variant.leader == Objective::Sum) return any_mwis(g, leader_table(g), eligible, false).chosen;
    if (eligible.empty()) return {};
    Id worst = eligible.front();
    for (Id v : eligible)
        if (g.vertex(v).wl < g.vertex(worst).wl) worst = v;
    return {worst};
}

IdSet react_bottleneck_leader_available(const BisGraph& g, const IdSet& available, bool leader_empty,
                                        Setting setting) {
    if (leader_empty && available.empty()) fail(ErrorCode::Infeasible, "no follower vertex can react");
    if (available.empty()) return {};
    const auto wf = follower_table(g);
    const Weight target = mwis_bipartite(g, wf, available, leader_empty).value.primary;

    if (setting == Setting::Optimistic) {
        if (!leader_empty && target == 0) return {};
        // Raise the threshold on wl as far as the follower's optimum allows.
        std::vector<Weight> thresholds;
        for (Id v : available) thresholds.push_back(g.vertex(v).wl);
        std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
        thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
        for (Weight t : thresholds) {
            IdSet high;
            for (Id v : available)
                if (g.vertex(v).wl >= t) high.push_back(v);
            auto best = mwis_bipartite(g, wf, high, leader_empty);
            if (best.value.primary == target) return best.chosen;
        }
        fail(ErrorCode::CorruptTables, "threshold scan found no optimal reaction");
    }

    // Pessimistic: the lowest-wl vertex that fits into some optimal reaction.
    IdSet by_wl = available;
    std::sort(by_wl.begin(), by_wl.end(), [&](Id a, Id b) {
        const Weight wa = g.vertex(a).wl, wb = g.vertex(b).wl;
        return wa < wb || (wa == wb && a < b);
    });
    for (Id v : by_wl) {
        const auto rest = mwis_bipartite(g, wf, without_closed_neighborhood(g, available, v), false);
        if (g.vertex(v).wf + rest.value.primary == target) {
            IdSet out = rest.chosen;
            out.insert(std::lower_bound(out.begin(), out.end(), v), v);
            return out;
        }
    }
    fail(ErrorCode::CorruptTables, "no vertex completes an optimal reaction");
}

void require_bipartite(const BisGraph& g, const IdSet& available) {
    if (!is_bipartite(g, available)) {
        fail(ErrorCode::OracleUnavailable, "available follower graph is not bipartite; use brute_follower");
    }
}

}  // namespace

WeightTable perturb(const BisGraph& g, Setting setting) { return perturb_items(g.vertices(), setting); }

WeightTable perturb(const IntervalInstance& inst, Setting setting) {
    return perturb_items(inst.intervals(), setting);
}

void check_leader_action(const BisGraph& g, const IdSet& leader) {
    for (Id v : leader) {
        if (g.owner(v) != Owner::Leader) fail(ErrorCode::InvalidInput, "vertex " + std::to_string(v) + " is not a leader vertex");
    }
    if (!std::is_sorted(leader.begin(), leader.end()) ||
        std::adjacent_find(leader.begin(), leader.end()) != leader.end()) {
        fail(ErrorCode::InvalidInput, "leader set must be sorted without duplicates");
    }
    if (!is_independent(g, leader)) fail(ErrorCode::InvalidInput, "leader set is not independent");
}

void check_leader_action(const IntervalInstance& inst, const IdSet& leader) {
    for (Id id : leader) {
        if (inst.owner(id) != Owner::Leader) fail(ErrorCode::InvalidInput, "interval " + std::to_string(id) + " is not a leader interval");
    }
    if (!intervals_pairwise_disjoint(inst, leader)) fail(ErrorCode::InvalidInput, "leader intervals overlap");
}

IdSet react_intervals(const IntervalInstance& inst, const IdSet& leader, Setting setting) {
    check_leader_action(inst, leader);
    std::vector<const Interval*> taken;
    for (Id id : leader) taken.push_back(&inst.at(id));
    IdSet available;
    for (const auto& x : inst.intervals()) {
        if (x.owner != Owner::Follower) continue;
        const bool blocked = std::any_of(taken.begin(), taken.end(), [&](const Interval* l) { return overlaps(*l, x); });
        if (!blocked) available.push_back(x.id);
    }
    return frank_dp(inst, perturb(inst, setting), available).chosen;
}

IdSet available_followers(const BisGraph& g, const IdSet& leader) {
    std::vector<bool> blocked(g.size(), false);
    for (Id v : leader)
        for (Id u : g.neighbors(v)) blocked[static_cast<std::size_t>(u)] = true;
    IdSet out;
    for (Id v : g.followers())
        if (!blocked[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

LeaderSummary summarize_leader(const BisGraph& g, const IdSet& leader) {
    LeaderSummary s;
    s.empty = leader.empty();
    if (!s.empty) s.min_wf = evaluate(Objective::Bottleneck, Role::Follower, leader, g);
    return s;
}

IdSet react_sum_graph(const BisGraph& g, const IdSet& leader, Setting setting, bool require_nonempty) {
    check_leader_action(g, leader);
    return react_sum_available(g, available_followers(g, leader), setting, require_nonempty);
}

IdSet react_bottleneck(const BisGraph& g, const IdSet& leader, Variant variant) {
    if (variant.follower != Objective::Bottleneck) fail(ErrorCode::BadParameter, "react_bottleneck needs a d_b variant");
    check_leader_action(g, leader);
    return react_bottleneck_available(g, available_followers(g, leader), summarize_leader(g, leader), variant);
}

IdSet react_bottleneck_leader(const BisGraph& g, const IdSet& leader, Setting setting) {
    check_leader_action(g, leader);
    return react_bottleneck_leader_available(g, available_followers(g, leader), leader.empty(), setting);
}

IdSet react_available(const BisGraph& g, const IdSet& available, LeaderSummary leader, Variant variant) {
    if (variant.follower == Objective::Bottleneck) return react_bottleneck_available(g, available, leader, variant);
    require_bipartite(g, available);
    if (variant.leader == Objective::Sum) return react_sum_available(g, available, variant.setting, leader.empty);
    return react_bottleneck_leader_available(g, available, leader.empty, variant.setting);
}

IdSet react(const BisGraph& g, const IdSet& leader, Variant variant) {
    check_leader_action(g, leader);
    return react_available(g, available_followers(g, leader), summarize_leader(g, leader), variant);
}

IdSet react(const IntervalInstance& inst, const IdSet& leader, Variant variant) {
    if (variant.leader != Objective::Sum || variant.follower != Objective::Sum) {
        fail(ErrorCode::OracleUnavailable, "interval oracle covers (c_s, d_s) only; use brute_follower");
    }
    return react_intervals(inst, leader, variant.setting);
}

}  // namespace bilevel
