#include "bilevel/interval_dp.hpp"

#include <algorithm>

#include "bilevel/follower.hpp"

namespace bilevel {

namespace {

const Interval& at_position(const IntervalInstance& inst, const SortedIntervals& sorted, std::size_t k) {
    return inst.intervals()[sorted.order[k - 1]];
}

bool in_block(const IntervalInstance& inst, const SortedIntervals& sorted, std::size_t j, std::size_t q) {
    const auto& x = at_position(inst, sorted, q);
    if (x.owner != Owner::Follower) return false;
    return j == 0 || !overlaps(x, at_position(inst, sorted, j));
}

// Leader weights of the follower optimum over I_f^{j,k} for all k > j at
// once: Frank's recursion run over the block candidates in sorted order.
std::vector<Weight> block_row(const IntervalInstance& inst, const SortedIntervals& sorted, const WeightTable& w,
                              std::size_t j, Setting setting) {
    const std::size_t n = sorted.size();
    std::vector<Weight> row(n + 1, 0);
    std::vector<Coord> ends;
    std::vector<CompositeWeight> best{CompositeWeight{}};
    for (std::size_t q = j + 1; q <= n; ++q) {
        if (in_block(inst, sorted, j, q)) {
            const auto& x = at_position(inst, sorted, q);
            const auto p = static_cast<std::size_t>(std::upper_bound(ends.begin(), ends.end(), x.start) - ends.begin());
            const CompositeWeight with = best[p] + w[sorted.order[q - 1]];
            best.push_back(std::max(best.back(), with));
            ends.push_back(x.end);
        }
        const Weight secondary = best.back().secondary;
        row[q] = setting == Setting::Optimistic ? secondary : -secondary;
    }
    return row;
}

}  // namespace

FollowerBlock follower_block(const IntervalInstance& inst, const SortedIntervals& sorted, std::size_t j,
                             std::size_t k, Setting setting) {
    if (k > sorted.size() || j >= k) {
        fail(ErrorCode::IndexOutOfRange, "follower block needs 0 <= j < k <= n, got j=" + std::to_string(j) +
                                             " k=" + std::to_string(k));
    }
    IdSet candidates;
    for (std::size_t q = j + 1; q <= k; ++q) {
        if (in_block(inst, sorted, j, q)) candidates.push_back(at_position(inst, sorted, q).id);
    }
    std::sort(candidates.begin(), candidates.end());
    auto best = frank_dp(inst, perturb(inst, setting), candidates);
    FollowerBlock out;
    out.leader_weight = evaluate(Objective::Sum, Role::Leader, best.chosen, inst);
    out.block = std::move(best.chosen);
    return out;
}

DpTables build_tables(const IntervalInstance& inst, Setting setting) {
    DpTables t;
    t.sorted = sort_and_index(inst);
    t.setting = setting;
    const std::size_t n = t.sorted.size();
    const auto& pred = t.sorted.pred;
    const auto w = perturb(inst, setting);
    t.opt.assign(n + 1, 0);
    t.choice.assign(n + 1, Choice{});
    t.sol_leader_weight.assign(n + 1, {});

    std::vector<std::size_t> leaders_before{0};
    auto row = [&](std::size_t j) -> const std::vector<Weight>& {
        auto& r = t.sol_leader_weight[j];
        if (r.empty()) r = block_row(inst, t.sorted, w, j, setting);
        return r;
    };

    for (std::size_t k = 1; k <= n; ++k) {
        const auto& x = at_position(inst, t.sorted, k);
        if (x.owner == Owner::Leader) {
            const Weight take = x.wl + t.opt[pred[k]];
            if (take > t.opt[k - 1]) {
                t.opt[k] = take;
                t.choice[k] = {Choice::Kind::Take, k};
            } else {
                t.opt[k] = t.opt[k - 1];
                t.choice[k] = {Choice::Kind::Skip, 0};
            }
            leaders_before.push_back(k);
            continue;
        }
        bool first = true;
        for (std::size_t j : leaders_before) {
            const Weight lead = j == 0 ? 0 : t.opt[pred[j]] + at_position(inst, t.sorted, j).wl;
            const Weight value = lead + row(j)[k];
            if (first || value > t.opt[k]) {
                t.opt[k] = value;
                t.choice[k] = {Choice::Kind::Block, j};
                first = false;
            }
        }
    }
    return t;
}

std::pair<IdSet, IdSet> reconstruct(const DpTables& tables, const IntervalInstance& inst, Setting setting) {
    const auto& sorted = tables.sorted;
    const std::size_t n = sorted.size();
    if (tables.opt.size() != n + 1 || tables.choice.size() != n + 1 || n != inst.size()) {
        fail(ErrorCode::CorruptTables, "table sizes do not match the instance");
    }
    IdSet leader;
    std::size_t k = n;
    while (k > 0) {
        const auto& c = tables.choice[k];
        const auto& x = at_position(inst, sorted, k);
        switch (c.kind) {
            case Choice::Kind::Skip:
                --k;
                break;
            case Choice::Kind::Take:
                if (x.owner != Owner::Leader) fail(ErrorCode::CorruptTables, "take record on a follower interval");
                leader.push_back(x.id);
                k = sorted.pred[k];
                break;
            case Choice::Kind::Block:
                if (c.j >= k) fail(ErrorCode::CorruptTables, "block record points forward");
                if (c.j == 0) {
                    k = 0;
                    break;
                }
                if (at_position(inst, sorted, c.j).owner != Owner::Leader) {
                    fail(ErrorCode::CorruptTables, "block record names a follower interval");
                }
                leader.push_back(at_position(inst, sorted, c.j).id);
                k = sorted.pred[c.j];
                break;
        }
    }
    leader = make_id_set(std::move(leader));
    IdSet follower = react_intervals(inst, leader, setting);
    const Weight value = evaluate(Objective::Sum, Role::Leader, set_union(leader, follower), inst);
    if (value != tables.opt[n]) {
        fail(ErrorCode::CorruptTables, "witness value " + std::to_string(value) + " differs from opt[n] = " +
                                           std::to_string(tables.opt[n]));
    }
    return {std::move(leader), std::move(follower)};
}

BilevelOutcome solve_bisel(const IntervalInstance& inst, Setting setting) {
    const auto tables = build_tables(inst, setting);
    auto [leader, follower] = reconstruct(tables, inst, setting);
    return make_outcome(inst, Variant{Objective::Sum, Objective::Sum, setting}, std::move(leader),
                        std::move(follower));
}

}  // namespace bilevel
