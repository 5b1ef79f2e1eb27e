#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bilevel/core.hpp"
#include "bilevel/single_level.hpp"

namespace bilevel {

struct FollowerBlock {
    Weight leader_weight = 0;
    IdSet block;
};

/// Follower optimum over I_f^{j,k}: follower intervals at sorted positions
/// j+1..k that do not overlap i_j (j = 0 is the sentinel). Positions are
/// 1-based as in SortedIntervals.
FollowerBlock follower_block(const IntervalInstance& inst, const SortedIntervals& sorted, std::size_t j,
                             std::size_t k, Setting setting);

struct Choice {
    enum class Kind { Skip, Take, Block };
    Kind kind = Kind::Skip;
    std::size_t j = 0;  // last leader position for Kind::Block
};

struct DpTables {
    SortedIntervals sorted;
    Setting setting = Setting::Optimistic;
    std::vector<Weight> opt;
    std::vector<Choice> choice;
    /// Row j holds the block leader weights for every k > j; rows of
    /// follower positions stay empty.
    std::vector<std::vector<Weight>> sol_leader_weight;
};

DpTables build_tables(const IntervalInstance& inst, Setting setting);

/// Leader set from the backtracking records plus the follower's reaction to
/// it. Throws CorruptTables if the pair does not reproduce opt[n].
std::pair<IdSet, IdSet> reconstruct(const DpTables& tables, const IntervalInstance& inst, Setting setting);

/// Exact bilevel interval selection under (c_s, d_s, setting).
BilevelOutcome solve_bisel(const IntervalInstance& inst, Setting setting);

}  // namespace bilevel
