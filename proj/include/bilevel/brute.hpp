#pragma once

#include <cstddef>

#include "bilevel/b2cnf.hpp"
#include "bilevel/core.hpp"
#include "bilevel/single_level.hpp"

namespace bilevel {

struct BruteLimits {
    std::size_t follower_cap = 22;
    std::size_t combined_cap = 16;
    /// BIS demands L u F nonempty. The interval overloads ignore this flag
    /// and never require it.
    bool require_nonempty = true;
};

/// Exhaustive follower reaction: argmax d, then max c (optimistic) or min c
/// (pessimistic), then the smallest id set.
IdSet brute_follower(const BisGraph& g, const IdSet& leader, Variant variant, const BruteLimits& limits = {});
IdSet brute_follower(const IntervalInstance& inst, const IdSet& leader, Variant variant,
                     const BruteLimits& limits = {});

BilevelOutcome brute_force(const BisGraph& g, Variant variant, const BruteLimits& limits = {});
BilevelOutcome brute_force(const IntervalInstance& inst, Variant variant, const BruteLimits& limits = {});
BilevelOutcome brute_bisel(const IntervalInstance& inst, Setting setting, const BruteLimits& limits = {});

/// Exact MWIS on g[restrict] for any graph, by branching.
SelectionResult brute_mwis(const BisGraph& g, const WeightTable& weight, const IdSet& restrict,
                           bool require_nonempty, std::size_t cap = 64);

bool decide_vc_brute(const PlainGraph& g, int k, std::size_t cap = 20);

/// True iff some X assignment leaves the formula unsatisfied for every Y.
bool decide_b2cnf_brute(const B2cnfFormula& f, std::size_t cap = 16);

}  // namespace bilevel
