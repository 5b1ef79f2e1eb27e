#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bilevel/core.hpp"

namespace bilevel {

/// Intervals in end-point order. `order[k-1]` is the instance index of the
/// k-th interval i_k; `pred[k]` is p(k), the number of intervals (in this
/// order) ending at or before a_k. pred[0] = 0 stands for the sentinel i_0.
struct SortedIntervals {
    std::vector<std::size_t> order;
    std::vector<std::size_t> pred;

    std::size_t size() const noexcept { return order.size(); }
};

SortedIntervals sort_and_index(const IntervalInstance& inst);

struct SelectionResult {
    CompositeWeight value;
    IdSet chosen;
};

/// Maximum-weight pairwise-disjoint subset of `restrict` under lexicographic
/// weights. `weight` is indexed by instance index (id rank).
SelectionResult frank_dp(const IntervalInstance& inst, const WeightTable& weight, const IdSet& restrict);

/// Proper 2-coloring of g[restrict], indexed by vertex id (-1 outside
/// restrict), or nullopt when g[restrict] has an odd cycle.
std::optional<std::vector<int>> two_coloring(const BisGraph& g, const IdSet& restrict);
bool is_bipartite(const BisGraph& g, const IdSet& restrict);
bool is_bipartite(const BisGraph& g);

/// Maximum-weight independent set of the bipartite graph g[restrict] via
/// minimum cut. With require_nonempty the best nonempty set is returned.
SelectionResult mwis_bipartite(const BisGraph& g, const WeightTable& weight, const IdSet& restrict,
                               bool require_nonempty);

CompositeWeight total_weight(const WeightTable& weight, const IdSet& items);

}  // namespace bilevel
