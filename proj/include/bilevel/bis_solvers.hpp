#pragma once

#include <cstddef>

#include "bilevel/core.hpp"

namespace bilevel {

/// (c_b, d_b, o) on any graph.
BilevelOutcome solve_cb_db_o(const BisGraph& g);

/// (c_s, d_b, o) on bipartite graphs, by scanning the vertex that fixes the
/// follower's bottleneck threshold.
BilevelOutcome solve_cs_db_o_bipartite(const BisGraph& g);

/// (c_s, d_b, p) on bipartite graphs.
BilevelOutcome solve_cs_db_p_bipartite(const BisGraph& g);

struct EnumOptions {
    unsigned threads = 1;
};

/// Enumerates every independent leader set and answers each with the
/// polynomial follower oracle. Reactions are memoized on the available
/// follower set. Exponential in |V_l| only.
BilevelOutcome solve_enum_leader(const BisGraph& g, Variant variant, const EnumOptions& options = {});

/// True iff L with the follower's reaction reaches at least `claimed`.
bool verify_certificate(const BisGraph& g, Variant variant, const IdSet& leader, Weight claimed);

/// Best available exact solver for the variant and graph class.
BilevelOutcome solve(const BisGraph& g, Variant variant, const EnumOptions& options = {});

}  // namespace bilevel
