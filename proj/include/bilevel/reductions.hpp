#pragma once

#include <map>
#include <string>
#include <vector>

#include "bilevel/b2cnf.hpp"
#include "bilevel/core.hpp"

namespace bilevel {

/// A variant under which the output encodes the source problem, and the
/// leader value the decision question compares against.
struct Target {
    Variant variant;
    Weight threshold = 0;

    friend bool operator==(const Target&, const Target&) = default;
};

struct ReductionOutput {
    BisGraph graph;
    std::vector<Target> targets;
    std::map<std::string, Weight> constants;
    /// Human-readable name per vertex id.
    std::vector<std::string> labels;
};

/// Leaders a_i / a'_i per X variable, followers b_i / b'_i per Y variable,
/// a 4-clique per clause and a hub z. Targets (c_s, d_s, *) with threshold
/// M*n1 + R and (c_b, d_s, *) with threshold 1.
ReductionOutput b2cnf_to_bis(const B2cnfFormula& f);

/// k leader copies per vertex (each copy class a clique) and one follower
/// per edge. Target (c_b, d_b, p), threshold 1.
ReductionOutput vc_to_bis(const PlainGraph& g, int k);

/// Bipartite construction with pendant a'_i and b'_j. Targets (c_s, d_s, *)
/// with threshold m*M + n - k.
ReductionOutput planar_vc_to_bipartite_bis(const PlainGraph& g, int k);

/// vc_to_bis with every clique edge subdivided through primed vertices.
/// Targets (c_b, d_b, p) and (c_b, d_s, *), threshold 1.
ReductionOutput vc_to_bipartite_bis(const PlainGraph& g, int k);

/// All vertices leader-owned with unit weights. Targets (c_s, d_b, *),
/// threshold k.
ReductionOutput is_to_bis(const PlainGraph& g, int k);

}  // namespace bilevel
