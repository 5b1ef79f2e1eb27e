#include "bilevel/single_level.hpp"

#include <algorithm>
#include <numeric>

#include "max_flow.hpp"

namespace bilevel {

namespace {

bool end_order(const Interval& x, const Interval& y) {
    if (x.end != y.end) return x.end < y.end;
    if (x.start != y.start) return x.start < y.start;
    return x.id < y.id;
}

std::vector<std::size_t> sorted_positions(const IntervalInstance& inst, std::vector<std::size_t> positions) {
    const auto& xs = inst.intervals();
    std::sort(positions.begin(), positions.end(),
              [&](std::size_t a, std::size_t b) { return end_order(xs[a], xs[b]); });
    return positions;
}

// p(k) for every position of `order` (1-based), by binary search on ends.
std::vector<std::size_t> predecessors(const IntervalInstance& inst, const std::vector<std::size_t>& order) {
    const auto& xs = inst.intervals();
    std::vector<Coord> ends(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) ends[k] = xs[order[k]].end;
    std::vector<std::size_t> pred(order.size() + 1, 0);
    for (std::size_t k = 1; k <= order.size(); ++k) {
        const Coord a = xs[order[k - 1]].start;
        pred[k] = static_cast<std::size_t>(std::upper_bound(ends.begin(), ends.end(), a) - ends.begin());
    }
    return pred;
}

std::size_t checked_index(const BisGraph& g, Id v) {
    if (!g.contains(v)) fail(ErrorCode::UnknownId, "vertex " + std::to_string(v));
    return static_cast<std::size_t>(v);
}

}  // namespace

SortedIntervals sort_and_index(const IntervalInstance& inst) {
    std::vector<std::size_t> all(inst.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    SortedIntervals out;
    out.order = sorted_positions(inst, std::move(all));
    out.pred = predecessors(inst, out.order);
    return out;
}

CompositeWeight total_weight(const WeightTable& weight, const IdSet& items) {
    CompositeWeight sum;
    for (Id v : items) sum += weight.at(static_cast<std::size_t>(v));
    return sum;
}

SelectionResult frank_dp(const IntervalInstance& inst, const WeightTable& weight, const IdSet& restrict) {
    if (weight.size() != inst.size()) fail(ErrorCode::InvalidInput, "weight table size mismatch");
    std::vector<std::size_t> positions;
    positions.reserve(restrict.size());
    for (Id id : restrict) positions.push_back(inst.index_of(id));
    const auto order = sorted_positions(inst, std::move(positions));
    const auto pred = predecessors(inst, order);

    const std::size_t n = order.size();
    std::vector<CompositeWeight> best(n + 1);
    std::vector<bool> take(n + 1, false);
    for (std::size_t k = 1; k <= n; ++k) {
        const CompositeWeight with = best[pred[k]] + weight[order[k - 1]];
        // Ties keep the interval out.
        if (with > best[k - 1]) {
            best[k] = with;
            take[k] = true;
        } else {
            best[k] = best[k - 1];
        }
    }

    SelectionResult out;
    out.value = best[n];
    for (std::size_t k = n; k > 0;) {
        if (take[k]) {
            out.chosen.push_back(inst.intervals()[order[k - 1]].id);
            k = pred[k];
        } else {
            --k;
        }
    }
    std::sort(out.chosen.begin(), out.chosen.end());
    return out;
}

std::optional<std::vector<int>> two_coloring(const BisGraph& g, const IdSet& restrict) {
    std::vector<int> color(g.size(), -1);
    std::vector<bool> inside(g.size(), false);
    for (Id v : restrict) inside[checked_index(g, v)] = true;
    std::vector<Id> stack;
    for (Id root : restrict) {
        if (color[static_cast<std::size_t>(root)] >= 0) continue;
        color[static_cast<std::size_t>(root)] = 0;
        stack.push_back(root);
        while (!stack.empty()) {
            const Id u = stack.back();
            stack.pop_back();
            const int cu = color[static_cast<std::size_t>(u)];
            for (Id w : g.neighbors(u)) {
                const auto wi = static_cast<std::size_t>(w);
                if (!inside[wi]) continue;
                if (color[wi] < 0) {
                    color[wi] = 1 - cu;
                    stack.push_back(w);
                } else if (color[wi] == cu) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool is_bipartite(const BisGraph& g, const IdSet& restrict) { return two_coloring(g, restrict).has_value(); }

bool is_bipartite(const BisGraph& g) {
    IdSet all(g.size());
    std::iota(all.begin(), all.end(), Id{0});
    return is_bipartite(g, all);
}

SelectionResult mwis_bipartite(const BisGraph& g, const WeightTable& weight, const IdSet& restrict,
                               bool require_nonempty) {
    if (weight.size() != g.size()) fail(ErrorCode::InvalidInput, "weight table size mismatch");
    if (require_nonempty && restrict.empty()) fail(ErrorCode::EmptyRestrict, "nonempty set requested from nothing");
    const auto coloring = two_coloring(g, restrict);
    if (!coloring) fail(ErrorCode::NotBipartite, "induced subgraph has an odd cycle");
    const auto& color = *coloring;

    Wide base = 1;
    for (Id v : restrict) {
        const auto s = weight[static_cast<std::size_t>(v)].secondary;
        base += s < 0 ? -static_cast<Wide>(s) : static_cast<Wide>(s);
    }
    std::vector<Wide> scaled_w(g.size(), 0);
    std::vector<bool> useful(g.size(), false);
    for (Id v : restrict) {
        const auto vi = static_cast<std::size_t>(v);
        scaled_w[vi] = scaled(weight[vi], base);
        useful[vi] = scaled_w[vi] > 0;
    }

    // Vertices of non-positive weight never help, so they are dropped and the
    // rest is split into connected components.
    IdSet chosen;
    std::vector<int> component(g.size(), -1);
    std::vector<Id> members;
    std::vector<Id> stack;
    int next_component = 0;
    for (Id root : restrict) {
        const auto ri = static_cast<std::size_t>(root);
        if (!useful[ri] || component[ri] >= 0) continue;
        members.clear();
        component[ri] = next_component;
        stack.push_back(root);
        while (!stack.empty()) {
            const Id u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (Id w : g.neighbors(u)) {
                const auto wi = static_cast<std::size_t>(w);
                if (useful[wi] && component[wi] < 0) {
                    component[wi] = next_component;
                    stack.push_back(w);
                }
            }
        }
        ++next_component;
        if (members.size() == 1) {
            chosen.push_back(root);
            continue;
        }
        std::sort(members.begin(), members.end());
        const std::size_t m = members.size();
        const std::size_t source = m;
        const std::size_t sink = m + 1;
        auto local = [&](Id v) {
            return static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), v) - members.begin());
        };
        Wide total = 0;
        for (Id v : members) total += scaled_w[static_cast<std::size_t>(v)];
        const Wide infinite = total + 1;
        detail::MaxFlow flow(m + 2);
        for (std::size_t i = 0; i < m; ++i) {
            const Id v = members[i];
            const auto vi = static_cast<std::size_t>(v);
            if (color[vi] == 0) {
                flow.add_arc(source, i, scaled_w[vi]);
                for (Id w : g.neighbors(v)) {
                    if (component[static_cast<std::size_t>(w)] == component[vi]) flow.add_arc(i, local(w), infinite);
                }
            } else {
                flow.add_arc(i, sink, scaled_w[vi]);
            }
        }
        flow.run(source, sink);
        const auto reach = flow.source_side(source);
        for (std::size_t i = 0; i < m; ++i) {
            const bool side0 = color[static_cast<std::size_t>(members[i])] == 0;
            if (side0 == reach[i]) chosen.push_back(members[i]);
        }
    }
    std::sort(chosen.begin(), chosen.end());

    if (chosen.empty() && require_nonempty) {
        Id best = restrict.front();
        for (Id v : restrict) {
            if (weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
        }
        chosen.push_back(best);
    }
    return {total_weight(weight, chosen), std::move(chosen)};
}

}  // namespace bilevel
