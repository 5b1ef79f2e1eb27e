#include "bilevel/brute.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>

namespace bilevel {

namespace {

struct Stats {
    Weight sum_wl = 0, sum_wf = 0;
    Weight min_wl = std::numeric_limits<Weight>::max();
    Weight min_wf = std::numeric_limits<Weight>::max();
    std::size_t count = 0;

    void add(const Vertex& v) {
        sum_wl += v.wl;
        sum_wf += v.wf;
        min_wl = std::min(min_wl, v.wl);
        min_wf = std::min(min_wf, v.wf);
        ++count;
    }
    Weight value(Objective obj, Role role) const {
        if (role == Role::Leader) return obj == Objective::Sum ? sum_wl : min_wl;
        return obj == Objective::Sum ? sum_wf : min_wf;
    }
};

bool involves_bottleneck(Variant v) {
    return v.leader == Objective::Bottleneck || v.follower == Objective::Bottleneck;
}

struct Candidate {
    Weight d = 0;
    Weight c = 0;
    IdSet set;
};

// Enumerates every independent subset of `pool` (within g) by include/exclude
// recursion, calling visit(chosen, stats) for each.
template <class Visit>
void for_each_independent(const BisGraph& g, const IdSet& pool, Stats base, Visit&& visit) {
    IdSet chosen;
    std::vector<int> blocked(g.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, const Stats& stats) -> void {
        if (i == pool.size()) {
            visit(chosen, stats);
            return;
        }
        self(self, i + 1, stats);
        const Id v = pool[i];
        if (blocked[static_cast<std::size_t>(v)] > 0) return;
        for (Id u : g.neighbors(v)) ++blocked[static_cast<std::size_t>(u)];
        chosen.push_back(v);
        Stats next = stats;
        next.add(g.vertex(v));
        self(self, i + 1, next);
        chosen.pop_back();
        for (Id u : g.neighbors(v)) --blocked[static_cast<std::size_t>(u)];
    };
    rec(rec, 0, base);
}

std::optional<Candidate> best_reaction(const BisGraph& g, const IdSet& leader, Variant variant, bool require_nonempty) {
    std::vector<bool> blocked(g.size(), false);
    Stats base;
    for (Id v : leader) {
        base.add(g.vertex(v));
        for (Id u : g.neighbors(v)) blocked[static_cast<std::size_t>(u)] = true;
    }
    IdSet pool;
    for (Id v : g.followers())
        if (!blocked[static_cast<std::size_t>(v)]) pool.push_back(v);

    const bool skip_empty = require_nonempty || involves_bottleneck(variant);
    const bool optimistic = variant.setting == Setting::Optimistic;
    std::optional<Candidate> best;
    for_each_independent(g, pool, base, [&](const IdSet& f, const Stats& s) {
        if (s.count == 0 && skip_empty) return;
        const Weight d = s.value(variant.follower, Role::Follower);
        const Weight c = s.value(variant.leader, Role::Leader);
        bool better = !best.has_value();
        if (!better) {
            if (d != best->d) better = d > best->d;
            else if (c != best->c) better = optimistic ? c > best->c : c < best->c;
            else better = f < best->set;
        }
        if (better) best = Candidate{d, c, f};
    });
    return best;
}

void check_follower_cap(std::size_t followers, const BruteLimits& limits) {
    if (followers > limits.follower_cap) {
        fail(ErrorCode::CapExceeded, std::to_string(followers) + " follower items exceed the cap of " +
                                         std::to_string(limits.follower_cap));
    }
}

void check_combined_cap(std::size_t items, const BruteLimits& limits) {
    if (items > limits.combined_cap) {
        fail(ErrorCode::CapExceeded,
             std::to_string(items) + " items exceed the cap of " + std::to_string(limits.combined_cap));
    }
}

IdSet to_ids(const IntervalInstance& inst, const IdSet& positions) {
    IdSet out;
    for (Id p : positions) out.push_back(inst.intervals()[static_cast<std::size_t>(p)].id);
    return out;  // id order matches position order
}

IdSet to_positions(const IntervalInstance& inst, const IdSet& ids) {
    IdSet out;
    for (Id id : ids) out.push_back(static_cast<Id>(inst.index_of(id)));
    return make_id_set(std::move(out));
}

}  // namespace

IdSet brute_follower(const BisGraph& g, const IdSet& leader, Variant variant, const BruteLimits& limits) {
    check_follower_cap(g.followers().size(), limits);
    for (Id v : leader) {
        if (g.owner(v) != Owner::Leader) fail(ErrorCode::InvalidInput, "vertex " + std::to_string(v) + " is not a leader vertex");
    }
    if (!is_independent(g, leader)) fail(ErrorCode::InvalidInput, "leader set is not independent");
    auto best = best_reaction(g, leader, variant, limits.require_nonempty);
    if (!best) fail(ErrorCode::Infeasible, "the leader action admits no feasible reaction");
    return best->set;
}

IdSet brute_follower(const IntervalInstance& inst, const IdSet& leader, Variant variant, const BruteLimits& limits) {
    BruteLimits relaxed = limits;
    relaxed.require_nonempty = false;
    const auto g = to_interval_graph(inst);
    return to_ids(inst, brute_follower(g, to_positions(inst, leader), variant, relaxed));
}

BilevelOutcome brute_force(const BisGraph& g, Variant variant, const BruteLimits& limits) {
    check_combined_cap(g.size(), limits);
    check_follower_cap(g.followers().size(), limits);
    std::optional<Candidate> best;
    IdSet best_follower;
    for_each_independent(g, g.leaders(), Stats{}, [&](const IdSet& leader, const Stats&) {
        auto reaction = best_reaction(g, leader, variant, limits.require_nonempty);
        if (!reaction) return;
        const Weight c = reaction->c;
        if (!best || c > best->c || (c == best->c && leader < best->set)) {
            best = Candidate{0, c, leader};
            best_follower = reaction->set;
        }
    });
    if (!best) fail(ErrorCode::Infeasible, "no feasible leader action");
    return make_outcome(g, variant, best->set, best_follower);
}

BilevelOutcome brute_force(const IntervalInstance& inst, Variant variant, const BruteLimits& limits) {
    BruteLimits relaxed = limits;
    relaxed.require_nonempty = false;
    const auto g = to_interval_graph(inst);
    auto out = brute_force(g, variant, relaxed);
    return make_outcome(inst, variant, to_ids(inst, out.leader_set), to_ids(inst, out.follower_set));
}

BilevelOutcome brute_bisel(const IntervalInstance& inst, Setting setting, const BruteLimits& limits) {
    return brute_force(inst, Variant{Objective::Sum, Objective::Sum, setting}, limits);
}

SelectionResult brute_mwis(const BisGraph& g, const WeightTable& weight, const IdSet& restrict,
                           bool require_nonempty, std::size_t cap) {
    if (weight.size() != g.size()) fail(ErrorCode::InvalidInput, "weight table size mismatch");
    if (restrict.size() > cap || restrict.size() > 64) {
        fail(ErrorCode::CapExceeded, std::to_string(restrict.size()) + " vertices exceed the MWIS cap");
    }
    if (require_nonempty && restrict.empty()) fail(ErrorCode::EmptyRestrict, "nonempty set requested from nothing");
    const std::size_t n = restrict.size();
    std::vector<std::uint64_t> closed(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        closed[i] |= std::uint64_t{1} << i;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g.adjacent(restrict[i], restrict[j])) {
                closed[i] |= std::uint64_t{1} << j;
                closed[j] |= std::uint64_t{1} << i;
            }
        }
    }
    auto w = [&](std::size_t i) { return weight[static_cast<std::size_t>(restrict[i])]; };

    struct Best {
        CompositeWeight value;
        std::uint64_t set = 0;
    };
    auto rec = [&](auto&& self, std::uint64_t mask) -> Best {
        if (mask == 0) return {};
        std::size_t pick = 0;
        int degree = -1;
        for (std::uint64_t m = mask; m != 0; m &= m - 1) {
            const auto i = static_cast<std::size_t>(std::countr_zero(m));
            const int d = std::popcount(closed[i] & mask) - 1;
            if (d > degree) {
                degree = d;
                pick = i;
            }
        }
        if (degree == 0) {
            Best out;
            for (std::uint64_t m = mask; m != 0; m &= m - 1) {
                const auto i = static_cast<std::size_t>(std::countr_zero(m));
                if (w(i) > CompositeWeight{}) {
                    out.value += w(i);
                    out.set |= std::uint64_t{1} << i;
                }
            }
            return out;
        }
        Best skip = self(self, mask & ~(std::uint64_t{1} << pick));
        Best take = self(self, mask & ~closed[pick]);
        take.value += w(pick);
        take.set |= std::uint64_t{1} << pick;
        return take.value > skip.value ? take : skip;
    };
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    Best best = rec(rec, full);

    SelectionResult out;
    for (std::size_t i = 0; i < n; ++i)
        if (best.set >> i & 1) out.chosen.push_back(restrict[i]);
    if (out.chosen.empty() && require_nonempty) {
        std::size_t top = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (w(i) > w(top)) top = i;
        out.chosen.push_back(restrict[top]);
    }
    out.value = total_weight(weight, out.chosen);
    return out;
}

bool decide_vc_brute(const PlainGraph& g, int k, std::size_t cap) {
    if (k < 0) fail(ErrorCode::BadParameter, "k must be non-negative");
    const std::size_t n = g.size();
    if (n > cap || n > 30) fail(ErrorCode::CapExceeded, std::to_string(n) + " vertices exceed the cap");
    std::vector<std::uint32_t> edge_masks;
    for (const auto& [u, v] : g.edges()) edge_masks.push_back((1u << u) | (1u << v));
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t s = 0; s < limit; ++s) {
        if (std::popcount(s) > k) continue;
        if (std::all_of(edge_masks.begin(), edge_masks.end(), [&](std::uint32_t e) { return (e & s) != 0; })) {
            return true;
        }
    }
    return false;
}

bool decide_b2cnf_brute(const B2cnfFormula& f, std::size_t cap) {
    validate(f);
    if (static_cast<std::size_t>(f.n1 + f.n2) > cap || f.n1 + f.n2 > 30) {
        fail(ErrorCode::CapExceeded, "too many variables for exhaustive search");
    }
    auto satisfied = [&](std::uint32_t x, std::uint32_t y) {
        return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& clause) {
            return std::any_of(clause.begin(), clause.end(), [&](const Literal& lit) {
                const std::uint32_t bits = lit.side == Side::X ? x : y;
                const bool value = (bits >> (lit.var - 1)) & 1u;
                return value != lit.neg;
            });
        });
    };
    for (std::uint32_t x = 0; x < (1u << f.n1); ++x) {
        bool some_y = false;
        for (std::uint32_t y = 0; y < (1u << f.n2) && !some_y; ++y) some_y = satisfied(x, y);
        if (!some_y) return true;
    }
    return false;
}

}  // namespace bilevel
