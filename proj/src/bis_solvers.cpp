#include "bilevel/bis_solvers.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <unordered_map>

#include "bilevel/brute.hpp"
#include "bilevel/follower.hpp"
#include "bilevel/single_level.hpp"

namespace bilevel {

namespace {

constexpr Weight kNone = std::numeric_limits<Weight>::max();

WeightTable leader_weights(const BisGraph& g) {
    WeightTable out;
    for (const auto& v : g.vertices()) out.push_back({v.wl, 0});
    return out;
}

void require_vertices(const BisGraph& g) {
    if (g.empty()) fail(ErrorCode::Infeasible, "empty graph has no feasible outcome");
}

void require_bipartite(const BisGraph& g) {
    if (!is_bipartite(g)) fail(ErrorCode::NotBipartite, "graph has an odd cycle");
}

struct Best {
    std::optional<BilevelOutcome> outcome;

    void offer(BilevelOutcome candidate) {
        if (!outcome || candidate.leader_value > outcome->leader_value) outcome = std::move(candidate);
    }
    BilevelOutcome take() {
        if (!outcome) fail(ErrorCode::Infeasible, "no feasible leader action");
        return std::move(*outcome);
    }
};

// ---------------------------------------------------------------------------
// Leader enumeration.

struct Reaction {
    bool feasible = false;
    Weight sum_wl = 0;
    Weight min_wl = kNone;
};

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t w : key) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }
};

struct Leaf {
    Weight value = 0;
    IdSet leader;
};

class LeaderEnumerator {
public:
    LeaderEnumerator(const BisGraph& g, Variant variant) : g_(g), variant_(variant) {
        leaders_ = g.leaders();
        followers_ = g.followers();
        std::vector<std::size_t> fidx(g.size(), 0), lidx(g.size(), 0);
        for (std::size_t i = 0; i < followers_.size(); ++i) fidx[static_cast<std::size_t>(followers_[i])] = i;
        for (std::size_t i = 0; i < leaders_.size(); ++i) lidx[static_cast<std::size_t>(leaders_[i])] = i;
        follower_nb_.resize(leaders_.size());
        leader_nb_.resize(leaders_.size());
        for (std::size_t i = 0; i < leaders_.size(); ++i) {
            for (Id u : g.neighbors(leaders_[i])) {
                const auto ui = static_cast<std::size_t>(u);
                if (g.owner(u) == Owner::Follower) follower_nb_[i].push_back(fidx[ui]);
                else leader_nb_[i].push_back(lidx[ui]);
            }
        }
        words_ = (followers_.size() + 63) / 64;
        for (const auto& v : g.vertices()) {
            upper_bound_ = variant.leader == Objective::Sum ? upper_bound_ + v.wl : std::max(upper_bound_, v.wl);
        }
    }

    std::size_t leader_count() const noexcept { return leaders_.size(); }
    Weight upper_bound() const noexcept { return upper_bound_; }

    /// Best leaf below the fixed decisions `prefix` (true = take), in
    /// exclude-first DFS order; `stop` is polled to abandon the search.
    std::optional<Leaf> search(const std::vector<bool>& prefix, const std::atomic<bool>* stop) {
        stop_ = stop;
        best_.reset();
        fcount_.assign(followers_.size(), 0);
        lblock_.assign(leaders_.size(), 0);
        avail_.assign(words_, 0);
        for (std::size_t f = 0; f < followers_.size(); ++f) avail_[f / 64] |= std::uint64_t{1} << (f % 64);
        chosen_.clear();
        State s;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (!prefix[i]) continue;
            if (lblock_[i] > 0) return std::nullopt;
            s = include(i, s);
        }
        dfs(prefix.size(), s);
        return best_;
    }

private:
    struct State {
        Weight sum_wl = 0;
        Weight min_wl = kNone;
        Weight min_wf = kNone;
    };

    State include(std::size_t i, State s) {
        const auto& v = g_.vertex(leaders_[i]);
        s.sum_wl += v.wl;
        s.min_wl = std::min(s.min_wl, v.wl);
        s.min_wf = std::min(s.min_wf, v.wf);
        for (std::size_t f : follower_nb_[i]) {
            if (fcount_[f]++ == 0) avail_[f / 64] &= ~(std::uint64_t{1} << (f % 64));
        }
        for (std::size_t j : leader_nb_[i]) ++lblock_[j];
        chosen_.push_back(i);
        return s;
    }

    void exclude(std::size_t i) {
        for (std::size_t f : follower_nb_[i]) {
            if (--fcount_[f] == 0) avail_[f / 64] |= std::uint64_t{1} << (f % 64);
        }
        for (std::size_t j : leader_nb_[i]) --lblock_[j];
        chosen_.pop_back();
    }

    bool done() const {
        return (best_ && best_->value >= upper_bound_) || (stop_ && stop_->load(std::memory_order_relaxed));
    }

    // A bottleneck leader value never exceeds min wl(L), which only drops
    // as L grows.
    bool hopeless(const State& s) const {
        return variant_.leader == Objective::Bottleneck && best_ && s.min_wl != kNone && s.min_wl <= best_->value;
    }

    void dfs(std::size_t i, const State& s) {
        if (done() || hopeless(s)) return;
        if (i == leaders_.size()) {
            evaluate_leaf(s);
            return;
        }
        dfs(i + 1, s);
        if (lblock_[i] > 0 || done()) return;
        const State next = include(i, s);
        dfs(i + 1, next);
        exclude(i);
    }

    void evaluate_leaf(const State& s) {
        const bool empty = chosen_.empty();
        const Reaction r = reaction(empty, s.min_wf);
        if (!r.feasible) return;
        Weight value;
        if (variant_.leader == Objective::Sum) {
            value = s.sum_wl + r.sum_wl;
        } else {
            value = std::min(s.min_wl, r.min_wl);
        }
        if (!best_ || value > best_->value) {
            Leaf leaf{value, {}};
            for (std::size_t i : chosen_) leaf.leader.push_back(leaders_[i]);
            best_ = std::move(leaf);
        }
    }

    Reaction reaction(bool empty, Weight min_wf) {
        const bool bottleneck = variant_.follower == Objective::Bottleneck;
        const bool optimistic = variant_.setting == Setting::Optimistic;
        if (bottleneck && !empty) {
            if (optimistic == (variant_.leader == Objective::Bottleneck)) return {true, 0, kNone};
            if (variant_.leader == Objective::Bottleneck) {
                // Lowest wl among available followers meeting the threshold.
                Reaction r{true, 0, kNone};
                for_each_available([&](std::size_t f) {
                    const auto& v = g_.vertex(followers_[f]);
                    if (v.wf >= min_wf && v.wl < r.min_wl) {
                        r.min_wl = v.wl;
                        r.sum_wl = v.wl;
                    }
                });
                return r;
            }
        }
        probe_.assign(avail_.begin(), avail_.end());
        probe_.push_back(bottleneck && !empty ? static_cast<std::uint64_t>(min_wf) : 0);
        probe_.push_back(empty ? 1 : 0);
        if (auto it = memo_.find(probe_); it != memo_.end()) return it->second;

        IdSet available;
        for_each_available([&](std::size_t f) { available.push_back(followers_[f]); });
        Reaction r;
        try {
            const IdSet f = react_available(g_, available, LeaderSummary{empty, empty ? 0 : min_wf}, variant_);
            r.feasible = true;
            for (Id v : f) {
                r.sum_wl += g_.vertex(v).wl;
                r.min_wl = std::min(r.min_wl, g_.vertex(v).wl);
            }
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Infeasible) throw;
        }
        if (memo_.size() >= kMemoLimit) memo_.clear();
        memo_.emplace(probe_, r);
        return r;
    }

    template <class F>
    void for_each_available(F&& f) const {
        for (std::size_t w = 0; w < words_; ++w) {
            for (std::uint64_t bits = avail_[w]; bits != 0; bits &= bits - 1) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            }
        }
    }

    static constexpr std::size_t kMemoLimit = std::size_t{1} << 22;

    const BisGraph& g_;
    Variant variant_;
    IdSet leaders_, followers_;
    std::vector<std::vector<std::size_t>> follower_nb_, leader_nb_;
    std::size_t words_ = 0;
    Weight upper_bound_ = 0;

    std::vector<int> fcount_, lblock_;
    std::vector<std::uint64_t> avail_;
    std::vector<std::size_t> chosen_;
    std::optional<Leaf> best_;
    const std::atomic<bool>* stop_ = nullptr;

    std::vector<std::uint64_t> probe_;
    std::unordered_map<std::vector<std::uint64_t>, Reaction, KeyHash> memo_;
};

// Decision prefixes of the first `depth` leaders in exclude-first DFS order.
std::vector<std::vector<bool>> prefixes(std::size_t depth) {
    std::vector<std::vector<bool>> out;
    std::vector<bool> cur;
    auto rec = [&](auto&& self) -> void {
        if (cur.size() == depth) {
            out.push_back(cur);
            return;
        }
        for (bool take : {false, true}) {
            cur.push_back(take);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::optional<Leaf> enumerate_parallel(const BisGraph& g, Variant variant, unsigned threads) {
    LeaderEnumerator probe(g, variant);
    std::size_t depth = 0;
    while (depth < probe.leader_count() && (std::size_t{1} << depth) < 8 * threads) ++depth;
    const auto tasks = prefixes(depth);
    std::vector<std::optional<Leaf>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_ub_task{tasks.size()};
    std::vector<std::exception_ptr> errors(threads);

    auto worker = [&](unsigned id) {
        try {
            LeaderEnumerator e(g, variant);
            for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
                if (t > first_ub_task.load()) continue;
                results[t] = e.search(tasks[t], nullptr);
                if (results[t] && results[t]->value >= e.upper_bound()) {
                    std::size_t cur = first_ub_task.load();
                    while (t < cur && !first_ub_task.compare_exchange_weak(cur, t)) {
                    }
                }
            }
        } catch (...) {
            errors[id] = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, i);
    for (auto& th : pool) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);

    std::optional<Leaf> best;
    const std::size_t last = std::min(first_ub_task.load(), tasks.size() - 1);
    for (std::size_t t = 0; t <= last; ++t) {
        if (results[t] && (!best || results[t]->value > best->value)) best = std::move(results[t]);
    }
    return best;
}

}  // namespace

BilevelOutcome solve_cb_db_o(const BisGraph& g) {
    require_vertices(g);
    const Variant variant{Objective::Bottleneck, Objective::Bottleneck, Setting::Optimistic};
    Best best;
    if (!g.leaders().empty()) {
        Id top = g.leaders().front();
        for (Id v : g.leaders())
            if (g.vertex(v).wl > g.vertex(top).wl) top = v;
        best.offer(make_outcome(g, variant, {top}, {}));
    }
    if (!g.followers().empty()) best.offer(make_outcome(g, variant, {}, react_bottleneck(g, {}, variant)));
    return best.take();
}

BilevelOutcome solve_cs_db_o_bipartite(const BisGraph& g) {
    require_vertices(g);
    require_bipartite(g);
    const Variant variant{Objective::Sum, Objective::Bottleneck, Setting::Optimistic};
    Best best;
    if (!g.followers().empty()) best.offer(make_outcome(g, variant, {}, react_bottleneck(g, {}, variant)));
    const auto wl = leader_weights(g);
    for (Id pivot : g.leaders()) {
        const Weight floor = g.vertex(pivot).wf;
        IdSet candidates;
        for (Id v = 0; v < static_cast<Id>(g.size()); ++v) {
            if (v != pivot && g.vertex(v).wf >= floor && !g.adjacent(v, pivot)) candidates.push_back(v);
        }
        const auto pick = mwis_bipartite(g, wl, candidates, false).chosen;
        IdSet leader{pivot};
        for (Id v : pick)
            if (g.owner(v) == Owner::Leader) leader.push_back(v);
        leader = make_id_set(std::move(leader));
        best.offer(make_outcome(g, variant, leader, react_bottleneck(g, leader, variant)));
    }
    return best.take();
}

BilevelOutcome solve_cs_db_p_bipartite(const BisGraph& g) {
    require_vertices(g);
    require_bipartite(g);
    const Variant variant{Objective::Sum, Objective::Bottleneck, Setting::Pessimistic};
    Best best;
    if (!g.leaders().empty()) {
        const auto leader = mwis_bipartite(g, leader_weights(g), g.leaders(), true).chosen;
        best.offer(make_outcome(g, variant, leader, react_bottleneck(g, leader, variant)));
    }
    if (!g.followers().empty()) best.offer(make_outcome(g, variant, {}, react_bottleneck(g, {}, variant)));
    return best.take();
}

BilevelOutcome solve_enum_leader(const BisGraph& g, Variant variant, const EnumOptions& options) {
    if (variant.follower == Objective::Sum && !is_bipartite(g, g.followers())) {
        fail(ErrorCode::OracleUnavailable, "d_s oracle needs a bipartite follower graph");
    }
    std::optional<Leaf> best;
    if (options.threads <= 1) {
        LeaderEnumerator e(g, variant);
        best = e.search({}, nullptr);
    } else {
        best = enumerate_parallel(g, variant, options.threads);
    }
    if (!best) fail(ErrorCode::Infeasible, "no feasible leader action");
    auto follower = react(g, best->leader, variant);
    auto out = make_outcome(g, variant, best->leader, std::move(follower));
    if (out.leader_value != best->value) fail(ErrorCode::CorruptTables, "memoized reaction disagrees with oracle");
    return out;
}

bool verify_certificate(const BisGraph& g, Variant variant, const IdSet& leader, Weight claimed) {
    IdSet follower;
    try {
        try {
            follower = react(g, leader, variant);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::OracleUnavailable) throw;
            follower = brute_follower(g, leader, variant);
        }
        return make_outcome(g, variant, leader, follower).leader_value >= claimed;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Infeasible || e.code() == ErrorCode::BottleneckOfEmptySet) return false;
        throw;
    }
}

BilevelOutcome solve(const BisGraph& g, Variant variant, const EnumOptions& options) {
    if (variant.follower == Objective::Bottleneck) {
        if (variant.leader == Objective::Bottleneck && variant.setting == Setting::Optimistic) return solve_cb_db_o(g);
        if (variant.leader == Objective::Sum && !g.empty() && is_bipartite(g)) {
            return variant.setting == Setting::Optimistic ? solve_cs_db_o_bipartite(g) : solve_cs_db_p_bipartite(g);
        }
    }
    return solve_enum_leader(g, variant, options);
}

}  // namespace bilevel
