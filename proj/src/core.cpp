#include "bilevel/core.hpp"

#include <algorithm>
#include <limits>

namespace bilevel {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::UnknownId: return "UnknownId";
        case ErrorCode::BottleneckOfEmptySet: return "BottleneckOfEmptySet";
        case ErrorCode::NotBipartite: return "NotBipartite";
        case ErrorCode::EmptyRestrict: return "EmptyRestrict";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::OracleUnavailable: return "OracleUnavailable";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::MalformedClause: return "MalformedClause";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::CorruptTables: return "CorruptTables";
        case ErrorCode::BadParameter: return "BadParameter";
    }
    return "Unknown";
}

std::string to_string(Wide value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    std::string digits;
    while (value != 0) {
        const int d = static_cast<int>(value % 10);
        digits.push_back(static_cast<char>('0' + (negative ? -d : d)));
        value /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::string to_string(const CompositeWeight& w) {
    return "(" + std::to_string(w.primary) + "," + std::to_string(w.secondary) + ")";
}

std::string_view to_string(Owner owner) noexcept {
    return owner == Owner::Leader ? "leader" : "follower";
}

std::string_view to_string(Setting setting) noexcept {
    return setting == Setting::Optimistic ? "o" : "p";
}

std::string Variant::to_string() const {
    std::string out = leader == Objective::Sum ? "cs-" : "cb-";
    out += follower == Objective::Sum ? "ds-" : "db-";
    out += setting == Setting::Optimistic ? "o" : "p";
    return out;
}

Variant Variant::parse(std::string_view text) {
    if (text.size() != 7 || text[2] != '-' || text[5] != '-') {
        fail(ErrorCode::BadParameter, "variant must look like cs-ds-o, got '" + std::string(text) + "'");
    }
    Variant v;
    const auto lead = text.substr(0, 2);
    const auto foll = text.substr(3, 2);
    if (lead == "cs") v.leader = Objective::Sum;
    else if (lead == "cb") v.leader = Objective::Bottleneck;
    else fail(ErrorCode::BadParameter, "unknown leader objective '" + std::string(lead) + "'");
    if (foll == "ds") v.follower = Objective::Sum;
    else if (foll == "db") v.follower = Objective::Bottleneck;
    else fail(ErrorCode::BadParameter, "unknown follower objective '" + std::string(foll) + "'");
    v.setting = parse_setting(text.substr(6));
    return v;
}

Setting parse_setting(std::string_view text) {
    if (text == "o" || text == "optimistic") return Setting::Optimistic;
    if (text == "p" || text == "pessimistic") return Setting::Pessimistic;
    fail(ErrorCode::BadParameter, "setting must be o or p, got '" + std::string(text) + "'");
}

std::array<Variant, 8> all_variants() {
    std::array<Variant, 8> out{};
    std::size_t i = 0;
    for (auto c : {Objective::Sum, Objective::Bottleneck})
        for (auto d : {Objective::Sum, Objective::Bottleneck})
            for (auto s : {Setting::Optimistic, Setting::Pessimistic}) out[i++] = Variant{c, d, s};
    return out;
}

IdSet make_id_set(std::vector<Id> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

IdSet set_union(const IdSet& a, const IdSet& b) {
    IdSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

namespace {

void check_weight(Weight w, const char* what) {
    if (w < 0 || w > kMaxWeight) {
        fail(ErrorCode::InvalidInput, std::string(what) + " weight " + std::to_string(w) + " outside [0, 2^40]");
    }
}

std::vector<Edge> normalize_edges(std::size_t n, std::vector<Edge> edges) {
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
            fail(ErrorCode::UnknownId, "edge {" + std::to_string(u) + "," + std::to_string(v) + "} names a missing vertex");
        }
        if (u == v) fail(ErrorCode::InvalidInput, "self-loop on vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
        fail(ErrorCode::InvalidInput,
             "duplicate edge {" + std::to_string(dup->first) + "," + std::to_string(dup->second) + "}");
    }
    return edges;
}

}  // namespace

BisGraph::BisGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)) {
    if (vertices_.size() > kMaxItems) fail(ErrorCode::InvalidInput, "too many vertices");
    for (const auto& v : vertices_) {
        check_weight(v.wl, "leader");
        check_weight(v.wf, "follower");
    }
    edges_ = normalize_edges(vertices_.size(), std::move(edges));
    adjacency_.resize(vertices_.size());
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        (vertices_[i].owner == Owner::Leader ? leaders_ : followers_).push_back(static_cast<Id>(i));
    }
}

const Vertex& BisGraph::vertex(Id v) const {
    if (!contains(v)) fail(ErrorCode::UnknownId, "vertex " + std::to_string(v));
    return vertices_[static_cast<std::size_t>(v)];
}

std::span<const Id> BisGraph::neighbors(Id v) const {
    if (!contains(v)) fail(ErrorCode::UnknownId, "vertex " + std::to_string(v));
    return adjacency_[static_cast<std::size_t>(v)];
}

bool BisGraph::adjacent(Id u, Id v) const {
    const auto nb = neighbors(u);
    if (!contains(v)) fail(ErrorCode::UnknownId, "vertex " + std::to_string(v));
    return std::binary_search(nb.begin(), nb.end(), v);
}

Weight BisGraph::weight(Id v, Role role) const {
    const auto& x = vertex(v);
    return role == Role::Leader ? x.wl : x.wf;
}

PlainGraph::PlainGraph(std::size_t n, std::vector<Edge> edges) : n_(n) {
    if (n > kMaxItems) fail(ErrorCode::InvalidInput, "too many vertices");
    edges_ = normalize_edges(n, std::move(edges));
}

bool PlainGraph::adjacent(Id u, Id v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

IntervalInstance::IntervalInstance(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    if (intervals_.size() > kMaxItems) fail(ErrorCode::InvalidInput, "too many intervals");
    std::sort(intervals_.begin(), intervals_.end(),
              [](const Interval& a, const Interval& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        const auto& x = intervals_[i];
        if (i > 0 && intervals_[i - 1].id == x.id) {
            fail(ErrorCode::InvalidInput, "duplicate interval id " + std::to_string(x.id));
        }
        if (x.start < 0 || x.start >= x.end) {
            fail(ErrorCode::InvalidInput, "interval " + std::to_string(x.id) + " needs 0 <= start < end");
        }
        check_weight(x.wl, "leader");
        check_weight(x.wf, "follower");
        index_.emplace(x.id, i);
    }
}

std::size_t IntervalInstance::index_of(Id id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) fail(ErrorCode::UnknownId, "interval " + std::to_string(id));
    return it->second;
}

Weight IntervalInstance::weight(Id id, Role role) const {
    const auto& x = at(id);
    return role == Role::Leader ? x.wl : x.wf;
}

IdSet IntervalInstance::leaders() const {
    IdSet out;
    for (const auto& x : intervals_)
        if (x.owner == Owner::Leader) out.push_back(x.id);
    return out;
}

IdSet IntervalInstance::followers() const {
    IdSet out;
    for (const auto& x : intervals_)
        if (x.owner == Owner::Follower) out.push_back(x.id);
    return out;
}

namespace {

template <class Instance>
Weight evaluate_impl(Objective obj, Role role, const IdSet& items, const Instance& inst) {
    if (obj == Objective::Bottleneck) {
        if (items.empty()) fail(ErrorCode::BottleneckOfEmptySet, "bottleneck objective of an empty set");
        Weight best = std::numeric_limits<Weight>::max();
        for (Id id : items) best = std::min(best, inst.weight(id, role));
        return best;
    }
    Weight total = 0;
    for (Id id : items) total += inst.weight(id, role);
    return total;
}

template <class Instance>
BilevelOutcome make_outcome_impl(const Instance& inst, Variant variant, IdSet leader_set, IdSet follower_set) {
    BilevelOutcome out;
    const IdSet all = set_union(leader_set, follower_set);
    out.leader_value = evaluate(variant.leader, Role::Leader, all, inst);
    out.follower_value = evaluate(variant.follower, Role::Follower, all, inst);
    out.leader_set = std::move(leader_set);
    out.follower_set = std::move(follower_set);
    return out;
}

template <class Instance>
Wide scale_base_impl(const Instance& inst, const auto& items) {
    Wide base = 1;
    for (const auto& x : items) base += x.wl;
    (void)inst;
    return base;
}

}  // namespace

Weight evaluate(Objective obj, Role role, const IdSet& items, const BisGraph& g) {
    return evaluate_impl(obj, role, items, g);
}

Weight evaluate(Objective obj, Role role, const IdSet& items, const IntervalInstance& inst) {
    return evaluate_impl(obj, role, items, inst);
}

bool is_independent(const BisGraph& g, const IdSet& items) {
    for (Id v : items)
        if (!g.contains(v)) fail(ErrorCode::UnknownId, "vertex " + std::to_string(v));
    for (Id v : items) {
        for (Id u : g.neighbors(v)) {
            if (u > v && std::binary_search(items.begin(), items.end(), u)) return false;
        }
    }
    return true;
}

bool intervals_pairwise_disjoint(const IntervalInstance& inst, const IdSet& items) {
    std::vector<const Interval*> chosen;
    chosen.reserve(items.size());
    for (Id id : items) chosen.push_back(&inst.at(id));
    std::sort(chosen.begin(), chosen.end(), [](const Interval* a, const Interval* b) {
        return a->start < b->start;
    });
    for (std::size_t i = 1; i < chosen.size(); ++i) {
        if (chosen[i]->start < chosen[i - 1]->end) return false;
    }
    return true;
}

BisGraph to_interval_graph(const IntervalInstance& inst) {
    const auto& xs = inst.intervals();
    std::vector<Vertex> vertices;
    vertices.reserve(xs.size());
    for (const auto& x : xs) vertices.push_back({x.owner, x.wl, x.wf});

    // Sweep by start point; every interval still open at a start overlaps it.
    std::vector<std::size_t> by_start(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) by_start[i] = i;
    std::sort(by_start.begin(), by_start.end(), [&](std::size_t a, std::size_t b) {
        return xs[a].start < xs[b].start || (xs[a].start == xs[b].start && a < b);
    });
    std::vector<Edge> edges;
    std::vector<std::size_t> open;
    for (std::size_t idx : by_start) {
        std::erase_if(open, [&](std::size_t o) { return xs[o].end <= xs[idx].start; });
        for (std::size_t o : open) edges.emplace_back(static_cast<Id>(o), static_cast<Id>(idx));
        open.push_back(idx);
    }
    return BisGraph(std::move(vertices), std::move(edges));
}

BilevelOutcome make_outcome(const BisGraph& g, Variant variant, IdSet leader_set, IdSet follower_set) {
    return make_outcome_impl(g, variant, std::move(leader_set), std::move(follower_set));
}

BilevelOutcome make_outcome(const IntervalInstance& inst, Variant variant, IdSet leader_set,
                            IdSet follower_set) {
    return make_outcome_impl(inst, variant, std::move(leader_set), std::move(follower_set));
}

Wide scale_base(const BisGraph& g) { return scale_base_impl(g, g.vertices()); }
Wide scale_base(const IntervalInstance& inst) { return scale_base_impl(inst, inst.intervals()); }

}  // namespace bilevel
