#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bilevel/composite_weight.hpp"
#include "bilevel/error.hpp"

namespace bilevel {

using Id = std::int64_t;
using Weight = std::int64_t;
using Coord = std::int64_t;

/// Sorted, duplicate-free list of item ids.
using IdSet = std::vector<Id>;

using Edge = std::pair<Id, Id>;

inline constexpr Weight kMaxWeight = Weight{1} << 40;
inline constexpr std::size_t kMaxItems = std::size_t{1} << 20;

enum class Owner { Leader, Follower };
enum class Objective { Sum, Bottleneck };
enum class Role { Leader, Follower };
enum class Setting { Optimistic, Pessimistic };

std::string_view to_string(Owner owner) noexcept;
std::string_view to_string(Setting setting) noexcept;

/// (leader objective, follower objective, follower setting).
struct Variant {
    Objective leader = Objective::Sum;
    Objective follower = Objective::Sum;
    Setting setting = Setting::Optimistic;

    friend constexpr bool operator==(const Variant&, const Variant&) = default;

    /// Flag grammar `{cs|cb}-{ds|db}-{o|p}`.
    std::string to_string() const;
    static Variant parse(std::string_view text);
};

std::array<Variant, 8> all_variants();
Setting parse_setting(std::string_view text);

/// Normalizes an arbitrary id list into an IdSet (sorted, unique).
IdSet make_id_set(std::vector<Id> ids);
IdSet set_union(const IdSet& a, const IdSet& b);

struct Vertex {
    Owner owner = Owner::Leader;
    Weight wl = 0;
    Weight wf = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Simple undirected vertex-weighted graph whose vertices are split between
/// leader and follower. Vertex ids are the dense indices 0..n-1.
class BisGraph {
public:
    BisGraph() = default;
    BisGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    std::size_t size() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }
    bool contains(Id v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < vertices_.size(); }

    const Vertex& vertex(Id v) const;
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    /// Edges with u < v, sorted.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Id> neighbors(Id v) const;
    bool adjacent(Id u, Id v) const;

    Weight weight(Id v, Role role) const;
    Owner owner(Id v) const { return vertex(v).owner; }

    const IdSet& leaders() const noexcept { return leaders_; }
    const IdSet& followers() const noexcept { return followers_; }

    friend bool operator==(const BisGraph& a, const BisGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Id>> adjacency_;
    IdSet leaders_;
    IdSet followers_;
};

/// Unweighted simple graph, the input of the reduction generators.
class PlainGraph {
public:
    PlainGraph() = default;
    PlainGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t size() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    bool adjacent(Id u, Id v) const;

    friend bool operator==(const PlainGraph&, const PlainGraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

/// Half-open interval [start, end).
struct Interval {
    Id id = 0;
    Coord start = 0;
    Coord end = 1;
    Owner owner = Owner::Leader;
    Weight wl = 0;
    Weight wf = 0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

constexpr bool overlaps(const Interval& x, const Interval& y) noexcept {
    return x.start < y.end && y.start < x.end;
}

/// Weighted intervals split between leader and follower. Intervals are kept
/// sorted by id; an interval's position in that order is its index, which is
/// also the vertex id it receives in to_interval_graph.
class IntervalInstance {
public:
    IntervalInstance() = default;
    explicit IntervalInstance(std::vector<Interval> intervals);

    std::size_t size() const noexcept { return intervals_.size(); }
    bool empty() const noexcept { return intervals_.empty(); }
    const std::vector<Interval>& intervals() const noexcept { return intervals_; }
    bool contains(Id id) const noexcept { return index_.contains(id); }
    std::size_t index_of(Id id) const;
    const Interval& at(Id id) const { return intervals_[index_of(id)]; }
    Weight weight(Id id, Role role) const;
    Owner owner(Id id) const { return at(id).owner; }

    IdSet leaders() const;
    IdSet followers() const;

    friend bool operator==(const IntervalInstance& a, const IntervalInstance& b) {
        return a.intervals_ == b.intervals_;
    }

private:
    std::vector<Interval> intervals_;
    std::unordered_map<Id, std::size_t> index_;
};

/// A leader action, the follower's reaction and both objective values.
struct BilevelOutcome {
    IdSet leader_set;
    IdSet follower_set;
    Weight leader_value = 0;
    Weight follower_value = 0;

    friend bool operator==(const BilevelOutcome&, const BilevelOutcome&) = default;
};

Weight evaluate(Objective obj, Role role, const IdSet& items, const BisGraph& g);
Weight evaluate(Objective obj, Role role, const IdSet& items, const IntervalInstance& inst);

bool is_independent(const BisGraph& g, const IdSet& items);
bool intervals_pairwise_disjoint(const IntervalInstance& inst, const IdSet& items);

/// One vertex per interval (vertex k = interval of k-th smallest id), an
/// edge for every overlapping pair.
BisGraph to_interval_graph(const IntervalInstance& inst);

/// Evaluates both objectives on L u F. Throws BottleneckOfEmptySet when a
/// bottleneck objective meets an empty union.
BilevelOutcome make_outcome(const BisGraph& g, Variant variant, IdSet leader_set, IdSet follower_set);
BilevelOutcome make_outcome(const IntervalInstance& inst, Variant variant, IdSet leader_set,
                            IdSet follower_set);

/// 1 + sum of leader weights; the scaling base that keeps w_f * B +- w_l
/// order-equivalent to the lexicographic pair (w_f, +-w_l).
Wide scale_base(const BisGraph& g);
Wide scale_base(const IntervalInstance& inst);

}  // namespace bilevel
