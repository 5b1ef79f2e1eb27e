#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace bilevel {

/// Signed 128-bit integer used wherever weights are scaled by the
/// perturbation base. Sums of scaled weights stay far below 2^127 for
/// weights <= kMaxWeight and at most kMaxItems items.
using Wide = __int128;

/// Exact replacement for an infinitesimal tie-break term.
///
/// `primary` plays the role of the follower weight and `secondary` the signed
/// leader weight. Addition is componentwise and comparison lexicographic, so
/// maximizing a sum of CompositeWeights maximizes the primary sum first and
/// breaks ties by the secondary sum.
struct CompositeWeight {
    std::int64_t primary = 0;
    std::int64_t secondary = 0;

    constexpr CompositeWeight& operator+=(const CompositeWeight& o) noexcept {
        primary += o.primary;
        secondary += o.secondary;
        return *this;
    }
    constexpr CompositeWeight& operator-=(const CompositeWeight& o) noexcept {
        primary -= o.primary;
        secondary -= o.secondary;
        return *this;
    }
    friend constexpr CompositeWeight operator+(CompositeWeight a, const CompositeWeight& b) noexcept {
        return a += b;
    }
    friend constexpr CompositeWeight operator-(CompositeWeight a, const CompositeWeight& b) noexcept {
        return a -= b;
    }
    friend constexpr auto operator<=>(const CompositeWeight&, const CompositeWeight&) = default;
    friend constexpr bool operator==(const CompositeWeight&, const CompositeWeight&) = default;
};

/// Per-item weights, indexed by item position (vertex id for graphs, id rank
/// for interval instances).
using WeightTable = std::vector<CompositeWeight>;

/// Collapses a pair to primary * base + secondary. Order-preserving on any
/// family of sums whose |secondary| totals stay below `base`.
constexpr Wide scaled(const CompositeWeight& w, Wide base) noexcept {
    return static_cast<Wide>(w.primary) * base + static_cast<Wide>(w.secondary);
}

std::string to_string(Wide value);
std::string to_string(const CompositeWeight& w);

}  // namespace bilevel
