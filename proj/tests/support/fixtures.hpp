#pragma once

#include "bilevel/core.hpp"

namespace fixtures {

using namespace bilevel;

// Path v0 - v1 - v2.
inline BisGraph g1() {
    return BisGraph({{Owner::Leader, 5, 1}, {Owner::Follower, 3, 4}, {Owner::Leader, 2, 7}}, {{0, 1}, {1, 2}});
}

// 4-cycle a - b - c - d - a with a=0, b=1, c=2, d=3.
inline BisGraph g2() {
    return BisGraph({{Owner::Leader, 3, 2}, {Owner::Follower, 1, 5}, {Owner::Leader, 4, 1}, {Owner::Follower, 2, 5}},
                    {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

inline IntervalInstance i1() {
    return IntervalInstance({{1, 0, 2, Owner::Leader, 4, 1}, {2, 1, 3, Owner::Follower, 0, 5}, {3, 3, 4, Owner::Follower, 2, 1}});
}

inline IntervalInstance i2() {
    return IntervalInstance({{1, 0, 1, Owner::Follower, 3, 2}, {2, 0, 1, Owner::Follower, 0, 2}});
}

// Twelve mixed intervals with coordinates scaled by 20
// so that 4.55 and 5.5 become integers; weights read as (wl, wf).
inline IntervalInstance mixed12() {
    const auto L = Owner::Leader;
    const auto F = Owner::Follower;
    return IntervalInstance({
        {1, 0, 20, F, 9, 3},
        {2, 40, 80, L, 1, 5},
        {3, 60, 91, F, 2, 2},
        {4, 0, 100, F, 5, 4},
        {5, 80, 120, F, 3, 1},
        {6, 110, 140, L, 4, 8},
        {7, 140, 180, L, 10, 2},
        {8, 160, 200, F, 8, 9},
        {9, 140, 220, F, 2, 5},
        {10, 220, 240, L, 0, 10},
        {11, 220, 280, L, 3, 4},
        {12, 260, 300, F, 7, 2},
    });
}

inline PlainGraph k3() { return PlainGraph(3, {{0, 1}, {0, 2}, {1, 2}}); }

inline BisGraph k3_followers() {
    return BisGraph({{Owner::Follower, 1, 1}, {Owner::Follower, 1, 1}, {Owner::Follower, 1, 1}}, {{0, 1}, {0, 2}, {1, 2}});
}

}  // namespace fixtures
