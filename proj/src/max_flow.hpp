#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "bilevel/composite_weight.hpp"

namespace bilevel::detail {

// Dinic's algorithm on 128-bit capacities.
class MaxFlow {
public:
    explicit MaxFlow(std::size_t nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

    void add_arc(std::size_t from, std::size_t to, Wide cap) {
        adj_[from].push_back(arcs_.size());
        arcs_.push_back({to, cap});
        adj_[to].push_back(arcs_.size());
        arcs_.push_back({from, 0});
    }

    Wide run(std::size_t s, std::size_t t) {
        Wide total = 0;
        while (bfs(s, t)) {
            std::fill(next_.begin(), next_.end(), 0);
            while (Wide pushed = dfs(s, t, std::numeric_limits<Wide>::max())) total += pushed;
        }
        return total;
    }

    /// Nodes reachable from s in the residual graph after run().
    std::vector<bool> source_side(std::size_t s) const {
        std::vector<bool> seen(adj_.size(), false);
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t a : adj_[u]) {
                const auto& arc = arcs_[a];
                if (arc.cap > 0 && !seen[arc.to]) {
                    seen[arc.to] = true;
                    stack.push_back(arc.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        std::size_t to;
        Wide cap;
    };

    bool bfs(std::size_t s, std::size_t t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<std::size_t> queue;
        level_[s] = 0;
        queue.push(s);
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop();
            for (std::size_t a : adj_[u]) {
                const auto& arc = arcs_[a];
                if (arc.cap > 0 && level_[arc.to] < 0) {
                    level_[arc.to] = level_[u] + 1;
                    queue.push(arc.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    Wide dfs(std::size_t u, std::size_t t, Wide limit) {
        if (u == t) return limit;
        for (std::size_t& i = next_[u]; i < adj_[u].size(); ++i) {
            const std::size_t a = adj_[u][i];
            const std::size_t to = arcs_[a].to;
            if (arcs_[a].cap <= 0 || level_[to] != level_[u] + 1) continue;
            if (Wide pushed = dfs(to, t, std::min(limit, arcs_[a].cap))) {
                arcs_[a].cap -= pushed;
                arcs_[a ^ 1].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<std::size_t>> adj_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

}  // namespace bilevel::detail
