#include "bilevel/reductions.hpp"

namespace bilevel {

namespace {

constexpr Variant cs_ds(Setting s) { return {Objective::Sum, Objective::Sum, s}; }
constexpr Variant cb_ds(Setting s) { return {Objective::Bottleneck, Objective::Sum, s}; }
constexpr Variant cs_db(Setting s) { return {Objective::Sum, Objective::Bottleneck, s}; }
constexpr Variant cb_db(Setting s) { return {Objective::Bottleneck, Objective::Bottleneck, s}; }

class Builder {
public:
    Id add(Owner owner, Weight wl, Weight wf, std::string label) {
        vertices_.push_back({owner, wl, wf});
        labels_.push_back(std::move(label));
        return static_cast<Id>(vertices_.size() - 1);
    }
    void link(Id u, Id v) { edges_.emplace_back(u, v); }

    ReductionOutput finish(std::vector<Target> targets, std::map<std::string, Weight> constants) {
        ReductionOutput out;
        out.graph = BisGraph(std::move(vertices_), std::move(edges_));
        out.targets = std::move(targets);
        out.constants = std::move(constants);
        out.labels = std::move(labels_);
        return out;
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

void check_k(int k) {
    if (k < 1) fail(ErrorCode::BadParameter, "k must be at least 1");
}

std::string idx(std::size_t i) { return std::to_string(i + 1); }

// Copy vertices v^i (leaders, wl 1, wf M) and edge followers v_e; copy
// classes are cliques unless the caller subdivides them.
struct Copies {
    std::vector<std::vector<Id>> copy;  // copy[i][v]
};

Copies add_copies(Builder& b, const PlainGraph& g, int k, Weight m) {
    Copies c;
    c.copy.assign(static_cast<std::size_t>(k), std::vector<Id>(g.size()));
    for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
        for (std::size_t v = 0; v < g.size(); ++v) {
            c.copy[i][v] = b.add(Owner::Leader, 1, m, "v" + idx(v) + "^" + idx(i));
        }
    }
    for (const auto& [u, v] : g.edges()) {
        const Id e = b.add(Owner::Follower, 0, m, "e" + std::to_string(u + 1) + "_" + std::to_string(v + 1));
        for (const auto& cls : c.copy) {
            b.link(cls[static_cast<std::size_t>(u)], e);
            b.link(cls[static_cast<std::size_t>(v)], e);
        }
    }
    return c;
}

}  // namespace

void validate(const B2cnfFormula& f) {
    if (f.n1 < 0 || f.n2 < 0) fail(ErrorCode::MalformedClause, "variable counts must be non-negative");
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const auto& clause = f.clauses[i];
        if (clause.size() != 3) {
            fail(ErrorCode::MalformedClause,
                 "clause " + idx(i) + " has " + std::to_string(clause.size()) + " literals, expected 3");
        }
        for (const auto& lit : clause) {
            const int n = lit.side == Side::X ? f.n1 : f.n2;
            if (lit.var < 1 || lit.var > n) {
                fail(ErrorCode::MalformedClause, "clause " + idx(i) + " names variable " + std::to_string(lit.var) +
                                                     " outside 1.." + std::to_string(n));
            }
        }
    }
}

ReductionOutput b2cnf_to_bis(const B2cnfFormula& f) {
    validate(f);
    const auto m = static_cast<Weight>(f.clauses.size());
    const Weight n2 = f.n2;
    const Weight r = m + n2 + 2;
    const Weight big = (m + 1) * r + m + n2 + 2;

    Builder b;
    // pos[v] is the vertex of literal v, neg[v] that of its negation.
    std::vector<Id> ax_pos, ax_neg, by_pos, by_neg;
    for (int i = 0; i < f.n1; ++i) {
        ax_pos.push_back(b.add(Owner::Leader, big, 0, "a" + idx(static_cast<std::size_t>(i))));
        ax_neg.push_back(b.add(Owner::Leader, big, 0, "~a" + idx(static_cast<std::size_t>(i))));
        b.link(ax_pos.back(), ax_neg.back());
    }
    for (int i = 0; i < f.n2; ++i) {
        by_pos.push_back(b.add(Owner::Follower, 1, big, "b" + idx(static_cast<std::size_t>(i))));
        by_neg.push_back(b.add(Owner::Follower, 1, big, "~b" + idx(static_cast<std::size_t>(i))));
        b.link(by_pos.back(), by_neg.back());
    }
    std::vector<Id> hubs;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        std::vector<Id> gadget;
        for (std::size_t j = 0; j < 3; ++j) {
            const Id c = b.add(Owner::Follower, 1, 10, "c" + idx(i) + "^" + idx(j));
            const auto& lit = f.clauses[i][j];
            const auto var = static_cast<std::size_t>(lit.var - 1);
            const auto& opposite = lit.side == Side::X ? (lit.neg ? ax_pos : ax_neg) : (lit.neg ? by_pos : by_neg);
            b.link(c, opposite[var]);
            gadget.push_back(c);
        }
        gadget.push_back(b.add(Owner::Follower, r, 5, "c" + idx(i)));
        hubs.push_back(gadget.back());
        for (std::size_t x = 0; x < 4; ++x)
            for (std::size_t y = x + 1; y < 4; ++y) b.link(gadget[x], gadget[y]);
    }
    const Id z = b.add(Owner::Follower, 0, 1, "z");
    for (Id c : hubs) b.link(c, z);

    const Weight threshold = big * f.n1 + r;
    return b.finish({{cs_ds(Setting::Optimistic), threshold},
                     {cs_ds(Setting::Pessimistic), threshold},
                     {cb_ds(Setting::Optimistic), 1},
                     {cb_ds(Setting::Pessimistic), 1}},
                    {{"M", big}, {"R", r}, {"m", m}, {"n1", f.n1}, {"n2", f.n2}});
}

ReductionOutput vc_to_bis(const PlainGraph& g, int k) {
    check_k(k);
    const Weight m = 1;
    Builder b;
    const auto copies = add_copies(b, g, k, m);
    for (const auto& cls : copies.copy)
        for (std::size_t u = 0; u < cls.size(); ++u)
            for (std::size_t v = u + 1; v < cls.size(); ++v) b.link(cls[u], cls[v]);
    return b.finish({{cb_db(Setting::Pessimistic), 1}}, {{"M", m}, {"k", k}});
}

ReductionOutput planar_vc_to_bipartite_bis(const PlainGraph& g, int k) {
    check_k(k);
    const auto n = static_cast<Weight>(g.size());
    const auto m = static_cast<Weight>(g.edges().size());
    const Weight big = n + m + 101;
    Builder b;
    std::vector<Id> a;
    for (std::size_t i = 0; i < g.size(); ++i) {
        a.push_back(b.add(Owner::Leader, 0, 0, "a" + idx(i)));
        b.link(a.back(), b.add(Owner::Leader, 1, 0, "a'" + idx(i)));
    }
    for (std::size_t j = 0; j < g.edges().size(); ++j) {
        const Id bj = b.add(Owner::Follower, 0, 100, "b" + idx(j));
        b.link(bj, b.add(Owner::Follower, big, 1, "b'" + idx(j)));
        const auto& [u, v] = g.edges()[j];
        b.link(a[static_cast<std::size_t>(u)], bj);
        b.link(a[static_cast<std::size_t>(v)], bj);
    }
    const Weight threshold = m * big + n - k;
    return b.finish({{cs_ds(Setting::Optimistic), threshold}, {cs_ds(Setting::Pessimistic), threshold}},
                    {{"M", big}, {"k", k}, {"m", m}, {"n", n}});
}

ReductionOutput vc_to_bipartite_bis(const PlainGraph& g, int k) {
    check_k(k);
    const Weight m = 1;
    Builder b;
    const auto copies = add_copies(b, g, k, m);
    for (std::size_t i = 0; i < copies.copy.size(); ++i) {
        const auto& cls = copies.copy[i];
        std::vector<Id> primed;
        for (std::size_t v = 0; v < cls.size(); ++v) {
            primed.push_back(b.add(Owner::Leader, 1, m, "v" + idx(v) + "^" + idx(i) + "'"));
            b.link(cls[v], primed.back());
        }
        for (std::size_t u = 0; u < cls.size(); ++u) {
            for (std::size_t v = u + 1; v < cls.size(); ++v) {
                const Id mid = b.add(Owner::Follower, 0, m, "v" + idx(u) + "v" + idx(v) + "^" + idx(i) + "'");
                b.link(primed[u], mid);
                b.link(primed[v], mid);
            }
        }
    }
    return b.finish({{cb_db(Setting::Pessimistic), 1}, {cb_ds(Setting::Optimistic), 1}, {cb_ds(Setting::Pessimistic), 1}},
                    {{"M", m}, {"k", k}});
}

ReductionOutput is_to_bis(const PlainGraph& g, int k) {
    check_k(k);
    Builder b;
    for (std::size_t v = 0; v < g.size(); ++v) b.add(Owner::Leader, 1, 1, "v" + idx(v));
    for (const auto& [u, v] : g.edges()) b.link(u, v);
    return b.finish({{cs_db(Setting::Optimistic), k}, {cs_db(Setting::Pessimistic), k}}, {{"k", k}});
}

}  // namespace bilevel
