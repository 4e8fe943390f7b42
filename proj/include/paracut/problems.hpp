#pragma once

// The ratio objectives the library optimizes.  Each kind pairs a numerator
// with a denominator over node sets S of a weighted graph:
//
//   NormalizedCut        C(S, ~S; w)  /  C(S, S; w')     minimized
//   NormalizedCutPrime   C(S, ~S; w)  /  C(S, V; w)      minimized
//   RatioRegions         C(S, ~S; w)  /  sum_{v in S} q_v   minimized
//   DensestSubgraph      C(S, S; w)   /  sum_{v in S} q_v   max or min
//
// where C(A, B; .) sums edge weights with one endpoint in A and one in B
// (each edge once) and q_v are node weights.  The cut problems take seeds:
// normalized cuts take an inside edge whose endpoints must lie in S and an
// outside edge whose endpoints must not, ratio regions take an inside node
// and an outside node.  A set is feasible when it honors the seeds and its
// denominator is positive.

#include <variant>

#include "paracut/graph.hpp"

namespace paracut {

struct EdgeSeed {
    int i = 0, j = 0;  // endpoints of an existing edge, in either order
};

struct NormalizedCut {
    EdgeSeed seed_in, seed_out;
};

struct NormalizedCutPrime {
    EdgeSeed seed_in, seed_out;
};

struct RatioRegions {
    int source_node = 0, sink_node = 0;
};

enum class Direction { maximize, minimize };

struct DensestSubgraph {
    Direction direction = Direction::maximize;
};

using ProblemKind = std::variant<NormalizedCut, NormalizedCutPrime, RatioRegions, DensestSubgraph>;

inline bool is_maximize(const ProblemKind& kind) {
    const auto* d = std::get_if<DensestSubgraph>(&kind);
    return d && d->direction == Direction::maximize;
}

struct RatioParts {
    Rational num, den;
};

inline RatioParts objective_parts(const WeightedGraph& g, const NodeSet& s,
                                  const ProblemKind& kind) {
    require_node_set(g, s, "objective_parts");
    NodeSet full = make_node_set(g);
    for (int v = 1; v <= g.node_count; ++v) full.set(static_cast<size_t>(v));
    NodeSet comp = full - s;
    RatioParts p;
    if (std::holds_alternative<NormalizedCut>(kind)) {
        p.num = capacity(g, s, comp, WeightKind::numerator);
        p.den = capacity(g, s, s, WeightKind::denominator);
    } else if (std::holds_alternative<NormalizedCutPrime>(kind)) {
        p.num = capacity(g, s, comp, WeightKind::numerator);
        p.den = capacity(g, s, full, WeightKind::numerator);
    } else if (std::holds_alternative<RatioRegions>(kind)) {
        p.num = capacity(g, s, comp, WeightKind::numerator);
        p.den = node_weight_sum(g, s);
    } else {
        p.num = capacity(g, s, s, WeightKind::numerator);
        p.den = node_weight_sum(g, s);
    }
    return p;
}

inline bool is_feasible(const WeightedGraph& g, const NodeSet& s, const ProblemKind& kind) {
    require_node_set(g, s, "is_feasible");
    auto in = [&](int v) { return s.test(static_cast<size_t>(v)); };
    if (const auto* nc = std::get_if<NormalizedCut>(&kind)) {
        if (!in(nc->seed_in.i) || !in(nc->seed_in.j)) return false;
        if (in(nc->seed_out.i) || in(nc->seed_out.j)) return false;
    } else if (const auto* np = std::get_if<NormalizedCutPrime>(&kind)) {
        if (!in(np->seed_in.i) || !in(np->seed_in.j)) return false;
        if (in(np->seed_out.i) || in(np->seed_out.j)) return false;
    } else if (const auto* rr = std::get_if<RatioRegions>(&kind)) {
        if (!in(rr->source_node) || in(rr->sink_node)) return false;
    } else {
        if (s.none()) return false;
    }
    return objective_parts(g, s, kind).den > 0;
}

inline Rational evaluate_ratio(const WeightedGraph& g, const NodeSet& s, const ProblemKind& kind) {
    RatioParts p = objective_parts(g, s, kind);
    if (p.den.is_zero()) throw UndefinedRatioError("ratio denominator is zero");
    return p.num / p.den;
}

// Seeds must name existing edges / nodes; normalized-cut seed edges must not
// share an endpoint (the reduction would merge its terminals).
inline void require_valid_seeds(const WeightedGraph& g, const ProblemKind& kind) {
    auto check_pair = [&](const EdgeSeed& a, const EdgeSeed& b) {
        if (find_edge(g, a.i, a.j) < 0)
            throw ParseError("seed " + std::to_string(a.i) + "," + std::to_string(a.j) +
                             " is not an edge of the graph");
        if (find_edge(g, b.i, b.j) < 0)
            throw ParseError("seed " + std::to_string(b.i) + "," + std::to_string(b.j) +
                             " is not an edge of the graph");
        if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j)
            throw InfeasibleError("seed edges share an endpoint");
    };
    if (const auto* nc = std::get_if<NormalizedCut>(&kind)) {
        check_pair(nc->seed_in, nc->seed_out);
    } else if (const auto* np = std::get_if<NormalizedCutPrime>(&kind)) {
        check_pair(np->seed_in, np->seed_out);
    } else if (const auto* rr = std::get_if<RatioRegions>(&kind)) {
        if (rr->source_node < 1 || rr->source_node > g.node_count || rr->sink_node < 1 ||
            rr->sink_node > g.node_count)
            throw ParseError("seed node id out of range");
        if (rr->source_node == rr->sink_node)
            throw InfeasibleError("ratio-regions seeds name the same node");
    }
}

}  // namespace paracut
