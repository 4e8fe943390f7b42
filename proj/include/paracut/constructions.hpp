#pragma once

// Reductions from ratio objectives to parametric minimum cut.
//
// Each builder produces a network whose finite s-t cuts correspond one-to-one
// with the problem's candidate sets S, together with a ReductionMapping that
// translates between the two worlds.  The translation is affine: writing
// lambda for the problem parameter and p for the network parameter,
//
//     cut(X_S at p)  =  offset(p)  +  sign * (num(S) - lambda(p) * den(S))
//
// holds for every candidate S, where X_S is the canonical source side for S
// and offset is a line in p that does not depend on S.  Minimizing the cut
// therefore optimizes num - lambda*den, which answers the "is there a set
// with ratio better than lambda?" question for the ratio solver.
//
// The offset is not derived symbolically: each builder evaluates the cut line
// of the canonical side of a reference set and subtracts that set's objective
// line.  Hand-derived offsets would have to track every shrunken arc; the
// constructive form cannot drift out of sync with the construction, and the
// identity is verified for random sets in the test suite.
//
// Construction notes.
//   Normalized cut: one selector node per edge pays lambda*w' unless both
//     endpoints sit on the source side (infinite arcs enforce the "both"),
//     so small cuts are rewarded for the similarity they keep inside.  The
//     inside seed edge is shrunk into s, the outside seed edge and its
//     endpoints into t; candidate sets are exactly those containing both
//     inside endpoints and neither outside endpoint.
//   Ratio regions: node v pays lambda*q_v on a source arc when left out
//     (positive weight) or on a sink arc when taken (negative weight).
//   Densest subgraph: selector nodes pay w_e for every edge NOT kept inside,
//     node arcs pay lambda*q_v for every node kept; minimizing the cut
//     maximizes C(S,S) - lambda*V(S).  To keep sink capacities nonnegative
//     and monotone the network runs on p = lambda_hi - lambda.

#include <utility>
#include <vector>

#include "paracut/parametric.hpp"
#include "paracut/problems.hpp"

namespace paracut {

struct ReductionMapping {
    static constexpr int kInSource = -1, kInSink = -2;

    int graph_nodes = 0;
    std::vector<int> node_of;    // graph node -> network node, or kInSource/kInSink
    std::vector<int> gadget_of;  // edge index -> selector node, or -1
    NodeSet forced_in, forced_out;

    Rational offset_const, offset_slope;  // offset line, in network parameter p
    bool negated = false;                 // lambda = origin - p instead of lambda = p
    Rational origin;
    int sign = 1;  // +1: min cut minimizes num - lambda*den; -1: maximizes it

    Rational param_of(const Rational& lambda) const { return negated ? origin - lambda : lambda; }
    Rational lambda_of(const Rational& p) const { return negated ? origin - p : p; }
    Rational offset_at(const Rational& p) const { return offset_const + offset_slope * p; }

    // Value of num(S) - lambda*den(S) recovered from a minimum-cut value.
    Rational g_of_cut(const Rational& p, const Rational& cut) const {
        Rational d = cut - offset_at(p);
        return sign < 0 ? -d : d;
    }

    // The objective line of a set, expressed in the network parameter.
    CutLine objective_line_in_p(const RatioParts& parts) const {
        CutLine line;
        if (negated) {
            line.intercept = parts.num - origin * parts.den;
            line.slope = parts.den;
        } else {
            line.intercept = parts.num;
            line.slope = -parts.den;
        }
        if (sign < 0) {
            line.intercept = -line.intercept;
            line.slope = -line.slope;
        }
        return line;
    }
};

inline NodeSet decode(const ReductionMapping& map, const boost::dynamic_bitset<>& source_side) {
    NodeSet s = map.forced_in;
    for (int v = 1; v <= map.graph_nodes; ++v) {
        int id = map.node_of[static_cast<size_t>(v)];
        if (id >= 0 && source_side.test(static_cast<size_t>(id))) s.set(static_cast<size_t>(v));
    }
    return s;
}

// Cheapest source side whose decoded set is S: the source, S's own nodes,
// and every selector whose edge lies inside S.
inline boost::dynamic_bitset<> canonical_source_side(const WeightedGraph& g,
                                                     const ParametricNetwork& net,
                                                     const ReductionMapping& map,
                                                     const NodeSet& s) {
    require_node_set(g, s, "canonical_source_side");
    if (!map.forced_in.is_subset_of(s)) throw Error("set drops a seed-in node");
    if ((map.forced_out & s).any()) throw Error("set contains a seed-out node");
    boost::dynamic_bitset<> side(static_cast<size_t>(net.node_count));
    side.set(static_cast<size_t>(net.source));
    for (int v = 1; v <= map.graph_nodes; ++v) {
        int id = map.node_of[static_cast<size_t>(v)];
        if (id >= 0 && s.test(static_cast<size_t>(v))) side.set(static_cast<size_t>(id));
    }
    for (size_t k = 0; k < g.edges.size(); ++k) {
        int id = map.gadget_of[k];
        if (id >= 0 && s.test(static_cast<size_t>(g.edges[k].i)) &&
            s.test(static_cast<size_t>(g.edges[k].j)))
            side.set(static_cast<size_t>(id));
    }
    return side;
}

namespace detail {

// lambda_hi = (sum of numerator weights) * lcm(denominator-side denominators) + 1
// bounds every attainable ratio and every envelope breakpoint: numerators of
// candidate sets live in [0, U], and two distinct denominator values differ
// by at least 1/L.
inline Rational ratio_domain_bound(const Rational& weight_sum,
                                   const std::vector<Rational>& den_values) {
    BigInt l = 1;
    for (const Rational& v : den_values) l = boost::integer::lcm(l, v.denominator());
    return weight_sum * Rational(l) + Rational(1);
}

struct Builder {
    ParametricNetwork net;
    ReductionMapping map;

    void start(const WeightedGraph& g) {
        map.graph_nodes = g.node_count;
        map.node_of.assign(static_cast<size_t>(g.node_count) + 1, 0);
        map.gadget_of.assign(g.edges.size(), -1);
        map.forced_in = make_node_set(g);
        map.forced_out = make_node_set(g);
        net.node_count = 2;  // 0 = source, 1 = sink
        net.source = 0;
        net.sink = 1;
    }

    int fresh_node() { return net.node_count++; }

    void place_nodes(const WeightedGraph& g) {
        for (int v = 1; v <= g.node_count; ++v) {
            size_t sv = static_cast<size_t>(v);
            if (map.forced_in.test(sv))
                map.node_of[sv] = ReductionMapping::kInSource;
            else if (map.forced_out.test(sv))
                map.node_of[sv] = ReductionMapping::kInSink;
            else
                map.node_of[sv] = fresh_node();
        }
    }

    int net_id(int v) const {
        int id = map.node_of[static_cast<size_t>(v)];
        if (id == ReductionMapping::kInSource) return net.source;
        if (id == ReductionMapping::kInSink) return net.sink;
        return id;
    }

    // Adds an arc unless it can never cross a cut (self arcs after shrinking,
    // arcs into the source, arcs out of the sink).  Source-to-sink arcs stay:
    // they shift every cut by the same line, which the offset absorbs.
    void emit(int from, int to, ExtendedCapacity constant, Rational slope) {
        if (from == to || to == net.source || from == net.sink) return;
        net.arcs.push_back(ParametricArc{from, to, std::move(constant), std::move(slope)});
    }

    // Undirected numerator edge: w crosses whenever the endpoints split.
    void emit_numerator_edge(int u, int v, const Rational& w) {
        if (w.is_zero()) return;
        emit(u, v, ExtendedCapacity(w), Rational(0));
        emit(v, u, ExtendedCapacity(w), Rational(0));
    }

    // Selector gadget: pay the s->y capacity unless y joins the source side,
    // which the infinite arcs allow only when both endpoints did.
    void emit_selector(size_t edge_index, int u, int v, Rational constant, Rational slope) {
        if (constant.is_zero() && slope.is_zero()) return;
        if (u == net.sink || v == net.sink) return;  // can never be inside
        int y = fresh_node();
        map.gadget_of[edge_index] = y;
        emit(net.source, y, ExtendedCapacity(std::move(constant)), std::move(slope));
        emit(y, u, ExtendedCapacity::infinity(), Rational(0));
        emit(y, v, ExtendedCapacity::infinity(), Rational(0));
    }

    // Fix the offset so that cut(X_S) = offset + sign*(num - lambda*den)
    // holds; anchoring it at one reference set fixes it for all of them.
    void anchor_offset(const WeightedGraph& g, const ProblemKind& kind, const NodeSet& ref) {
        CutLine anchor = cut_line(net, canonical_source_side(g, net, map, ref));
        CutLine obj = map.objective_line_in_p(objective_parts(g, ref, kind));
        map.offset_const = anchor.intercept - obj.intercept;
        map.offset_slope = anchor.slope - obj.slope;
    }
};

}  // namespace detail

inline std::pair<ParametricNetwork, ReductionMapping> build_lambda_nc(const WeightedGraph& g,
                                                                      const EdgeSeed& seed_in,
                                                                      const EdgeSeed& seed_out) {
    require_valid(g);
    ProblemKind kind = NormalizedCut{seed_in, seed_out};
    require_valid_seeds(g, kind);
    int e_in = find_edge(g, seed_in.i, seed_in.j);
    int e_out = find_edge(g, seed_out.i, seed_out.j);

    detail::Builder b;
    b.start(g);
    b.map.forced_in.set(static_cast<size_t>(seed_in.i));
    b.map.forced_in.set(static_cast<size_t>(seed_in.j));
    b.map.forced_out.set(static_cast<size_t>(seed_out.i));
    b.map.forced_out.set(static_cast<size_t>(seed_out.j));
    b.place_nodes(g);

    Rational weight_sum;
    std::vector<Rational> dens;
    for (size_t k = 0; k < g.edges.size(); ++k) {
        const Edge& e = g.edges[k];
        weight_sum += e.w;
        dens.push_back(e.w_prime);
        int u = b.net_id(e.i), v = b.net_id(e.j);
        if (static_cast<int>(k) != e_in && static_cast<int>(k) != e_out)
            b.emit_selector(k, u, v, Rational(0), e.w_prime);
        b.emit_numerator_edge(u, v, e.w);
    }
    b.net.lambda_lo = Rational(0);
    b.net.lambda_hi = detail::ratio_domain_bound(weight_sum, dens);
    b.anchor_offset(g, kind, b.map.forced_in);
    require_valid(b.net);
    return {std::move(b.net), std::move(b.map)};
}

inline std::pair<ParametricNetwork, ReductionMapping> build_lambda_rr(const WeightedGraph& g,
                                                                      int source_node,
                                                                      int sink_node) {
    require_valid(g);
    ProblemKind kind = RatioRegions{source_node, sink_node};
    require_valid_seeds(g, kind);

    detail::Builder b;
    b.start(g);
    b.map.forced_in.set(static_cast<size_t>(source_node));
    b.map.forced_out.set(static_cast<size_t>(sink_node));
    b.place_nodes(g);

    Rational weight_sum;
    std::vector<Rational> dens;
    for (int v = 1; v <= g.node_count; ++v) {
        const Rational& q = g.node_weights[static_cast<size_t>(v)];
        dens.push_back(q);
        if (q > 0)
            b.emit(b.net.source, b.net_id(v), ExtendedCapacity(Rational(0)), q);
        else if (q < 0)
            b.emit(b.net_id(v), b.net.sink, ExtendedCapacity(Rational(0)), -q);
    }
    for (const Edge& e : g.edges) {
        weight_sum += e.w;
        b.emit_numerator_edge(b.net_id(e.i), b.net_id(e.j), e.w);
    }
    b.net.lambda_lo = Rational(0);
    b.net.lambda_hi = detail::ratio_domain_bound(weight_sum, dens);
    b.anchor_offset(g, kind, b.map.forced_in);
    require_valid(b.net);
    return {std::move(b.net), std::move(b.map)};
}

inline std::pair<ParametricNetwork, ReductionMapping> build_densest(const WeightedGraph& g) {
    require_valid(g);
    ProblemKind kind = DensestSubgraph{Direction::maximize};

    detail::Builder b;
    b.start(g);
    b.place_nodes(g);

    Rational weight_sum;
    std::vector<Rational> dens;
    for (int v = 1; v <= g.node_count; ++v) {
        const Rational& q = g.node_weights[static_cast<size_t>(v)];
        if (!(q > 0)) throw Error("densest subgraph requires positive node weights");
        dens.push_back(q);
    }
    for (const Edge& e : g.edges) weight_sum += e.w;

    Rational lambda_hi = detail::ratio_domain_bound(weight_sum, dens);
    b.map.negated = true;
    b.map.origin = lambda_hi;
    b.map.sign = -1;
    b.net.lambda_lo = Rational(0);
    b.net.lambda_hi = lambda_hi;  // p runs over [0, lambda_hi] as lambda runs down to 0

    for (size_t k = 0; k < g.edges.size(); ++k) {
        const Edge& e = g.edges[k];
        b.emit_selector(k, b.net_id(e.i), b.net_id(e.j), e.w, Rational(0));
    }
    for (int v = 1; v <= g.node_count; ++v) {
        const Rational& q = g.node_weights[static_cast<size_t>(v)];
        // capacity lambda*q = (lambda_hi - p)*q: monotone nonincreasing in p
        b.emit(b.net_id(v), b.net.sink, ExtendedCapacity(lambda_hi * q), -q);
    }
    b.anchor_offset(g, kind, make_node_set(g));  // empty reference set
    require_valid(b.net);
    return {std::move(b.net), std::move(b.map)};
}

}  // namespace paracut
