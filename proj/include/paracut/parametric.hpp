#pragma once

// Networks whose arc capacities are affine functions of a parameter, and the
// exact lower envelope of their minimum-cut value over a parameter interval.
//
// For any fixed source side S the cut value is a line in the parameter; the
// minimum-cut value is therefore the pointwise minimum of finitely many lines:
// a concave piecewise-linear envelope.  breakpoints() recovers that envelope
// exactly by divide and conquer: solve both interval ends, intersect their
// cut lines, test the intersection, and recurse into subintervals that still
// disagree.  Each piece is then re-solved at its midpoint so the recorded
// source sets are the canonical (inclusion-minimal) optima of their piece
// interiors.
//
// When the network is monotone — capacities nondecreasing in the parameter on
// source-adjacent arcs, nonincreasing on sink-adjacent arcs, constant
// elsewhere — the minimal source sets grow with the parameter, the pieces
// nest, and the number of breakpoints is at most the number of non-terminal
// nodes.  Nothing in the enumeration relies on that; non-monotone networks
// simply lose the nesting guarantee.

#include <vector>

#include "paracut/mincut.hpp"

namespace paracut {

struct ParametricArc {
    int from = 0, to = 0;
    ExtendedCapacity constant;
    Rational slope;  // capacity at parameter p is constant + slope * p
};

struct ParametricNetwork {
    int node_count = 0;
    int source = 0, sink = 0;
    std::vector<ParametricArc> arcs;
    Rational lambda_lo, lambda_hi;  // closed parameter interval
};

inline void require_valid(const ParametricNetwork& net) {
    FlowNetwork shape;
    shape.node_count = net.node_count;
    shape.source = net.source;
    shape.sink = net.sink;
    require_valid(shape);
    if (net.lambda_hi < net.lambda_lo) throw Error("empty parameter interval");
    for (const ParametricArc& a : net.arcs) {
        if (a.from < 0 || a.from >= net.node_count || a.to < 0 || a.to >= net.node_count)
            throw Error("arc endpoint out of range");
        if (a.constant.is_infinite()) {
            if (!a.slope.is_zero()) throw Error("infinite arc with nonzero slope");
            continue;
        }
        // Affine in p, so nonnegativity at both ends covers the interval.
        if (a.constant.value() + a.slope * net.lambda_lo < 0 ||
            a.constant.value() + a.slope * net.lambda_hi < 0)
            throw Error("arc capacity negative inside the parameter interval");
    }
}

inline bool is_monotone(const ParametricNetwork& net) {
    for (const ParametricArc& a : net.arcs) {
        if (a.slope.is_zero()) continue;
        bool ok_source = a.from == net.source && a.slope > 0;
        bool ok_sink = a.to == net.sink && a.slope < 0;
        if (!ok_source && !ok_sink) return false;
    }
    return true;
}

inline FlowNetwork instantiate(const ParametricNetwork& net, const Rational& p) {
    if (p < net.lambda_lo || p > net.lambda_hi)
        throw Error("parameter outside the network's interval");
    FlowNetwork fixed;
    fixed.node_count = net.node_count;
    fixed.source = net.source;
    fixed.sink = net.sink;
    fixed.arcs.reserve(net.arcs.size());
    for (const ParametricArc& a : net.arcs) {
        ExtendedCapacity cap = a.constant.is_infinite()
                                   ? ExtendedCapacity::infinity()
                                   : ExtendedCapacity(a.constant.value() + a.slope * p);
        fixed.arcs.push_back(Arc{a.from, a.to, cap});
    }
    return fixed;
}

inline CutResult min_cut_at(const ParametricNetwork& net, const Rational& p) {
    return min_cut(instantiate(net, p));
}

struct CutLine {
    Rational intercept, slope;
    Rational at(const Rational& p) const { return intercept + slope * p; }
    friend bool operator==(const CutLine& a, const CutLine& b) {
        return a.intercept == b.intercept && a.slope == b.slope;
    }
    friend bool operator!=(const CutLine& a, const CutLine& b) { return !(a == b); }
};

// Cut value of a fixed source side as a line in the parameter.
inline CutLine cut_line(const ParametricNetwork& net, const boost::dynamic_bitset<>& side) {
    if (side.size() != static_cast<size_t>(net.node_count))
        throw Error("cut_line: set sized for a different network");
    CutLine line;
    for (const ParametricArc& a : net.arcs) {
        if (!side.test(static_cast<size_t>(a.from)) || side.test(static_cast<size_t>(a.to)))
            continue;
        if (a.constant.is_infinite()) throw Error("cut_line: cut crosses an infinite arc");
        line.intercept += a.constant.value();
        line.slope += a.slope;
    }
    return line;
}

struct Piece {
    boost::dynamic_bitset<> source_set;  // canonical minimal optimum on the piece
    CutLine line;                        // envelope restricted to the piece
};

struct BreakpointSequence {
    Rational lambda_lo, lambda_hi;
    std::vector<Rational> lambdas;  // strictly increasing breakpoints
    std::vector<Piece> pieces;      // lambdas.size() + 1 pieces, left to right
    int cut_calls = 0;

    Rational lower_bound(size_t k) const { return k == 0 ? lambda_lo : lambdas[k - 1]; }
    Rational upper_bound(size_t k) const {
        return k == lambdas.size() ? lambda_hi : lambdas[k];
    }

    // Piece covering p; at a breakpoint the left piece wins, which matches
    // the minimal minimum cut there.
    const Piece& piece_at(const Rational& p) const {
        if (p < lambda_lo || p > lambda_hi) throw Error("parameter outside the sequence");
        size_t k = 0;
        while (k < lambdas.size() && lambdas[k] < p) ++k;
        return pieces[k];
    }

    Rational envelope_at(const Rational& p) const { return piece_at(p).line.at(p); }
};

inline BreakpointSequence breakpoints(const ParametricNetwork& net) {
    require_valid(net);
    BreakpointSequence seq;
    seq.lambda_lo = net.lambda_lo;
    seq.lambda_hi = net.lambda_hi;

    auto solve_at = [&](const Rational& p) {
        ++seq.cut_calls;
        return min_cut_at(net, p);
    };
    auto line_of = [&](const CutResult& cut) { return cut_line(net, cut.source_set); };

    CutResult at_lo = solve_at(net.lambda_lo);
    if (net.lambda_lo != net.lambda_hi) {
        CutResult at_hi = solve_at(net.lambda_hi);
        // Recursion depth is bounded by the number of envelope lines; each
        // level either stops or splits at a strictly interior new line.
        auto rec = [&](auto&& self, const Rational& lo, const CutLine& line_lo,
                       const Rational& hi, const CutLine& line_hi) -> void {
            if (line_lo == line_hi) return;
            // Distinct lines both touching a concave envelope cannot be
            // parallel, and their crossing lies inside [lo, hi].
            Rational cross =
                (line_hi.intercept - line_lo.intercept) / (line_lo.slope - line_hi.slope);
            CutResult mid = solve_at(cross);
            if (mid.value == line_lo.at(cross)) {
                seq.lambdas.push_back(cross);  // envelope touches the crossing
                return;
            }
            CutLine line_mid = line_of(mid);
            self(self, lo, line_lo, cross, line_mid);
            self(self, cross, line_mid, hi, line_hi);
        };
        rec(rec, net.lambda_lo, line_of(at_lo), net.lambda_hi, line_of(at_hi));
    }

    for (size_t k = 0; k <= seq.lambdas.size(); ++k) {
        Rational mid = midpoint(seq.lower_bound(k), seq.upper_bound(k));
        CutResult cut = solve_at(mid);
        seq.pieces.push_back(Piece{cut.source_set, line_of(cut)});
    }
    return seq;
}

}  // namespace paracut
