#pragma once

// Directed s-t flow networks with exact rational capacities.  Arcs may be
// infinite; infinite arcs express hard constraints (an infinite arc never
// crosses a finite cut) and stay symbolic throughout.

#include <boost/dynamic_bitset.hpp>

#include <vector>

#include "paracut/rational.hpp"

namespace paracut {

struct Arc {
    int from = 0, to = 0;
    ExtendedCapacity cap;
};

// Nodes are 0-based; source and sink are ordinary node ids.
struct FlowNetwork {
    int node_count = 0;
    int source = 0, sink = 0;
    std::vector<Arc> arcs;
};

inline void require_valid(const FlowNetwork& net) {
    if (net.node_count < 2) throw Error("network needs at least source and sink");
    auto in_range = [&](int v) { return v >= 0 && v < net.node_count; };
    if (!in_range(net.source) || !in_range(net.sink)) throw Error("terminal id out of range");
    if (net.source == net.sink) throw Error("source equals sink");
    for (const Arc& a : net.arcs) {
        if (!in_range(a.from) || !in_range(a.to)) throw Error("arc endpoint out of range");
        if (!a.cap.is_infinite() && a.cap.value() < 0) throw Error("negative arc capacity");
    }
}

// Value of the cut (S, V \ S) where `source_side` holds S.  S must contain
// the source and exclude the sink; the value is the capacity sum over arcs
// leaving S, infinite if any infinite arc does.
inline ExtendedCapacity cut_value(const FlowNetwork& net,
                                  const boost::dynamic_bitset<>& source_side) {
    if (source_side.size() != static_cast<size_t>(net.node_count))
        throw Error("cut_value: set sized for a different network");
    if (!source_side.test(static_cast<size_t>(net.source)) ||
        source_side.test(static_cast<size_t>(net.sink)))
        throw Error("cut_value: set must contain the source and exclude the sink");
    ExtendedCapacity total;
    for (const Arc& a : net.arcs)
        if (source_side.test(static_cast<size_t>(a.from)) &&
            !source_side.test(static_cast<size_t>(a.to)))
            total += a.cap;
    return total;
}

// A flow assignment parallel to net.arcs, used as an optimality witness:
// a feasible flow whose value equals a cut's value proves both optimal.
struct FlowAssignment {
    Rational value;
    std::vector<Rational> arc_flow;
};

inline bool is_feasible_flow(const FlowNetwork& net, const FlowAssignment& f) {
    if (f.arc_flow.size() != net.arcs.size()) return false;
    std::vector<Rational> net_out(static_cast<size_t>(net.node_count));
    for (size_t k = 0; k < net.arcs.size(); ++k) {
        const Arc& a = net.arcs[k];
        const Rational& x = f.arc_flow[k];
        if (x < 0) return false;
        if (!a.cap.is_infinite() && x > a.cap.value()) return false;
        net_out[static_cast<size_t>(a.from)] += x;
        net_out[static_cast<size_t>(a.to)] -= x;
    }
    for (int v = 0; v < net.node_count; ++v) {
        if (v == net.source || v == net.sink) continue;
        if (!net_out[static_cast<size_t>(v)].is_zero()) return false;
    }
    if (net_out[static_cast<size_t>(net.source)] != f.value) return false;
    if (net_out[static_cast<size_t>(net.sink)] != -f.value) return false;
    return true;
}

}  // namespace paracut
