#pragma once

// Exhaustive reference implementations.  These deliberately share no logic
// with the solvers: objectives are recomputed with raw loops over the edge
// list and cuts are priced by scanning arcs, so agreement between a solver
// and its oracle is meaningful evidence, not a tautology.
//
// Both enumerations walk subsets in increasing bitmask order and keep the
// first strict improvement, so ties resolve to the smallest bitmask and the
// results are deterministic.

#include <boost/dynamic_bitset.hpp>

#include "paracut/flow_network.hpp"
#include "paracut/problems.hpp"

namespace paracut {

struct OracleSolution {
    Rational ratio;
    NodeSet set;
    unsigned long long evaluated = 0;  // feasible sets examined
};

inline OracleSolution brute_force_ratio(const WeightedGraph& g, const ProblemKind& kind,
                                        int max_nodes = 25) {
    int n = g.node_count;
    if (n > max_nodes) throw Error("brute_force_ratio: graph too large to enumerate");

    int need_in_a = 0, need_in_b = 0, need_out_a = 0, need_out_b = 0;
    bool forbid_empty = false;
    bool maximize = false;
    if (const auto* nc = std::get_if<NormalizedCut>(&kind)) {
        need_in_a = nc->seed_in.i, need_in_b = nc->seed_in.j;
        need_out_a = nc->seed_out.i, need_out_b = nc->seed_out.j;
    } else if (const auto* np = std::get_if<NormalizedCutPrime>(&kind)) {
        need_in_a = np->seed_in.i, need_in_b = np->seed_in.j;
        need_out_a = np->seed_out.i, need_out_b = np->seed_out.j;
    } else if (const auto* rr = std::get_if<RatioRegions>(&kind)) {
        need_in_a = need_in_b = rr->source_node;
        need_out_a = need_out_b = rr->sink_node;
    } else {
        forbid_empty = true;
        maximize = std::get<DensestSubgraph>(kind).direction == Direction::maximize;
    }

    OracleSolution best;
    bool found = false;
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        auto in = [&](int v) { return (mask >> (v - 1)) & 1ULL; };
        if (need_in_a && (!in(need_in_a) || !in(need_in_b))) continue;
        if (need_out_a && (in(need_out_a) || in(need_out_b))) continue;
        if (forbid_empty && mask == 0) continue;

        Rational num, den;
        if (std::holds_alternative<NormalizedCut>(kind)) {
            for (const Edge& e : g.edges) {
                if (in(e.i) != in(e.j)) num += e.w;
                if (in(e.i) && in(e.j)) den += e.w_prime;
            }
        } else if (std::holds_alternative<NormalizedCutPrime>(kind)) {
            for (const Edge& e : g.edges) {
                if (in(e.i) != in(e.j)) num += e.w;
                if (in(e.i) || in(e.j)) den += e.w;
            }
        } else if (std::holds_alternative<RatioRegions>(kind)) {
            for (const Edge& e : g.edges)
                if (in(e.i) != in(e.j)) num += e.w;
            for (int v = 1; v <= n; ++v)
                if (in(v)) den += g.node_weights[static_cast<size_t>(v)];
        } else {
            for (const Edge& e : g.edges)
                if (in(e.i) && in(e.j)) num += e.w;
            for (int v = 1; v <= n; ++v)
                if (in(v)) den += g.node_weights[static_cast<size_t>(v)];
        }
        if (!(den > 0)) continue;

        ++best.evaluated;
        Rational ratio = num / den;
        bool better = !found || (maximize ? ratio > best.ratio : ratio < best.ratio);
        if (better) {
            found = true;
            best.ratio = ratio;
            best.set = NodeSet(static_cast<size_t>(n) + 1);
            for (int v = 1; v <= n; ++v)
                if (in(v)) best.set.set(static_cast<size_t>(v));
        }
    }
    if (!found) throw InfeasibleError("no feasible set with positive denominator");
    return best;
}

struct OracleCut {
    Rational value;
    boost::dynamic_bitset<> source_set;  // smallest-bitmask minimum cut == the
                                         // inclusion-minimal one
};

inline OracleCut brute_force_min_cut(const FlowNetwork& net, int max_free = 25) {
    require_valid(net);
    std::vector<int> free;
    for (int v = 0; v < net.node_count; ++v)
        if (v != net.source && v != net.sink) free.push_back(v);
    if (static_cast<int>(free.size()) > max_free)
        throw Error("brute_force_min_cut: network too large to enumerate");

    OracleCut best;
    bool found = false;
    for (unsigned long long mask = 0; mask < (1ULL << free.size()); ++mask) {
        boost::dynamic_bitset<> side(static_cast<size_t>(net.node_count));
        side.set(static_cast<size_t>(net.source));
        for (size_t k = 0; k < free.size(); ++k)
            if ((mask >> k) & 1ULL) side.set(static_cast<size_t>(free[k]));

        Rational value;
        bool finite = true;
        for (const Arc& a : net.arcs) {
            if (!side.test(static_cast<size_t>(a.from)) || side.test(static_cast<size_t>(a.to)))
                continue;
            if (a.cap.is_infinite()) {
                finite = false;
                break;
            }
            value += a.cap.value();
        }
        if (!finite) continue;
        if (!found || value < best.value) {
            found = true;
            best.value = value;
            best.source_set = side;
        }
    }
    if (!found) throw InfeasibleError("no finite cut separates source from sink");
    return best;
}

}  // namespace paracut
