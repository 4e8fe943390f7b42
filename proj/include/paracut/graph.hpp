#pragma once

// Undirected weighted graphs.  Every edge carries two nonnegative weights:
// `w` feeds cut numerators (similarity across the split) and `w_prime` feeds
// denominators (similarity inside a region).  Most callers set them equal;
// keeping both allows objectives that weight the two roles differently.
//
// Nodes are 1-based.  Node sets are bitsets of size node_count + 1 with bit 0
// permanently clear, so `set[v]` reads naturally for a node id v.

#include <boost/dynamic_bitset.hpp>

#include <string>
#include <unordered_map>
#include <vector>

#include "paracut/rational.hpp"

namespace paracut {

using NodeSet = boost::dynamic_bitset<>;

struct Edge {
    int i = 0, j = 0;    // endpoints, always i < j
    Rational w;          // numerator weight, >= 0
    Rational w_prime;    // denominator weight, >= 0
};

struct WeightedGraph {
    int node_count = 0;
    std::vector<Rational> node_weights;  // size node_count + 1, index 0 unused
    std::vector<Edge> edges;
};

// Graph with n nodes, unit node weights, no edges.
inline WeightedGraph make_graph(int n) {
    WeightedGraph g;
    g.node_count = n;
    g.node_weights.assign(static_cast<size_t>(n) + 1, Rational(1));
    return g;
}

inline void add_edge(WeightedGraph& g, int i, int j, Rational w) {
    if (i > j) std::swap(i, j);
    g.edges.push_back(Edge{i, j, w, w});
}

inline void add_edge(WeightedGraph& g, int i, int j, Rational w, Rational w_prime) {
    if (i > j) std::swap(i, j);
    g.edges.push_back(Edge{i, j, std::move(w), std::move(w_prime)});
}

inline NodeSet make_node_set(const WeightedGraph& g, const std::vector<int>& ids = {}) {
    NodeSet s(static_cast<size_t>(g.node_count) + 1);
    for (int v : ids) {
        if (v < 1 || v > g.node_count)
            throw Error("node id " + std::to_string(v) + " out of range");
        s.set(static_cast<size_t>(v));
    }
    return s;
}

inline std::vector<int> set_members(const NodeSet& s) {
    std::vector<int> out;
    for (size_t v = s.find_first(); v != NodeSet::npos; v = s.find_next(v))
        out.push_back(static_cast<int>(v));
    return out;
}

// Structural invariants, reported rather than thrown so that callers building
// graphs from untrusted input can attach their own context.
inline std::vector<std::string> validate_graph(const WeightedGraph& g) {
    std::vector<std::string> bad;
    if (g.node_count < 1) bad.push_back("graph must have at least one node");
    if (g.node_weights.size() != static_cast<size_t>(g.node_count) + 1)
        bad.push_back("node weight table has wrong size");
    std::unordered_map<long long, int> seen;
    for (size_t k = 0; k < g.edges.size(); ++k) {
        const Edge& e = g.edges[k];
        std::string tag = "edge " + std::to_string(e.i) + "-" + std::to_string(e.j);
        if (e.i < 1 || e.j > g.node_count || e.i >= e.j) {
            bad.push_back(tag + ": endpoints must satisfy 1 <= i < j <= n");
            continue;
        }
        if (e.w < 0) bad.push_back(tag + ": negative weight");
        if (e.w_prime < 0) bad.push_back(tag + ": negative denominator weight");
        long long key = static_cast<long long>(e.i) * (g.node_count + 1) + e.j;
        if (!seen.emplace(key, static_cast<int>(k)).second)
            bad.push_back(tag + ": duplicate edge");
    }
    return bad;
}

inline void require_valid(const WeightedGraph& g) {
    auto bad = validate_graph(g);
    if (!bad.empty()) throw ParseError(bad.front());
}

inline void require_node_set(const WeightedGraph& g, const NodeSet& s,
                             const char* what = "node set") {
    if (s.size() != static_cast<size_t>(g.node_count) + 1)
        throw Error(std::string(what) + ": node set sized for a different graph");
    if (s.test(0)) throw Error(std::string(what) + ": node set uses reserved id 0");
}

enum class WeightKind { numerator, denominator };

// Total weight of edges with one endpoint in A and the other in B, each edge
// counted once.  A and B may overlap; capacity(g, S, S, k) sums the edges
// internal to S, and capacity(g, S, full, k) sums every edge incident to S.
inline Rational capacity(const WeightedGraph& g, const NodeSet& a, const NodeSet& b,
                         WeightKind kind) {
    require_node_set(g, a, "capacity");
    require_node_set(g, b, "capacity");
    Rational total;
    for (const Edge& e : g.edges) {
        size_t i = static_cast<size_t>(e.i), j = static_cast<size_t>(e.j);
        if ((a.test(i) && b.test(j)) || (b.test(i) && a.test(j)))
            total += (kind == WeightKind::numerator) ? e.w : e.w_prime;
    }
    return total;
}

inline Rational node_weight_sum(const WeightedGraph& g, const NodeSet& s) {
    require_node_set(g, s, "node_weight_sum");
    Rational total;
    for (size_t v = s.find_first(); v != NodeSet::npos; v = s.find_next(v))
        total += g.node_weights[v];
    return total;
}

// Index of the edge joining i and j (order-insensitive), or -1.
inline int find_edge(const WeightedGraph& g, int i, int j) {
    if (i > j) std::swap(i, j);
    for (size_t k = 0; k < g.edges.size(); ++k)
        if (g.edges[k].i == i && g.edges[k].j == j) return static_cast<int>(k);
    return -1;
}

}  // namespace paracut
