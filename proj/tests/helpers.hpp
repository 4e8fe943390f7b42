#pragma once

// Shared fixtures for the unit and acceptance tests: deterministic random
// instance generators (fixed seeds at each call site) and small builders.

#include <random>
#include <vector>

#include "paracut/graph.hpp"
#include "paracut/flow_network.hpp"
#include "paracut/parametric.hpp"

namespace testgen {

using paracut::Arc;
using paracut::ExtendedCapacity;
using paracut::FlowNetwork;
using paracut::NodeSet;
using paracut::ParametricArc;
using paracut::ParametricNetwork;
using paracut::Rational;
using paracut::WeightedGraph;

inline NodeSet node_set(const WeightedGraph& g, std::initializer_list<int> ids) {
    return paracut::make_node_set(g, std::vector<int>(ids));
}

struct GraphOptions {
    int min_nodes = 4;
    int max_nodes = 10;
    int max_weight = 10;          // edge weights drawn from 1..max_weight
    bool zero_weights = false;    // if set, ~1 in 6 edge weights is 0 instead
    bool negative_node = false;   // if set, one node weight is drawn from -3..-1
    bool tie_w_prime = false;     // if set, w' = w on every edge
};

// Connected graph: a random spanning tree plus up to n extra edges.  Node
// weights default to 1 so the same instance works for every objective.
inline WeightedGraph random_connected_graph(std::mt19937& rng, const GraphOptions& opt = {}) {
    std::uniform_int_distribution<int> node_count(opt.min_nodes, opt.max_nodes);
    const int n = node_count(rng);
    WeightedGraph g = paracut::make_graph(n);

    std::uniform_int_distribution<int> weight(1, opt.max_weight);
    std::uniform_int_distribution<int> sometimes_zero(0, 5);
    auto draw_weight = [&]() {
        if (opt.zero_weights && sometimes_zero(rng) == 0) return Rational(0);
        return Rational(weight(rng));
    };

    for (int v = 2; v <= n; ++v) {
        std::uniform_int_distribution<int> earlier(1, v - 1);
        Rational w = draw_weight();
        Rational wp = opt.tie_w_prime ? w : draw_weight();
        paracut::add_edge(g, earlier(rng), v, w, wp);
    }
    std::uniform_int_distribution<int> extra_count(0, n);
    std::uniform_int_distribution<int> any(1, n);
    for (int k = extra_count(rng); k > 0; --k) {
        int a = any(rng), b = any(rng);
        if (a == b || paracut::find_edge(g, a, b) >= 0) continue;
        Rational w = draw_weight();
        Rational wp = opt.tie_w_prime ? w : draw_weight();
        paracut::add_edge(g, a, b, w, wp);
    }

    if (opt.negative_node) {
        std::uniform_int_distribution<int> neg(-3, -1);
        g.node_weights[static_cast<size_t>(any(rng))] = Rational(neg(rng));
    }
    return g;
}

struct NetworkOptions {
    int min_free = 1;
    int max_free = 10;
    double arc_probability = 0.3;
    double infinite_share = 0.1;  // fraction of arcs with symbolic infinite capacity
};

// Random flow network on {source, free nodes, sink}; capacities are small
// rationals so the scaling path in the solver gets exercised.
inline FlowNetwork random_flow_network(std::mt19937& rng, const NetworkOptions& opt = {}) {
    std::uniform_int_distribution<int> free_count(opt.min_free, opt.max_free);
    const int free = free_count(rng);
    FlowNetwork net;
    net.node_count = free + 2;
    net.source = 0;
    net.sink = free + 1;

    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> num(0, 20);
    std::uniform_int_distribution<int> den(1, 4);
    for (int a = 0; a < net.node_count; ++a) {
        for (int b = 0; b < net.node_count; ++b) {
            if (a == b || b == net.source || a == net.sink) continue;
            if (coin(rng) > opt.arc_probability) continue;
            ExtendedCapacity cap = (coin(rng) < opt.infinite_share)
                                       ? ExtendedCapacity::infinity()
                                       : ExtendedCapacity(Rational(num(rng), den(rng)));
            net.arcs.push_back(Arc{a, b, cap});
        }
    }
    return net;
}

// Random monotone parametric network: source arcs have nonnegative slope,
// sink arcs nonpositive slope (kept nonnegative over the whole domain), and
// internal arcs are constant.  Domain is [0, 10].
inline ParametricNetwork random_monotone_parametric(std::mt19937& rng, int max_free = 8) {
    std::uniform_int_distribution<int> free_count(1, max_free);
    const int free = free_count(rng);
    ParametricNetwork net;
    net.node_count = free + 2;
    net.source = 0;
    net.sink = free + 1;
    net.lambda_lo = Rational(0);
    net.lambda_hi = Rational(10);

    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> small(0, 6);
    std::uniform_int_distribution<int> den(1, 3);
    auto rat = [&]() { return Rational(small(rng), den(rng)); };

    for (int v = 1; v <= free; ++v) {
        if (coin(rng) < 0.8)
            net.arcs.push_back(ParametricArc{net.source, v, ExtendedCapacity(rat()), rat()});
        if (coin(rng) < 0.8) {
            // slope b <= 0 with constant c >= -b * lambda_hi keeps the
            // capacity nonnegative across the domain.
            Rational b = -rat();
            Rational c = -b * net.lambda_hi + rat();
            net.arcs.push_back(ParametricArc{v, net.sink, ExtendedCapacity(c), b});
        }
    }
    for (int a = 1; a <= free; ++a)
        for (int b = 1; b <= free; ++b) {
            if (a == b || coin(rng) > 0.25) continue;
            ExtendedCapacity cap = (coin(rng) < 0.08) ? ExtendedCapacity::infinity()
                                                      : ExtendedCapacity(rat());
            net.arcs.push_back(ParametricArc{a, b, cap, Rational(0)});
        }
    return net;
}

}  // namespace testgen
