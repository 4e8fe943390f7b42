#pragma once

// Exact minimum s-t cut via Dinic's algorithm.
//
// Rational capacities are scaled by the LCM of their denominators into big
// integers, so augmentation is exact and the reported cut value is the true
// rational optimum.  Dinic's phase bound does not depend on capacity
// magnitudes, which keeps the big-integer variant polynomial.
//
// Alongside the cut value the solver reports both canonical minimum cuts:
// `source_set` is the inclusion-minimal one (nodes reachable from s in the
// final residual graph) and `source_set_max` the inclusion-maximal one
// (everything that cannot reach t).  Every other minimum cut lies between
// the two.  A feasible max-flow assignment is returned as an optimality
// witness.

#include <boost/dynamic_bitset.hpp>
#include <boost/integer/common_factor_rt.hpp>

#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "paracut/flow_network.hpp"

namespace paracut {

struct CutResult {
    Rational value;
    boost::dynamic_bitset<> source_set;      // minimal minimum cut
    boost::dynamic_bitset<> source_set_max;  // maximal minimum cut
};

namespace detail {

class Dinic {
public:
    explicit Dinic(const FlowNetwork& net) : net_(net), n_(net.node_count) {
        require_valid(net);
        scale_ = 1;
        for (const Arc& a : net.arcs)
            if (!a.cap.is_infinite())
                scale_ = boost::integer::lcm(scale_, a.cap.value().denominator());
        adj_.assign(static_cast<size_t>(n_), {});
        slot_.reserve(net.arcs.size());
        for (const Arc& a : net.arcs) {
            if (a.from == a.to) {  // self arcs never cross a cut or carry useful flow
                slot_.emplace_back(-1, -1);
                continue;
            }
            BigInt cap = 0;
            bool inf = a.cap.is_infinite();
            if (!inf) cap = a.cap.value().numerator() * (scale_ / a.cap.value().denominator());
            slot_.emplace_back(a.from, static_cast<int>(adj_[static_cast<size_t>(a.from)].size()));
            adj_[static_cast<size_t>(a.from)].push_back(
                {a.to, static_cast<int>(adj_[static_cast<size_t>(a.to)].size()), inf, cap});
            adj_[static_cast<size_t>(a.to)].push_back(
                {a.from, static_cast<int>(adj_[static_cast<size_t>(a.from)].size()) - 1, false,
                 BigInt(0)});
        }
    }

    // True if the sink is reachable through infinite arcs alone, i.e. no
    // finite cut separates the terminals.
    bool has_infinite_path() const {
        boost::dynamic_bitset<> seen(static_cast<size_t>(n_));
        std::queue<int> q;
        seen.set(static_cast<size_t>(net_.source));
        q.push(net_.source);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (v == net_.sink) return true;
            for (const EArc& e : adj_[static_cast<size_t>(v)])
                if (e.inf && !seen.test(static_cast<size_t>(e.to))) {
                    seen.set(static_cast<size_t>(e.to));
                    q.push(e.to);
                }
        }
        return false;
    }

    BigInt run() {
        BigInt total = 0;
        while (bfs()) {
            it_.assign(static_cast<size_t>(n_), 0);
            for (;;) {
                BigInt pushed = dfs(net_.source, BigInt(-1));
                if (pushed == 0) break;
                total += pushed;
            }
        }
        return total;
    }

    boost::dynamic_bitset<> reachable_from_source() const {
        boost::dynamic_bitset<> seen(static_cast<size_t>(n_));
        std::queue<int> q;
        seen.set(static_cast<size_t>(net_.source));
        q.push(net_.source);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const EArc& e : adj_[static_cast<size_t>(v)])
                if (open(e) && !seen.test(static_cast<size_t>(e.to))) {
                    seen.set(static_cast<size_t>(e.to));
                    q.push(e.to);
                }
        }
        return seen;
    }

    boost::dynamic_bitset<> co_reachable_to_sink() const {
        // Residual predecessors: v reaches t iff some residual arc v->u with
        // u already known to reach t.  Walk arcs backwards.
        boost::dynamic_bitset<> seen(static_cast<size_t>(n_));
        std::queue<int> q;
        seen.set(static_cast<size_t>(net_.sink));
        q.push(net_.sink);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const EArc& e : adj_[static_cast<size_t>(u)]) {
                // e is u->e.to; the matching reverse entry describes arc e.to->u.
                const EArc& back = adj_[static_cast<size_t>(e.to)][static_cast<size_t>(e.rev)];
                if (open(back) && !seen.test(static_cast<size_t>(e.to))) {
                    seen.set(static_cast<size_t>(e.to));
                    q.push(e.to);
                }
            }
        }
        return seen;
    }

    FlowAssignment assignment(const BigInt& total) const {
        FlowAssignment f;
        f.value = Rational(total, scale_);
        f.arc_flow.reserve(net_.arcs.size());
        for (size_t k = 0; k < net_.arcs.size(); ++k) {
            auto [from, idx] = slot_[k];
            if (from < 0) {  // self arc
                f.arc_flow.push_back(Rational(0));
                continue;
            }
            const EArc& e = adj_[static_cast<size_t>(from)][static_cast<size_t>(idx)];
            // Flow pushed through an arc accumulates as residual on its twin.
            const EArc& back = adj_[static_cast<size_t>(e.to)][static_cast<size_t>(e.rev)];
            f.arc_flow.push_back(Rational(back.res, scale_));
        }
        return f;
    }

    const BigInt& scale() const { return scale_; }

private:
    struct EArc {
        int to;
        int rev;     // index of the twin arc in adj_[to]
        bool inf;    // infinite residual capacity
        BigInt res;  // residual capacity when finite
    };

    static bool open(const EArc& e) { return e.inf || e.res > 0; }

    bool bfs() {
        level_.assign(static_cast<size_t>(n_), -1);
        std::queue<int> q;
        level_[static_cast<size_t>(net_.source)] = 0;
        q.push(net_.source);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const EArc& e : adj_[static_cast<size_t>(v)])
                if (open(e) && level_[static_cast<size_t>(e.to)] < 0) {
                    level_[static_cast<size_t>(e.to)] = level_[static_cast<size_t>(v)] + 1;
                    q.push(e.to);
                }
        }
        return level_[static_cast<size_t>(net_.sink)] >= 0;
    }

    // limit < 0 means unbounded; any augmenting path contains a finite arc
    // (infinite s-t paths are rejected up front), so the bottleneck is finite.
    BigInt dfs(int v, BigInt limit) {
        if (v == net_.sink) return limit;
        for (int& i = it_[static_cast<size_t>(v)];
             i < static_cast<int>(adj_[static_cast<size_t>(v)].size()); ++i) {
            EArc& e = adj_[static_cast<size_t>(v)][static_cast<size_t>(i)];
            if (!open(e) || level_[static_cast<size_t>(e.to)] != level_[static_cast<size_t>(v)] + 1)
                continue;
            BigInt down = limit;
            if (!e.inf && (down < 0 || e.res < down)) down = e.res;
            BigInt pushed = dfs(e.to, down);
            if (pushed > 0) {
                if (!e.inf) e.res -= pushed;
                adj_[static_cast<size_t>(e.to)][static_cast<size_t>(e.rev)].res += pushed;
                return pushed;
            }
        }
        level_[static_cast<size_t>(v)] = -1;
        return 0;
    }

    const FlowNetwork& net_;
    int n_;
    BigInt scale_;
    std::vector<std::vector<EArc>> adj_;
    std::vector<std::pair<int, int>> slot_;  // original arc -> (node, adj index)
    std::vector<int> level_;
    std::vector<int> it_;
};

}  // namespace detail

inline std::pair<CutResult, FlowAssignment> min_cut_with_flow(const FlowNetwork& net) {
    detail::Dinic solver(net);
    if (solver.has_infinite_path())
        throw InfeasibleError("no finite cut separates source from sink");
    BigInt total = solver.run();

    CutResult cut;
    cut.source_set = solver.reachable_from_source();
    cut.source_set_max = solver.co_reachable_to_sink();
    cut.source_set_max.flip();
    cut.value = Rational(total, solver.scale());

    // Cross-check the duality on every call: the minimal side must price out
    // to exactly the flow value, and so must the maximal side.
    ExtendedCapacity check = cut_value(net, cut.source_set);
    ExtendedCapacity check_max = cut_value(net, cut.source_set_max);
    if (check.is_infinite() || check.value() != cut.value || check != check_max)
        throw Error("internal: max-flow/min-cut mismatch");

    return {std::move(cut), solver.assignment(total)};
}

inline CutResult min_cut(const FlowNetwork& net) { return min_cut_with_flow(net).first; }

}  // namespace paracut
