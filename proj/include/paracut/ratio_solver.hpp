#pragma once

// Exact optimization of the ratio objectives in problems.hpp.
//
// All methods answer the same parametric question: for a trial value lambda,
// the reduction's minimum cut reveals g(lambda), the best value of
// num(S) - lambda*den(S) over candidate sets.  For minimization g starts
// nonnegative and its largest root is the optimal ratio; for maximization
// (densest subgraph) g is nonnegative with the optimum at its smallest root.
// Because everything is rational, roots are found exactly:
//
//   Method::dinkelbach   iterate lambda <- ratio(argopt at lambda) until
//                        g(lambda) == 0; each step strictly improves, so the
//                        loop ends after finitely many cuts.
//   Method::bisect       halve a bracket until it is narrower than the given
//                        tolerance, then finish with Dinkelbach steps; the
//                        tolerance bounds the bracket phase, never the answer.
//   Method::breakpoints  build the full envelope and read the root off the
//                        piece that crosses zero.
//
// Ties in the reported set are broken identically everywhere: the optimal
// set is recovered from the minimum cut at the optimal lambda (minimal side
// for minimization, maximal side for maximization, with fallbacks when the
// nearer side has a zero denominator), so all three methods return the same
// triple (ratio, lambda_star, set).
//
// The normalized-cut-prime objective is solved as a normalized cut with
// w' := w — the two objectives order sets identically and their optima are
// related by r' = r / (1 + r) — and the results are mapped back through that
// transform.  The minimize direction of densest subgraph never needs a
// network: a single positive-weight node has density zero, which no feasible
// set can beat.

#include <algorithm>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "paracut/constructions.hpp"

namespace paracut {

enum class Method { dinkelbach, breakpoints, bisect };

struct SolverStats {
    int cut_calls = 0;
    int iterations = 0;  // Dinkelbach rounds plus bisection steps
};

struct RatioSolution {
    Rational ratio;        // optimal objective value
    Rational lambda_star;  // root of g; equals ratio except through transforms
    NodeSet set;           // an optimal set, canonical as described above
    SolverStats stats;
};

// Halves [lo, hi] around the root of g until the bracket is no wider than
// `tolerance`, keeping g(lo) on the nonnegative side.  For maximization the
// bracket instead keeps g(lo) strictly positive.  Returns the final bracket.
inline std::pair<Rational, Rational> binary_search_lambda(const ParametricNetwork& net,
                                                          const ReductionMapping& map,
                                                          bool maximize, Rational lo, Rational hi,
                                                          const Rational& tolerance,
                                                          SolverStats& stats) {
    if (tolerance <= 0) throw Error("tolerance must be positive");
    while (hi - lo > tolerance) {
        Rational mid = midpoint(lo, hi);
        Rational p = map.param_of(mid);
        CutResult cut = min_cut_at(net, p);
        ++stats.cut_calls;
        ++stats.iterations;
        Rational gv = map.g_of_cut(p, cut.value);
        bool root_below = maximize ? !(gv > 0) : gv < 0;
        (root_below ? hi : lo) = mid;
    }
    return {std::move(lo), std::move(hi)};
}

namespace detail {

// Driver for one built reduction.  `g` and `kind` are the problem the
// network actually encodes (normalized-cut-prime arrives here already
// rewritten as a normalized cut on a copied graph).
class RatioDriver {
public:
    RatioDriver(const WeightedGraph& g, const ProblemKind& kind)
        : g_(g), kind_(kind), maximize_(is_maximize(kind)) {
        if (const auto* nc = std::get_if<NormalizedCut>(&kind)) {
            auto built = build_lambda_nc(g, nc->seed_in, nc->seed_out);
            net_ = std::move(built.first);
            map_ = std::move(built.second);
        } else if (const auto* rr = std::get_if<RatioRegions>(&kind)) {
            auto built = build_lambda_rr(g, rr->source_node, rr->sink_node);
            net_ = std::move(built.first);
            map_ = std::move(built.second);
        } else if (const auto* d = std::get_if<DensestSubgraph>(&kind)) {
            if (d->direction != Direction::maximize)
                throw Error("internal: minimize direction needs no reduction");
            auto built = build_densest(g);
            net_ = std::move(built.first);
            map_ = std::move(built.second);
        } else {
            throw Error("internal: unexpected problem kind in driver");
        }
    }

    // Largest feasible denominator first: for minimization the candidate
    // family is downward-bounded by the seeds, so if this set's denominator
    // is not positive no feasible set exists.
    NodeSet start_set() const {
        NodeSet s = make_node_set(g_);
        if (std::holds_alternative<NormalizedCut>(kind_)) {
            for (int v = 1; v <= g_.node_count; ++v) s.set(static_cast<size_t>(v));
            s -= map_.forced_out;
        } else if (const auto* rr = std::get_if<RatioRegions>(&kind_)) {
            s.set(static_cast<size_t>(rr->source_node));
            for (int v = 1; v <= g_.node_count; ++v)
                if (v != rr->sink_node && g_.node_weights[static_cast<size_t>(v)] > 0)
                    s.set(static_cast<size_t>(v));
        } else {
            for (int v = 1; v <= g_.node_count; ++v) s.set(static_cast<size_t>(v));
        }
        return s;
    }

    Rational ratio_of(const NodeSet& s) const {
        RatioParts parts = objective_parts(g_, s, kind_);
        if (!(parts.den > 0)) throw Error("internal: ratio of a zero-denominator set");
        return parts.num / parts.den;
    }

    struct Probe {
        Rational g;
        CutResult cut;
    };

    Probe probe(const Rational& lambda) {
        Rational p = map_.param_of(lambda);
        CutResult cut = min_cut_at(net_, p);
        ++stats_.cut_calls;
        Rational gv = map_.g_of_cut(p, cut.value);
        return Probe{std::move(gv), std::move(cut)};
    }

    Rational lambda_max() const { return map_.negated ? map_.origin : net_.lambda_hi; }

    // Dinkelbach iteration from a feasible set; exact and tolerance-free.
    Rational iterate_to_root(NodeSet s) {
        Rational lambda = ratio_of(s);
        for (;;) {
            ++stats_.iterations;
            Probe pr = probe(lambda);
            if (pr.g.is_zero()) return lambda;
            // A strictly better set exists; its ratio moves lambda toward
            // the root and the loop visits each candidate line at most once.
            s = decode(map_, pr.cut.source_set);
            lambda = ratio_of(s);
        }
    }

    Rational root_by_dinkelbach() {
        NodeSet s0 = start_set();
        if (!(objective_parts(g_, s0, kind_).den > 0))
            throw InfeasibleError("no feasible set with positive denominator");
        return iterate_to_root(std::move(s0));
    }

    Rational root_by_bisect(const Rational& tolerance) {
        NodeSet s0 = start_set();
        if (!(objective_parts(g_, s0, kind_).den > 0))
            throw InfeasibleError("no feasible set with positive denominator");
        if (maximize_) {
            Probe at_zero = probe(Rational(0));
            if (at_zero.g.is_zero()) return Rational(0);
        }
        auto [lo, hi] =
            binary_search_lambda(net_, map_, maximize_, Rational(0), lambda_max(), tolerance,
                                 stats_);
        // Finish exactly from the bracket edge that certifies a better set.
        Probe edge = probe(maximize_ ? lo : hi);
        if (edge.g.is_zero()) return maximize_ ? lo : hi;
        return iterate_to_root(decode(map_, edge.cut.source_set));
    }

    Rational root_by_breakpoints() {
        NodeSet s0 = start_set();
        if (!(objective_parts(g_, s0, kind_).den > 0))
            throw InfeasibleError("no feasible set with positive denominator");
        const BreakpointSequence& seq = sequence();
        for (size_t k = 0; k < seq.pieces.size(); ++k) {
            CutLine gl = g_line(seq.pieces[k].line);
            Rational upper = seq.upper_bound(k);
            if (maximize_ ? gl.at(upper) > 0 : gl.at(upper) < 0) {
                // Root of the first piece that leaves zero; by concavity the
                // optimal lambda in problem space.
                Rational p_root = -gl.intercept / gl.slope;
                return map_.lambda_of(p_root);
            }
        }
        if (maximize_) return Rational(0);  // g identically zero: best density 0
        throw Error("internal: envelope never crosses zero");
    }

    // Canonical optimal set at the (exact) optimal lambda.  Verifies the
    // certificate g(lambda*) == 0 in passing.
    NodeSet canonical_set(const Rational& lambda_star) {
        Probe pr = probe(lambda_star);
        if (!pr.g.is_zero()) throw Error("internal: optimal lambda fails its certificate");
        if (maximize_) {
            NodeSet s = decode(map_, pr.cut.source_set_max);
            if (!(objective_parts(g_, s, kind_).den > 0))
                throw Error("internal: maximal optimum has nonpositive denominator");
            return s;
        }
        NodeSet s = decode(map_, pr.cut.source_set);
        if (objective_parts(g_, s, kind_).den > 0) return s;
        s = decode(map_, pr.cut.source_set_max);
        if (objective_parts(g_, s, kind_).den > 0) return s;
        // Both extreme optima are degenerate: the envelope is flat zero left
        // of lambda*, so lambda* is a breakpoint and the piece to its right
        // attains the ratio.
        const BreakpointSequence& seq = sequence();
        Rational p_star = map_.param_of(lambda_star);
        for (size_t k = 0; k < seq.pieces.size(); ++k)
            if (seq.lower_bound(k) == p_star)
                return decode(map_, seq.pieces[k].source_set);
        throw Error("internal: no optimal set with positive denominator");
    }

    const BreakpointSequence& sequence() {
        if (!seq_) {
            seq_ = breakpoints(net_);
            stats_.cut_calls += seq_->cut_calls;
        }
        return *seq_;
    }

    const ParametricNetwork& network() const { return net_; }
    const ReductionMapping& mapping() const { return map_; }
    SolverStats& stats() { return stats_; }

private:
    // Envelope piece line minus the offset line: the g-line of the piece's
    // set, in network parameter space with the mapping's sign applied.
    CutLine g_line(const CutLine& piece) const {
        CutLine gl{piece.intercept - map_.offset_const, piece.slope - map_.offset_slope};
        if (map_.sign < 0) {
            gl.intercept = -gl.intercept;
            gl.slope = -gl.slope;
        }
        return gl;
    }

    const WeightedGraph& g_;
    ProblemKind kind_;
    bool maximize_ = false;
    ParametricNetwork net_;
    ReductionMapping map_;
    SolverStats stats_;
    std::optional<BreakpointSequence> seq_;
};

inline Rational prime_of(const Rational& r) { return r / (Rational(1) + r); }

}  // namespace detail

inline RatioSolution solve(const WeightedGraph& g, const ProblemKind& kind,
                           Method method = Method::dinkelbach,
                           const Rational& tolerance = Rational(1, 4096)) {
    require_valid(g);
    require_valid_seeds(g, kind);

    if (const auto* np = std::get_if<NormalizedCutPrime>(&kind)) {
        WeightedGraph same = g;
        for (Edge& e : same.edges) e.w_prime = e.w;
        RatioSolution inner =
            solve(same, NormalizedCut{np->seed_in, np->seed_out}, method, tolerance);
        inner.ratio = detail::prime_of(inner.ratio);
        inner.lambda_star = detail::prime_of(inner.lambda_star);
        return inner;
    }
    if (const auto* d = std::get_if<DensestSubgraph>(&kind);
        d && d->direction == Direction::minimize) {
        // An isolated positive-weight node has density 0, the global floor.
        RatioSolution sol;
        sol.set = make_node_set(g);
        for (int v = 1; v <= g.node_count; ++v)
            if (g.node_weights[static_cast<size_t>(v)] > 0) {
                sol.set.set(static_cast<size_t>(v));
                return sol;
            }
        throw InfeasibleError("no feasible set with positive denominator");
    }

    detail::RatioDriver driver(g, kind);
    Rational root;
    switch (method) {
        case Method::dinkelbach: root = driver.root_by_dinkelbach(); break;
        case Method::bisect: root = driver.root_by_bisect(tolerance); break;
        case Method::breakpoints: root = driver.root_by_breakpoints(); break;
    }

    RatioSolution sol;
    sol.set = driver.canonical_set(root);
    sol.ratio = root;
    sol.lambda_star = root;
    sol.stats = driver.stats();

    RatioParts parts = objective_parts(g, sol.set, kind);
    if (!(parts.den > 0) || parts.num != sol.ratio * parts.den)
        throw Error("internal: reported set does not attain the optimal ratio");
    return sol;
}

struct NestedPiece {
    Rational lambda_lo, lambda_hi;
    NodeSet set;
    Rational num, den;  // objective parts of `set` under the problem's kind
};

// The optimal sets for every lambda, as a sequence of pieces ascending in
// lambda.  For monotone reductions (normalized cuts; ratio regions with
// nonnegative node weights) consecutive sets are nested.
struct NestedSolutions {
    Rational lambda_lo, lambda_hi;
    std::vector<Rational> lambdas;
    std::vector<NestedPiece> pieces;
    int cut_calls = 0;
};

inline NestedSolutions nested_solutions(const WeightedGraph& g, const ProblemKind& kind) {
    require_valid(g);
    require_valid_seeds(g, kind);

    if (const auto* np = std::get_if<NormalizedCutPrime>(&kind)) {
        WeightedGraph same = g;
        for (Edge& e : same.edges) e.w_prime = e.w;
        NestedSolutions inner =
            nested_solutions(same, NormalizedCut{np->seed_in, np->seed_out});
        // lambda' = lambda / (1 + lambda) is increasing, so the order stands.
        inner.lambda_lo = detail::prime_of(inner.lambda_lo);
        inner.lambda_hi = detail::prime_of(inner.lambda_hi);
        for (Rational& l : inner.lambdas) l = detail::prime_of(l);
        for (NestedPiece& piece : inner.pieces) {
            piece.lambda_lo = detail::prime_of(piece.lambda_lo);
            piece.lambda_hi = detail::prime_of(piece.lambda_hi);
            RatioParts parts = objective_parts(g, piece.set, kind);
            piece.num = parts.num;
            piece.den = parts.den;
        }
        return inner;
    }
    if (const auto* d = std::get_if<DensestSubgraph>(&kind);
        d && d->direction == Direction::minimize)
        throw Error("no parametric sequence for the minimize direction");

    detail::RatioDriver driver(g, kind);
    const BreakpointSequence& seq = driver.sequence();
    const ReductionMapping& map = driver.mapping();

    NestedSolutions out;
    out.cut_calls = driver.stats().cut_calls;
    out.lambda_lo = map.negated ? map.lambda_of(seq.lambda_hi) : seq.lambda_lo;
    out.lambda_hi = map.negated ? map.lambda_of(seq.lambda_lo) : seq.lambda_hi;
    for (size_t k = 0; k < seq.pieces.size(); ++k) {
        NestedPiece piece;
        Rational a = map.lambda_of(seq.lower_bound(k));
        Rational b = map.lambda_of(seq.upper_bound(k));
        piece.lambda_lo = map.negated ? b : a;
        piece.lambda_hi = map.negated ? a : b;
        piece.set = decode(map, seq.pieces[k].source_set);
        RatioParts parts = objective_parts(g, piece.set, kind);
        piece.num = parts.num;
        piece.den = parts.den;
        out.pieces.push_back(std::move(piece));
    }
    for (const Rational& l : seq.lambdas) out.lambdas.push_back(map.lambda_of(l));
    if (map.negated) {
        std::reverse(out.pieces.begin(), out.pieces.end());
        std::reverse(out.lambdas.begin(), out.lambdas.end());
    }
    return out;
}

struct AutoSeedResult {
    RatioSolution solution;
    EdgeSeed seed_in, seed_out;
    size_t pairs_tried = 0, pairs_feasible = 0;
};

// Ordered pairs of vertex-disjoint edges, lexicographic by edge index.
inline std::vector<std::pair<int, int>> vertex_disjoint_edge_pairs(const WeightedGraph& g) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < static_cast<int>(g.edges.size()); ++a)
        for (int b = 0; b < static_cast<int>(g.edges.size()); ++b) {
            if (a == b) continue;
            const Edge& ea = g.edges[static_cast<size_t>(a)];
            const Edge& eb = g.edges[static_cast<size_t>(b)];
            if (ea.i == eb.i || ea.i == eb.j || ea.j == eb.i || ea.j == eb.j) continue;
            pairs.emplace_back(a, b);
        }
    return pairs;
}

// Tries seed pairs (seed_in, seed_out) over the first `budget` vertex-disjoint
// ordered edge pairs and returns the best solution; `budget` of SIZE_MAX means
// all of them.  Ties prefer the smaller ratio, then the smaller set bitmask,
// then the earlier pair, so the result does not depend on `jobs`.
inline AutoSeedResult solve_auto_seeds(const WeightedGraph& g, bool prime_objective,
                                       size_t budget = static_cast<size_t>(-1),
                                       Method method = Method::dinkelbach, int jobs = 1,
                                       const Rational& tolerance = Rational(1, 4096)) {
    require_valid(g);
    std::vector<std::pair<int, int>> pairs = vertex_disjoint_edge_pairs(g);
    if (pairs.size() > budget) pairs.resize(budget);
    if (pairs.empty())
        throw InfeasibleError("graph has no vertex-disjoint seed edge pair to try");

    std::vector<std::optional<RatioSolution>> results(pairs.size());
    auto kind_of = [&](size_t k) -> ProblemKind {
        const Edge& ea = g.edges[static_cast<size_t>(pairs[k].first)];
        const Edge& eb = g.edges[static_cast<size_t>(pairs[k].second)];
        EdgeSeed in{ea.i, ea.j}, out{eb.i, eb.j};
        if (prime_objective) return NormalizedCutPrime{in, out};
        return NormalizedCut{in, out};
    };
    auto run_range = [&](size_t begin, size_t step) {
        for (size_t k = begin; k < pairs.size(); k += step) {
            try {
                results[k] = solve(g, kind_of(k), method, tolerance);
            } catch (const InfeasibleError&) {
                results[k] = std::nullopt;
            }
        }
    };

    int workers = jobs < 1 ? 1 : jobs;
    if (workers > static_cast<int>(pairs.size())) workers = static_cast<int>(pairs.size());
    if (workers <= 1) {
        run_range(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back(run_range, static_cast<size_t>(t), static_cast<size_t>(workers));
        for (std::thread& t : pool) t.join();
    }

    AutoSeedResult best;
    best.pairs_tried = pairs.size();
    bool found = false;
    for (size_t k = 0; k < pairs.size(); ++k) {
        if (!results[k]) continue;
        ++best.pairs_feasible;
        const RatioSolution& cand = *results[k];
        bool better = !found || cand.ratio < best.solution.ratio ||
                      (cand.ratio == best.solution.ratio && cand.set < best.solution.set);
        if (better) {
            found = true;
            const Edge& ea = g.edges[static_cast<size_t>(pairs[k].first)];
            const Edge& eb = g.edges[static_cast<size_t>(pairs[k].second)];
            best.solution = cand;
            best.seed_in = EdgeSeed{ea.i, ea.j};
            best.seed_out = EdgeSeed{eb.i, eb.j};
        }
    }
    if (!found) throw InfeasibleError("no feasible seed pair");
    return best;
}

}  // namespace paracut
