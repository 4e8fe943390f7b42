// End-to-end acceptance checks.  Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any of them fail.  Random instances use fixed
// seeds so reruns are byte-identical.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "paracut/constructions.hpp"
#include "paracut/io.hpp"
#include "paracut/oracle.hpp"
#include "paracut/ratio_solver.hpp"

using namespace paracut;

namespace {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure(what);
}

EdgeSeed seed_of(const WeightedGraph& g, int edge_index) {
    const Edge& e = g.edges[static_cast<size_t>(edge_index)];
    return EdgeSeed{e.i, e.j};
}

// ---------------------------------------------------------------------------
// 1. The solver's normalized cut equals exhaustive search, for every
//    vertex-disjoint ordered seed pair of 200 random connected graphs.

void criterion_ncut_vs_exhaustive() {
    std::mt19937 rng(101);
    long long pairs_checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        testgen::GraphOptions opt;
        opt.min_nodes = 4;
        opt.max_nodes = 10;
        WeightedGraph g = testgen::random_connected_graph(rng, opt);
        for (const auto& [a, b] : vertex_disjoint_edge_pairs(g)) {
            ProblemKind kind = NormalizedCut{seed_of(g, a), seed_of(g, b)};
            OracleSolution expect = brute_force_ratio(g, kind);
            RatioSolution sol = solve(g, kind);
            require(sol.ratio == expect.ratio, "optimal ratio differs from exhaustive search");
            require(evaluate_ratio(g, sol.set, kind) == sol.ratio,
                    "reported set does not attain the reported ratio");
            ++pairs_checked;
        }
    }
    require(pairs_checked > 2000, "generator produced too few seed pairs to be meaningful");
}

// ---------------------------------------------------------------------------
// 2. Ratio regions (including negative node weights) and densest subgraph
//    (both directions) equal exhaustive search, with exception parity on
//    infeasible instances.

void criterion_rr_densest_vs_exhaustive() {
    std::mt19937 rng(202);
    long long checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        testgen::GraphOptions opt;
        opt.max_nodes = 8;
        opt.negative_node = (trial % 2 == 1);
        WeightedGraph g = testgen::random_connected_graph(rng, opt);
        for (int src = 1; src <= g.node_count; ++src)
            for (int snk = 1; snk <= g.node_count; ++snk) {
                if (src == snk) continue;
                ProblemKind kind = RatioRegions{src, snk};
                bool feasible = true;
                OracleSolution expect;
                try {
                    expect = brute_force_ratio(g, kind);
                } catch (const InfeasibleError&) {
                    feasible = false;
                }
                if (!feasible) {
                    try {
                        solve(g, kind);
                        require(false, "solver accepted an instance exhaustive search rejects");
                    } catch (const InfeasibleError&) {
                    }
                    continue;
                }
                RatioSolution sol = solve(g, kind);
                require(sol.ratio == expect.ratio, "region ratio differs from exhaustive search");
                require(evaluate_ratio(g, sol.set, kind) == sol.ratio,
                        "reported region does not attain the reported ratio");
                ++checked;
            }
    }
    for (int trial = 0; trial < 200; ++trial) {
        testgen::GraphOptions opt;
        opt.max_nodes = 8;
        WeightedGraph g = testgen::random_connected_graph(rng, opt);

        ProblemKind max_kind = DensestSubgraph{Direction::maximize};
        OracleSolution expect_max = brute_force_ratio(g, max_kind);
        RatioSolution max_sol = solve(g, max_kind);
        require(max_sol.ratio == expect_max.ratio, "peak density differs from exhaustive search");
        require(evaluate_ratio(g, max_sol.set, max_kind) == max_sol.ratio,
                "densest set does not attain the reported density");

        ProblemKind min_kind = DensestSubgraph{Direction::minimize};
        OracleSolution expect_min = brute_force_ratio(g, min_kind);
        RatioSolution min_sol = solve(g, min_kind);
        require(min_sol.ratio == expect_min.ratio, "sparsest density differs");
        require(min_sol.set == expect_min.set, "sparsest set differs from exhaustive search");
        ++checked;
    }
    require(checked > 2000, "too few feasible instances checked");
}

// ---------------------------------------------------------------------------
// 3. For random candidate sets S and random parameter values, the network cut
//    of S's encoding equals offset(p) + sign * (num(S) - lambda(p) * den(S)).

void criterion_reduction_identity() {
    std::mt19937 rng(303);
    auto check_identity = [](const WeightedGraph& g, const ParametricNetwork& net,
                             const ReductionMapping& map, const ProblemKind& kind,
                             const NodeSet& s, const Rational& p) {
        auto side = canonical_source_side(g, net, map, s);
        ExtendedCapacity cut = cut_value(instantiate(net, p), side);
        require(cut.is_finite(), "candidate encoding crosses an infinite arc");
        RatioParts parts = objective_parts(g, s, kind);
        Rational expect =
            map.offset_at(p) + Rational(map.sign) * (parts.num - map.lambda_of(p) * parts.den);
        require(cut.value() == expect, "cut value disagrees with the objective line");
        require(decode(map, side) == s, "decoding does not invert the encoding");
    };
    auto random_candidate = [&](const ReductionMapping& map, const WeightedGraph& g) {
        NodeSet s = map.forced_in;
        for (int v = 1; v <= g.node_count; ++v)
            if (!map.forced_in.test(static_cast<size_t>(v)) &&
                !map.forced_out.test(static_cast<size_t>(v)) && rng() % 2)
                s.set(static_cast<size_t>(v));
        return s;
    };
    auto random_param = [&](const ParametricNetwork& net) {
        return net.lambda_lo +
               (net.lambda_hi - net.lambda_lo) * Rational(static_cast<int>(rng() % 25), 24);
    };

    int samples = 0;
    for (int trial = 0; trial < 200; ++trial) {
        testgen::GraphOptions opt;
        opt.max_nodes = 8;
        opt.zero_weights = true;
        WeightedGraph g = testgen::random_connected_graph(rng, opt);

        auto pairs = vertex_disjoint_edge_pairs(g);
        if (!pairs.empty()) {
            auto pick = pairs[rng() % pairs.size()];
            EdgeSeed in = seed_of(g, pick.first), out = seed_of(g, pick.second);
            auto [net, map] = build_lambda_nc(g, in, out);
            check_identity(g, net, map, NormalizedCut{in, out}, random_candidate(map, g),
                           random_param(net));
            ++samples;
        }

        WeightedGraph h = g;
        if (trial % 2 == 1) h.node_weights[1 + static_cast<size_t>(rng() % h.node_count)] =
            Rational(-1 - static_cast<int>(rng() % 3));
        int snk = h.node_count;
        auto [rnet, rmap] = build_lambda_rr(h, 1, snk);
        check_identity(h, rnet, rmap, RatioRegions{1, snk}, random_candidate(rmap, h),
                       random_param(rnet));
        ++samples;

        auto [dnet, dmap] = build_densest(g);
        check_identity(g, dnet, dmap, DensestSubgraph{Direction::maximize},
                       random_candidate(dmap, g), random_param(dnet));
        ++samples;
    }
    require(samples >= 500, "too few identity samples");
}

// ---------------------------------------------------------------------------
// 4. Breakpoint sequences of random monotone parametric networks: at most one
//    breakpoint per free node, strictly ascending, nested source sets, and an
//    envelope that reproduces fresh minimum cuts exactly.

void criterion_breakpoint_sequences() {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 100; ++trial) {
        ParametricNetwork net = testgen::random_monotone_parametric(rng);
        require(is_monotone(net), "generator emitted a non-monotone network");
        BreakpointSequence seq = breakpoints(net);

        require(seq.lambdas.size() <= static_cast<size_t>(net.node_count - 2),
                "more breakpoints than free nodes");
        for (size_t k = 0; k < seq.lambdas.size(); ++k) {
            require(seq.lambdas[k] >= net.lambda_lo && seq.lambdas[k] <= net.lambda_hi,
                    "breakpoint outside the domain");
            if (k > 0)
                require(seq.lambdas[k - 1] < seq.lambdas[k], "breakpoints not ascending");
        }
        for (size_t k = 1; k < seq.pieces.size(); ++k) {
            require(seq.pieces[k - 1].source_set.is_subset_of(seq.pieces[k].source_set),
                    "piece source sets are not nested");
            require(seq.pieces[k - 1].source_set != seq.pieces[k].source_set,
                    "adjacent pieces share one source set");
        }

        auto grid_point = [&](int k, int of) {
            return net.lambda_lo + (net.lambda_hi - net.lambda_lo) * Rational(k, of);
        };
        for (int k = 0; k <= 9; ++k) {
            Rational p = grid_point(k, 9);
            require(seq.envelope_at(p) == min_cut_at(net, p).value,
                    "envelope disagrees with a fresh minimum cut");
        }
        for (int probe = 0; probe < 5; ++probe) {
            int a = static_cast<int>(rng() % 9), c = a + 2 + static_cast<int>(rng() % 3);
            if (c > 12) continue;
            int b = a + 1 + static_cast<int>(rng() % (c - a - 1));
            Rational pa = grid_point(a, 12), pb = grid_point(b, 12), pc = grid_point(c, 12);
            Rational va = seq.envelope_at(pa), vb = seq.envelope_at(pb),
                     vc = seq.envelope_at(pc);
            require(vb * (pc - pa) >= va * (pc - pb) + vc * (pb - pa),
                    "envelope is not concave");
        }
    }
}

// ---------------------------------------------------------------------------
// 5. Minimum cuts on random networks agree with exhaustive search and ship a
//    feasible flow of exactly the cut value; both reported sides price out to
//    that value.

void criterion_flow_certificates() {
    std::mt19937 rng(505);
    int finite = 0, infeasible = 0;
    for (int trial = 0; trial < 500; ++trial) {
        FlowNetwork net = testgen::random_flow_network(rng);
        bool feasible = true;
        OracleCut expect;
        try {
            expect = brute_force_min_cut(net);
        } catch (const InfeasibleError&) {
            feasible = false;
        }
        if (!feasible) {
            try {
                min_cut(net);
                require(false, "solver found a cut exhaustive search says cannot exist");
            } catch (const InfeasibleError&) {
            }
            ++infeasible;
            continue;
        }
        auto [cut, flow] = min_cut_with_flow(net);
        require(cut.value == expect.value, "cut value differs from exhaustive search");
        require(cut.source_set == expect.source_set, "minimal side differs from exhaustive search");
        require(is_feasible_flow(net, flow), "flow certificate violates its constraints");
        require(flow.value == cut.value, "flow value differs from the cut value");
        require(cut_value(net, cut.source_set).value() == cut.value,
                "minimal side does not price to the cut value");
        require(cut_value(net, cut.source_set_max).value() == cut.value,
                "maximal side does not price to the cut value");
        ++finite;
    }
    require(finite > 300 && infeasible > 10, "generator mix degenerated");
}

// ---------------------------------------------------------------------------
// 6. The prime objective: solved directly it matches exhaustive search, and
//    its optimum is r/(1+r) of the matching un-primed instance, on the same
//    set.

void criterion_prime_transform() {
    std::mt19937 rng(606);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        testgen::GraphOptions opt;
        opt.max_nodes = 9;
        WeightedGraph g = testgen::random_connected_graph(rng, opt);
        auto pairs = vertex_disjoint_edge_pairs(g);
        if (pairs.empty()) continue;
        auto pick = pairs[rng() % pairs.size()];
        EdgeSeed in = seed_of(g, pick.first), out = seed_of(g, pick.second);

        ProblemKind prime_kind = NormalizedCutPrime{in, out};
        RatioSolution prime = solve(g, prime_kind);
        OracleSolution expect = brute_force_ratio(g, prime_kind);
        require(prime.ratio == expect.ratio, "prime ratio differs from exhaustive search");
        require(evaluate_ratio(g, prime.set, prime_kind) == prime.ratio,
                "prime set does not attain the prime ratio");

        WeightedGraph tied = g;
        for (Edge& e : tied.edges) e.w_prime = e.w;
        RatioSolution plain = solve(tied, NormalizedCut{in, out});
        require(prime.ratio == plain.ratio / (Rational(1) + plain.ratio),
                "prime optimum is not r/(1+r) of the un-primed optimum");
        require(prime.lambda_star == plain.lambda_star / (Rational(1) + plain.lambda_star),
                "prime lambda* is not transformed consistently");
        require(prime.set == plain.set, "prime and un-primed optima disagree on the set");
        ++checked;
    }
    require(checked >= 80, "too few prime instances checked");
}

// ---------------------------------------------------------------------------
// 7. A 16x16 image with a planted bright rectangle: the normalized cut seeded
//    with one inside edge and one background edge recovers the rectangle with
//    zero mispredicted pixels.

void criterion_planted_region() {
    GrayImage img;
    img.width = 16;
    img.height = 16;
    img.maxval = 255;
    img.pixels.assign(256, 40);
    auto in_blob = [](int r, int c) { return r >= 4 && r <= 8 && c >= 5 && c <= 10; };
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c)
            if (in_blob(r, c)) img.at(r, c) = 200;

    // Round-trip the image through its binary format first.
    std::ostringstream buf(std::ios::binary);
    write_pgm(img, buf);
    std::istringstream rd(buf.str());
    img = parse_pgm(rd);

    WeightedGraph g = grid_graph(img, Rational(32), 4);
    EdgeSeed in{grid_node(img, 4, 5), grid_node(img, 4, 6)};
    EdgeSeed out{grid_node(img, 0, 0), grid_node(img, 0, 1)};
    RatioSolution sol = solve(g, NormalizedCut{in, out});

    require(sol.ratio == Rational(0), "planted region is separable at ratio zero");
    NodeSet blob = make_node_set(g);
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c)
            if (in_blob(r, c)) blob.set(static_cast<size_t>(grid_node(img, r, c)));
    require(sol.set == blob, "recovered set mispredicts at least one pixel");

    GrayImage mask = mask_image(sol.set, img.width, img.height);
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c)
            require((mask.at(r, c) == 255) == in_blob(r, c), "mask image mispredicts a pixel");
}

// ---------------------------------------------------------------------------
// 8. Dinkelbach, breakpoint enumeration, and bisection return identical
//    (ratio, lambda*, set) triples, including on degenerate instances.

void criterion_methods_agree() {
    std::mt19937 rng(808);
    auto agree = [](const WeightedGraph& g, const ProblemKind& kind) {
        bool feasible = true;
        RatioSolution a;
        try {
            a = solve(g, kind, Method::dinkelbach);
        } catch (const InfeasibleError&) {
            feasible = false;
        }
        for (Method m : {Method::breakpoints, Method::bisect}) {
            if (!feasible) {
                try {
                    solve(g, kind, m);
                    require(false, "methods disagree about feasibility");
                } catch (const InfeasibleError&) {
                }
                continue;
            }
            RatioSolution b = solve(g, kind, m);
            require(a.ratio == b.ratio, "methods disagree on the ratio");
            require(a.lambda_star == b.lambda_star, "methods disagree on lambda*");
            require(a.set == b.set, "methods disagree on the set");
        }
    };
    for (int trial = 0; trial < 60; ++trial) {
        testgen::GraphOptions opt;
        opt.max_nodes = 9;
        opt.zero_weights = true;
        WeightedGraph g = testgen::random_connected_graph(rng, opt);
        auto pairs = vertex_disjoint_edge_pairs(g);
        if (!pairs.empty()) {
            auto pick = pairs[trial % pairs.size()];
            agree(g, NormalizedCut{seed_of(g, pick.first), seed_of(g, pick.second)});
            agree(g, NormalizedCutPrime{seed_of(g, pick.first), seed_of(g, pick.second)});
        }
        if (trial % 2 == 1)
            g.node_weights[1 + static_cast<size_t>(rng() % g.node_count)] = Rational(-2);
        agree(g, RatioRegions{1, g.node_count});
    }
    for (int trial = 0; trial < 30; ++trial) {
        testgen::GraphOptions opt;
        opt.max_nodes = 9;
        WeightedGraph g = testgen::random_connected_graph(rng, opt);
        agree(g, DensestSubgraph{Direction::maximize});
    }
}

// ---------------------------------------------------------------------------
// 9. A 100x100 grid image solves inside the time budget and the answer
//    carries an exact certificate: a fresh cut at lambda* confirms the
//    optimum, and the recovered half is pixel-exact.

void criterion_large_grid() {
    GrayImage img;
    img.width = 100;
    img.height = 100;
    img.maxval = 255;
    img.pixels.assign(10000, 40);
    for (int r = 0; r < 100; ++r)
        for (int c = 50; c < 100; ++c) img.at(r, c) = 200;

    WeightedGraph g = grid_graph(img, Rational(32), 4);
    EdgeSeed in{grid_node(img, 0, 0), grid_node(img, 0, 1)};
    EdgeSeed out{grid_node(img, 0, 98), grid_node(img, 0, 99)};
    RatioSolution sol = solve(g, NormalizedCut{in, out});

    require(sol.ratio == Rational(0), "the two halves separate at ratio zero");
    NodeSet left = make_node_set(g);
    for (int r = 0; r < 100; ++r)
        for (int c = 0; c < 50; ++c) left.set(static_cast<size_t>(grid_node(img, r, c)));
    require(sol.set == left, "recovered half is not pixel-exact");

    auto [net, map] = build_lambda_nc(g, in, out);
    CutResult probe = min_cut_at(net, map.param_of(sol.lambda_star));
    require(map.g_of_cut(map.param_of(sol.lambda_star), probe.value).is_zero(),
            "fresh cut at lambda* fails the optimality certificate");
}

struct Criterion {
    std::string name;
    std::function<void()> body;
    double budget_seconds = 0;  // 0: no explicit bound
};

}  // namespace

int main() {
    std::vector<Criterion> table = {
        {"normalized cut matches exhaustive search on every seed pair",
         criterion_ncut_vs_exhaustive, 60},
        {"ratio regions and densest subgraph match exhaustive search",
         criterion_rr_densest_vs_exhaustive, 0},
        {"cut values reproduce the objective lines exactly", criterion_reduction_identity, 0},
        {"breakpoint sequences are short, nested, and exact", criterion_breakpoint_sequences, 0},
        {"minimum cuts ship matching flow certificates", criterion_flow_certificates, 0},
        {"the prime objective transforms consistently", criterion_prime_transform, 0},
        {"a planted image region is recovered pixel-exactly", criterion_planted_region, 5},
        {"all three methods return identical answers", criterion_methods_agree, 0},
        {"a 100x100 grid solves in budget with an exact certificate",
         criterion_large_grid, 120},
    };

    int failures = 0;
    for (size_t k = 0; k < table.size(); ++k) {
        const Criterion& c = table[k];
        auto start = std::chrono::steady_clock::now();
        std::string verdict = "PASS";
        std::string detail;
        try {
            c.body();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (verdict == "PASS" && c.budget_seconds > 0 && elapsed > c.budget_seconds) {
            verdict = "FAIL";
            detail = "exceeded the " + std::to_string(c.budget_seconds) + "s budget";
        }
        if (verdict == "FAIL") ++failures;
        std::printf("criterion %zu: %-62s %s (%.1fs)%s%s\n", k + 1, c.name.c_str(),
                    verdict.c_str(), elapsed, detail.empty() ? "" : " - ", detail.c_str());
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::printf("all %zu criteria passed\n", table.size());
        return 0;
    }
    std::printf("%d of %zu criteria failed\n", failures, table.size());
    return 1;
}
