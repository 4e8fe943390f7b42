// Library walkthrough: build a graph in code, solve one seeded normalized
// cut, list the optimal sets for every lambda, and let the automatic seed
// search find the best pair on a second graph.

#include <iostream>

#include "paracut/io.hpp"
#include "paracut/ratio_solver.hpp"

using namespace paracut;

int main() {
    // A four-node path, 1 -3- 2 -1- 3 -3- 4.  Seeding edge (1,2) inside and
    // edge (3,4) outside asks for the cheapest split between the two ends.
    WeightedGraph path = make_graph(4);
    add_edge(path, 1, 2, Rational(3));
    add_edge(path, 2, 3, Rational(1));
    add_edge(path, 3, 4, Rational(3));

    ProblemKind kind = NormalizedCut{{1, 2}, {3, 4}};
    RatioSolution best = solve(path, kind);
    std::cout << "path: ratio " << best.ratio.str() << " at lambda* "
              << best.lambda_star.str() << ", members";
    for (int v : set_members(best.set)) std::cout << " " << v;
    std::cout << "\n\n";

    // The same instance, resolved for every lambda at once.  Each row is one
    // piece of the parameter range with its optimal set.
    std::cout << "optimal sets across the whole range:\n";
    write_nested_csv(nested_solutions(path, kind), std::cout);
    std::cout << "\n";

    // Two unit triangles joined by a weak bridge.  No seeds given: the
    // search tries every vertex-disjoint edge pair and keeps the best.
    WeightedGraph bridged = make_graph(6);
    add_edge(bridged, 1, 2, Rational(1));
    add_edge(bridged, 2, 3, Rational(1));
    add_edge(bridged, 1, 3, Rational(1));
    add_edge(bridged, 4, 5, Rational(1));
    add_edge(bridged, 5, 6, Rational(1));
    add_edge(bridged, 4, 6, Rational(1));
    add_edge(bridged, 3, 4, Rational(1, 10));

    AutoSeedResult found = solve_auto_seeds(bridged, /*prime_objective=*/false);
    std::cout << "bridged: ratio " << found.solution.ratio.str() << " with seeds ("
              << found.seed_in.i << "," << found.seed_in.j << ") in, (" << found.seed_out.i
              << "," << found.seed_out.j << ") out, after " << found.pairs_tried
              << " pairs\n";
    return 0;
}
