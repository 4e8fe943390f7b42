// Image walkthrough: plant a bright disc on a dark background, turn the
// image into a grid graph, solve a seeded normalized cut, and print the
// recovered region as ASCII art.

#include <iostream>

#include "paracut/io.hpp"
#include "paracut/ratio_solver.hpp"

using namespace paracut;

int main() {
    const int side = 24;
    GrayImage img;
    img.width = side;
    img.height = side;
    img.maxval = 255;
    img.pixels.assign(static_cast<size_t>(side) * side, 30);
    auto in_disc = [&](int r, int c) {
        int dr = r - side / 2, dc = c - side / 2;
        return dr * dr + dc * dc <= 36;
    };
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c)
            if (in_disc(r, c)) img.at(r, c) = 220;

    WeightedGraph g = grid_graph(img, Rational(48), 4);
    EdgeSeed inside{grid_node(img, side / 2, side / 2), grid_node(img, side / 2, side / 2 + 1)};
    EdgeSeed outside{grid_node(img, 0, 0), grid_node(img, 0, 1)};
    RatioSolution sol = solve(g, NormalizedCut{inside, outside});

    std::cout << "ratio " << sol.ratio.str() << ", " << sol.set.count() << " of " << side * side
              << " pixels:\n";
    for (int r = 0; r < side; ++r) {
        for (int c = 0; c < side; ++c)
            std::cout << (sol.set.test(static_cast<size_t>(grid_node(img, r, c))) ? '#' : '.');
        std::cout << "\n";
    }
    return 0;
}
