// Walkthrough: build a ball, color it with the linear rule, drop a spindle
// on a vertex, and write an SVG of the colored neighborhood.

#include <vgraph/vgraph.hpp>

#include <fstream>
#include <iostream>

int main() {
    using namespace vgraph;

    const VectorGraphInstance inst = moser_instance();
    const FiniteGraph g = ball(inst, LatticePoint::zero(4), 2);
    std::cout << "radius-2 ball: " << g.n() << " vertices, " << g.edges.size() << " edges\n";

    const LinearColoring col(4, {1, 3, 2, 1});
    std::cout << "linear rule proper on the instance: " << (is_proper_linear(col, inst) ? "yes" : "no")
              << "\n";
    std::cout << "conflicts on the ball: " << verify_on_graph(col, g).size() << "\n";

    const ColoringResult chi = chromatic_number(g);
    std::cout << "chromatic number of the ball: " << chi.num_colors << "\n";

    const LatticePoint v{1, 0, 1, 0};
    for (int role = 0; role < 7; ++role) {
        const SpindleCheck check = verify_spindle(spindle_at(v, role));
        std::cout << "spindle at " << to_string(v) << ", role " << role << ": "
                  << (check.pass ? "pass" : check.failure) << "\n";
    }

    std::vector<int> colors;
    colors.reserve(g.vertices.size());
    for (const auto& p : g.vertices) colors.push_back(eval_linear(col, p));
    std::ofstream("ball2.svg") << to_svg(g, &colors);
    std::cout << "wrote ball2.svg\n";
    return 0;
}
