// Restrict a module of SL6 to the orthogonal subgroup two ways: by the
// Littlewood branching rule and by weight pushing along A3 < A5.
#include <iostream>

#include "weylkit/weylkit.hpp"

using namespace weylkit;

int main() {
    Partition gamma{4, 4, 4};
    std::cout << "GL6 module " << gamma.to_string() << " restricted to SO6:\n";
    auto branch = gl_to_so_branching(gamma, 6);
    Decomposition expanded(3);
    for (auto& [xi, m] : branch) {
        SOWeight sw(xi, 6);
        std::cout << "  " << xi.to_string() << "  =  A3 " << so6_to_a3(sw).to_string()
                  << (so6_is_dual_pair(sw) ? " plus its dual" : "") << "\n";
        expanded.add(so6_to_a3(sw, true), m);
        if (so6_is_dual_pair(sw)) expanded.add(so6_to_a3(sw, false), m);
    }

    Embedding e = build_embedding(2, DominantWeight(3, {0, 1, 0}));
    DominantWeight lambda = partition_to_weight(gamma, e.y_rank());
    std::cout << "\nsame module as the A5 weight " << lambda.to_string() << ", restricted along A3 < A5:\n";
    Decomposition pushed = restrict_module(e, lambda);
    std::cout << decomposition_text(pushed);

    bool same = pushed == expanded || pushed == expanded.dualized();
    std::cout << "routes agree: " << (same ? "yes" : "NO") << "\n";
    return same ? 0 : 1;
}
