// Decompose a tensor product three ways and check they agree.
#include <iostream>

#include "weylkit/weylkit.hpp"

using namespace weylkit;

int main() {
    DominantWeight a(3, {1, 0, 1});  // adjoint of A3

    std::cout << "V" << a.to_string() << " (x) V" << a.to_string() << " =\n";
    Decomposition full = tensor_decompose(a, a);
    std::cout << decomposition_text(full);

    auto [sym, alt] = square_decompose(a);
    std::cout << "\nsymmetric part:\n" << decomposition_text(sym);
    std::cout << "alternating part:\n" << decomposition_text(alt);

    bool same = sym.merged(alt) == full;
    std::cout << "\ndomino split matches the LR decomposition: " << (same ? "yes" : "NO") << "\n";
    std::cout << "Stembridge predicts MF = " << (stembridge_mf(a, a) ? "yes" : "no")
              << ", observed max multiplicity = " << full.max_multiplicity() << "\n";
    return same ? 0 : 1;
}
