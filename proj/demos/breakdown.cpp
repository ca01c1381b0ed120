// Prints the exact energy decomposition of one hydrogen state.
// Usage: breakdown [n l m]   (defaults to 3 2 2)

#include <cstdlib>
#include <iostream>

#include "hatom/hatom.hpp"

int main(int argc, char** argv) {
    int n = 3, l = 2, m = 2;
    if (argc == 4) {
        n = std::atoi(argv[1]);
        l = std::atoi(argv[2]);
        m = std::atoi(argv[3]);
    }

    const auto state = hatom::build_state(n, l, m);
    const auto b = hatom::decompose(state);

    std::cout << "state " << state.label() << ", energies in units of E1\n";
    std::cout << "  radial poly      [";
    for (std::size_t i = 0; i < state.radial.poly.size(); ++i)
        std::cout << (i ? ", " : "") << state.radial.poly[i].pretty();
    std::cout << "] x exp(-" << state.radial.beta.pretty() << " r)\n";
    std::cout << "  KE_r             " << b.keR.pretty() << "\n";
    std::cout << "  KE_theta         " << b.keTheta.pretty() << "\n";
    std::cout << "  KE_phi           " << b.kePhi.pretty() << "\n";
    std::cout << "  dynamic (sum)    " << b.dynamic.pretty() << "\n";
    std::cout << "  total KE         " << b.totalKE.pretty() << "\n";
    std::cout << "  potential        " << b.potential.pretty() << "\n";
    std::cout << "  total            " << b.total.pretty() << "\n";
    return 0;
}
