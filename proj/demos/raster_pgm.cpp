// Renders a |Psi|^2 section through the nucleus to a PGM image.
// Usage: raster_pgm [n l m [out.pgm]]   (defaults to 7 3 3, 733.pgm)

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "hatom/hatom.hpp"

int main(int argc, char** argv) {
    int n = 7, l = 3, m = 3;
    std::string path = "733.pgm";
    if (argc >= 4) {
        n = std::atoi(argv[1]);
        l = std::atoi(argv[2]);
        m = std::atoi(argv[3]);
        path = std::to_string(n) + std::to_string(l) + std::to_string(m) + ".pgm";
    }
    if (argc >= 5) path = argv[4];

    const auto state = hatom::build_state(n, l, m);
    hatom::GridSpec spec;
    spec.extent = 12.0 * n;
    spec.resolution = 512;

    const auto raster = hatom::section(state, spec);
    std::ofstream out(path, std::ios::binary);
    hatom::write_pgm(raster, out);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        return 1;
    }

    const auto lobes = hatom::analyze_section(state, spec);
    std::cout << "wrote " << path << "  (" << spec.resolution << "x" << spec.resolution
              << ", half-width " << spec.extent << "a)\n";
    std::cout << "structure: " << lobes.describe() << "\n";
    return 0;
}
