// The 2p spinning-field picture in SI units: rotation period, the two
// frequencies worth comparing, and the field speed at r = 3a.

#include <cstdio>

#include "hatom/hatom.hpp"

int main() {
    const auto c = hatom::PhysicalConstants::codata2018();
    const double period = hatom::spinning_period_2p(c);
    const double v3a = hatom::field_velocity(3.0, 1.0, period, c);
    const auto energy = hatom::dynamic_energy_explicit_2p(c);

    std::printf("rotation period           %.7e s\n", period);
    std::printf("field frequency (1/T)     %.7e Hz\n", 1.0 / period);
    std::printf("particle-orbit frequency  %.7e Hz\n", hatom::particle_orbit_frequency_2p(c));
    std::printf("field speed at r = 3a     %.7e m/s  (%.3f%% of c)\n", v3a,
                100.0 * v3a / c.light_speed);
    std::printf("rotational energy         %.7e J = %s E1\n", energy.joules,
                energy.in_e1.pretty().c_str());
    return 0;
}
