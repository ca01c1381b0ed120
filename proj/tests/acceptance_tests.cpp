// Acceptance gate: one line per criterion, nonzero exit if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hatom/hatom.hpp"

using hatom::build_state;
using hatom::Rational;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<void()>& body) {
    std::string problem;
    try {
        body();
    } catch (const std::exception& e) {
        problem = e.what();
    }
    if (problem.empty()) {
        std::cout << "PASS criterion " << number << ": " << what << "\n";
    } else {
        std::cout << "FAIL criterion " << number << ": " << what << " -- " << problem << "\n";
        ++failures;
    }
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::runtime_error(message);
}

struct CliRun {
    int exit_code = -1;
    std::string output;
    double seconds = 0.0;
};

CliRun run_cli(const std::string& args) {
    const std::string command = std::string(HATOM_CLI_PATH) + " " + args + " 2>&1";
    const auto start = std::chrono::steady_clock::now();
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot spawn: " + command);
    CliRun result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace

int main() {
    std::cout << std::setprecision(3);

    criterion(1, "all fourteen table rows exact; corrupted cells pinned by checksum and "
                 "m-independence; CLI table render under 1 s", [] {
        const auto table = hatom::energy_table();
        require(table.size() == 14, "table must have 14 rows");
        const auto find = [&](const char* label) -> const hatom::EnergyBreakdown& {
            for (const auto& [name, breakdown] : table)
                if (name == label) return breakdown;
            throw std::runtime_error(std::string("missing row ") + label);
        };

        // rows whose printed cells are unambiguous, checked as literals
        struct Cell {
            const char* label;
            Rational keR, keTheta, kePhi;
        };
        const Cell clean[] = {
            {"1,0,0", {1, 1}, {0, 1}, {0, 1}},
            {"2,0,0", {1, 4}, {0, 1}, {0, 1}},
            {"3,0,0", {1, 9}, {0, 1}, {0, 1}},
            {"3,1,0", {5, 81}, {4, 81}, {0, 1}},
            {"3,2,0", {1, 45}, {4, 45}, {0, 1}},
            {"3,2,±1", {1, 45}, {7, 135}, {1, 27}},
            {"3,2,±2", {1, 45}, {2, 135}, {10, 135}},
            {"7,3,0", {25, 2401}, {24, 2401}, {0, 1}},
            {"7,3,±1", {25, 2401}, {17, 2401}, {7, 2401}},
            {"7,3,±2", {25, 2401}, {10, 2401}, {14, 2401}},
            {"7,3,±3", {25, 2401}, {3, 2401}, {21, 2401}},
        };
        for (const auto& cell : clean) {
            const auto& b = find(cell.label);
            require(b.keR == cell.keR, std::string(cell.label) + " KE_r");
            require(b.keTheta == cell.keTheta, std::string(cell.label) + " KE_theta");
            require(b.kePhi == cell.kePhi, std::string(cell.label) + " KE_phi");
        }

        // the garbled cells, recovered from conservation laws instead of print
        const auto& p0 = find("2,1,0");
        const auto& p1 = find("2,1,±1");
        require(p0.kePhi == Rational(0), "m = 0 azimuthal energy must vanish");
        require(p0.keR == p1.keR, "KE_r must be m-independent");
        require(p0.keR + p0.keTheta + p0.kePhi == Rational(1, 4), "(2,1,0) checksum");
        require(p0.keTheta + p0.kePhi == p1.keTheta + p1.kePhi,
                "(2,1,m) dynamic m-independence");
        require(p1.kePhi == Rational(1, 8), "(2,1,±1) KE_phi literal");
        require(p1.keTheta == Rational(1, 4) - p1.keR - p1.kePhi,
                "(2,1,±1) KE_theta via checksum");
        require(p1.keTheta == Rational(1, 24), "(2,1,±1) KE_theta value");

        const auto& d1 = find("3,1,±1");
        require(d1.kePhi == Rational(1, 27), "(3,1,±1) KE_phi literal");
        require(d1.keTheta == Rational(1, 9) - d1.keR - d1.kePhi,
                "(3,1,±1) KE_theta via checksum");
        require(d1.keTheta == find("3,1,0").keTheta - d1.kePhi,
                "(3,1,m) dynamic m-independence");
        require(d1.keTheta == Rational(1, 81), "(3,1,±1) KE_theta value");

        const CliRun cli = run_cli("table2");
        require(cli.exit_code == 0, "CLI table2 must exit 0");
        require(cli.output.find("7,3,±3") != std::string::npos, "CLI table2 must print row 14");
        require(cli.seconds < 1.0,
                "CLI table2 took " + std::to_string(cli.seconds) + " s (budget 1 s)");
    });

    criterion(2, "worked 3d example: KE_r = 1/45, polar factor -1, KE_theta = 2/135, "
                 "azimuthal factor -5, KE_phi = 2/27, V = -2/9, total = -1/9, all exact", [] {
        const auto state = build_state(3, 2, 2);
        require(hatom::ke_radial(state) == Rational(1, 45), "KE_r");

        const hatom::TrigPoly theta = state.polar.trig_poly();
        const hatom::TrigPoly polar_bracket = theta * theta.derivative().times_sin().derivative();
        require(state.polar.n2 * polar_bracket.integrate(false) == Rational(-1),
                "polar angular factor");
        require(hatom::ke_polar(state) == Rational(2, 135), "KE_theta");

        const hatom::Polynomial q = state.polar.polynomial();
        const hatom::TrigPoly reduced = hatom::TrigPoly::from_cos_poly(q * q, 2);
        require(state.polar.n2 * reduced.integrate(true) * Rational(-4) == Rational(-5),
                "azimuthal angular factor");
        require(hatom::ke_azimuthal(state) == Rational(2, 27), "KE_phi");

        require(hatom::potential_energy(state) == Rational(-2, 9), "V");
        const auto b = hatom::decompose(state);
        require(b.totalKE == Rational(1, 9), "total KE");
        require(b.total == Rational(-1, 9), "total");
    });

    criterion(3, "all 364 states with n <= 12: total KE = E1/n^2 and V = -2 KE exactly, "
                 "under 30 s", [] {
        const auto start = std::chrono::steady_clock::now();
        int count = 0;
        for (int n = 1; n <= 12; ++n) {
            const Rational expected(1, static_cast<long>(n) * n);
            for (int l = 0; l < n; ++l)
                for (int m = 0; m <= l; ++m) {
                    const auto b = hatom::decompose(build_state(n, l, m));
                    require(b.totalKE == expected, build_state(n, l, m).label() + " total KE");
                    require(b.potential == Rational(-2) * b.totalKE,
                            build_state(n, l, m).label() + " virial");
                    ++count;
                }
        }
        require(count == 364, "expected 364 states, saw " + std::to_string(count));
        const double sec =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        require(sec < 30.0, "sweep took " + std::to_string(sec) + " s (budget 30 s)");
    });

    criterion(4, "dynamic energy = l(l+1) x radial prefactor magnitude, m-independent, "
                 "for all n <= 12", [] {
        for (int n = 1; n <= 12; ++n)
            for (int l = 0; l < n; ++l) {
                const auto reference = hatom::decompose(build_state(n, l, 0));
                const Rational prefactor = -hatom::ri_term(build_state(n, l, 0));
                require(reference.dynamic ==
                            Rational(static_cast<long>(l) * (l + 1)) * prefactor,
                        "dynamic identity at l = " + std::to_string(l));
                for (int m = -l; m <= l; ++m)
                    require(hatom::decompose(build_state(n, l, m)).dynamic == reference.dynamic,
                            "m-dependence at (" + std::to_string(n) + "," + std::to_string(l) +
                                "," + std::to_string(m) + ")");
            }
    });

    criterion(5, "spinning field: period routes agree to 1e-12, 1/T in [7.5e14, 8.1e14] Hz, "
                 "particle orbit in [4.3e14, 5.2e14] Hz, v(3a)/c in [0.24%, 0.32%], "
                 "explicit energy = operator energy = E1/6 exactly", [] {
        const auto c = hatom::PhysicalConstants::codata2018();
        const double period = hatom::spinning_period_2p(c); // throws above 1e-12 disagreement
        const Rational moment = hatom::expectation_r2_sin2(build_state(2, 1, 0));
        const double route2 = 2.0 * M_PI * c.electron_mass * moment.to_double() *
                              c.bohr_radius * c.bohr_radius /
                              (hatom::total_l_magnitude(1) * c.hbar);
        require(std::abs(period - route2) / period < 1e-12, "period routes");

        const double f_field = 1.0 / period;
        require(f_field > 7.5e14 && f_field < 8.1e14,
                "field frequency " + std::to_string(f_field));
        const double f_particle = hatom::particle_orbit_frequency_2p(c);
        require(f_particle > 4.3e14 && f_particle < 5.2e14,
                "particle frequency " + std::to_string(f_particle));

        const double ratio = hatom::field_velocity(3.0, 1.0, period, c) / c.light_speed;
        require(ratio > 0.0024 && ratio < 0.0032, "v(3a)/c = " + std::to_string(ratio));

        const auto explicit_dyn = hatom::dynamic_energy_explicit_2p(c);
        require(explicit_dyn.in_e1 == Rational(1, 6), "explicit energy must be E1/6");
        require(explicit_dyn.in_e1 == hatom::decompose(build_state(2, 1, 1)).dynamic,
                "explicit energy must equal the operator dynamic energy");
    });

    criterion(6, "spin-coupling weights sum to 1 for every l <= 6; the l=1, j=1/2 weights "
                 "are exactly {1/3, 2/3}; mixed energies are jz-invariant", [] {
        for (int l = 0; l <= 6; ++l)
            for (int two_j : {2 * l + 1, 2 * l - 1}) {
                if (two_j < 1) continue;
                for (int two_jz = -two_j; two_jz <= two_j; two_jz += 2) {
                    Rational sum(0);
                    for (const auto& t : hatom::couple_spin(l, two_j, two_jz).terms)
                        sum += t.coeff_squared;
                    require(sum == Rational(1),
                            "weight sum at l=" + std::to_string(l) + " 2j=" +
                                std::to_string(two_j) + " 2jz=" + std::to_string(two_jz));
                }
            }

        const auto mix = hatom::couple_spin(1, 1, 1);
        require(mix.terms.size() == 2, "l=1 j=1/2 must have two components");
        require(mix.terms[0].coeff_squared == Rational(1, 3) && mix.terms[0].ml == 0,
                "weight 1/3 on the ml=0 spin-up component");
        require(mix.terms[1].coeff_squared == Rational(2, 3) && mix.terms[1].ml == 1,
                "weight 2/3 on the ml=1 spin-down component");

        for (int l : {1, 2, 3})
            for (int two_j : {2 * l + 1, 2 * l - 1}) {
                if (two_j < 1) continue;
                const int n = l + 1;
                const auto reference =
                    hatom::mixed_state_energy(hatom::couple_spin(l, two_j, two_j), n);
                require(reference.total == -Rational(1, static_cast<long>(n) * n),
                        "mixed total must stay the eigenvalue");
                for (int two_jz = -two_j; two_jz <= two_j; two_jz += 2) {
                    const auto b =
                        hatom::mixed_state_energy(hatom::couple_spin(l, two_j, two_jz), n);
                    require(b.keR == reference.keR && b.dynamic == reference.dynamic &&
                                b.totalKE == reference.totalKE &&
                                b.potential == reference.potential &&
                                b.total == reference.total,
                            "jz-invariance at l=" + std::to_string(l) + " 2jz=" +
                                std::to_string(two_jz));
                }
            }
    });

    criterion(7, "independent quadrature recomputation of every table row deviates "
                 "less than 1e-10", [] {
        const int states[][3] = {
            {1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {2, 1, 0}, {2, 1, 1},
            {3, 1, 0}, {3, 1, 1}, {3, 2, 0}, {3, 2, 1}, {3, 2, 2},
            {7, 3, 0}, {7, 3, 1}, {7, 3, 2}, {7, 3, 3},
        };
        for (const auto& s : states) {
            const auto state = build_state(s[0], s[1], s[2]);
            const double dev = hatom::cross_check_state(state);
            require(dev < 1e-10,
                    state.label() + " deviates " + hatom::detail::sci(dev));
        }
    });

    criterion(8, "the (7,3,3) z=0 section shows exactly 6 azimuthal x 4 radial maxima at "
                 "resolution 256; radial current is exactly 0 symbolically and below 1e-14 "
                 "by finite differences at 100 random points per state, n <= 7", [] {
        hatom::GridSpec spec;
        spec.extent = 84.0;
        spec.resolution = 256;
        const auto lobes = hatom::analyze_section(build_state(7, 3, 3), spec);
        require(lobes.azimuthal_maxima == 6 && lobes.radial_maxima == 4 && !lobes.central,
                "saw " + lobes.describe());

        std::mt19937 rng(8);
        std::uniform_real_distribution<double> rad(0.1, 30.0), pol(0.05, M_PI - 0.05),
            azi(0.0, 2.0 * M_PI);
        for (int n = 1; n <= 7; ++n)
            for (int l = 0; l < n; ++l)
                for (int m = -l; m <= l; ++m) {
                    const auto state = build_state(n, l, m);
                    const auto radial = state.radial.exp_poly();
                    const auto polar = state.polar.trig_poly();
                    const double amp = std::sqrt(state.radial.c2.to_double() *
                                                 state.polar.n2.to_double() / (2.0 * M_PI));
                    for (int k = 0; k < 100; ++k) {
                        const double r = rad(rng), theta = pol(rng), phi = azi(rng);
                        require(hatom::radial_current(state, r, theta) == 0.0,
                                "symbolic radial current at " + state.label());
                        // the imaginary part has no truncation term, so a
                        // generous step keeps subtraction rounding far below
                        // the tolerance
                        const auto psi = [&](double rr) {
                            return amp * radial.eval(rr) * polar.eval(theta) *
                                   std::complex<double>(std::cos(m * phi), std::sin(m * phi));
                        };
                        const double h = 1e-2;
                        const std::complex<double> dpsi = (psi(r + h) - psi(r - h)) / (2.0 * h);
                        const double jr = std::imag(std::conj(psi(r)) * dpsi);
                        require(std::abs(jr) < 1e-14,
                                "numeric radial current " + hatom::detail::sci(jr) + " at " +
                                    state.label());
                    }
                }
    });

    if (failures == 0) {
        std::cout << "all acceptance criteria hold\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
