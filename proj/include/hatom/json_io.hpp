#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hatom/angular_momentum.hpp"
#include "hatom/energy.hpp"
#include "hatom/field_grid.hpp"
#include "hatom/rational.hpp"
#include "hatom/wavefunction.hpp"

namespace hatom {

using nlohmann::json;

constexpr double kE1ElectronVolts = 13.605693; // display only

inline std::string to_fraction(const Rational& r) { return r.str(); }

inline json coeff_list(const std::vector<Rational>& coeffs) {
    json arr = json::array();
    for (const auto& c : coeffs) arr.push_back(to_fraction(c));
    return arr;
}

inline json wavefunction_json(const HydrogenState& state) {
    return json{{"n", state.n},
                {"l", state.l},
                {"m", state.m},
                {"c2", to_fraction(state.radial.c2)},
                {"radial_poly", coeff_list(state.radial.poly)},
                {"beta", to_fraction(state.radial.beta)},
                {"polar_sin_power", std::abs(state.m)},
                {"polar_cos_poly", coeff_list(state.polar.cos_poly)},
                {"polar_n2", to_fraction(state.polar.n2)}};
}

inline json energy_json(const EnergyBreakdown& b) {
    return json{{"keR", to_fraction(b.keR)},
                {"keTheta", to_fraction(b.keTheta)},
                {"kePhi", to_fraction(b.kePhi)},
                {"dynamic", to_fraction(b.dynamic)},
                {"totalKE", to_fraction(b.totalKE)},
                {"potential", to_fraction(b.potential)},
                {"total", to_fraction(b.total)},
                {"approx",
                 json{{"keR", b.keR.to_double()},
                      {"keTheta", b.keTheta.to_double()},
                      {"kePhi", b.kePhi.to_double()},
                      {"dynamic", b.dynamic.to_double()},
                      {"totalKE", b.totalKE.to_double()},
                      {"potential", b.potential.to_double()},
                      {"total", b.total.to_double()},
                      {"total_eV", b.total.to_double() * kE1ElectronVolts}}}};
}

inline json lobe_summary_json(const LobeSummary& s) {
    return json{{"r_peak", s.r_peak},
                {"phi_peak", s.phi_peak},
                {"azimuthal_maxima", s.azimuthal_maxima},
                {"radial_maxima", s.radial_maxima},
                {"central", s.central},
                {"summary", s.describe()}};
}

inline json arrows_json(const std::vector<VelocityArrow>& arrows) {
    json arr = json::array();
    for (const auto& a : arrows) {
        arr.push_back(json{{"u", a.u},
                           {"v", a.v},
                           {"magnitude_m_s", a.magnitude},
                           {"direction", {a.direction[0], a.direction[1], a.direction[2]}},
                           {"weight", a.weight}});
    }
    return arr;
}

inline json spin_coupled_json(const SpinCoupledState& s) {
    json terms = json::array();
    for (const auto& t : s.terms)
        terms.push_back(json{{"coeff_squared", to_fraction(t.coeff_squared)},
                             {"ml", t.ml},
                             {"sz", t.two_sz > 0 ? "+1/2" : "-1/2"}});
    return json{{"l", s.l},
                {"two_j", s.two_j},
                {"two_jz", s.two_jz},
                {"terms", std::move(terms)}};
}

/// Parses {"electron_mass":..., "hbar":..., "bohr_radius":..., "light_speed":..., "e1":...},
/// falling back to CODATA-2018 for absent fields.
inline PhysicalConstants constants_from_json(const json& j) {
    PhysicalConstants c = PhysicalConstants::codata2018();
    if (j.contains("electron_mass")) c.electron_mass = j.at("electron_mass").get<double>();
    if (j.contains("hbar")) c.hbar = j.at("hbar").get<double>();
    if (j.contains("bohr_radius")) c.bohr_radius = j.at("bohr_radius").get<double>();
    if (j.contains("light_speed")) c.light_speed = j.at("light_speed").get<double>();
    if (j.contains("e1")) c.e1 = j.at("e1").get<double>();
    c.validate();
    return c;
}

} // namespace hatom
