#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hatom/angular_momentum.hpp"
#include "hatom/errors.hpp"
#include "hatom/wavefunction.hpp"

namespace hatom {

/// Sampling plane: the named axis is held at `offset` (units of a), the other
/// two Cartesian axes span the raster.
struct PlaneSpec {
    char axis = 'z';
    double offset = 0.0;
};

struct GridSpec {
    PlaneSpec plane{};
    double extent = 10.0; // half-width in units of a
    int resolution = 256; // pixels per side

    /// Even resolution keeps the nucleus between the four center pixels so an
    /// r = 0 sample never lands on the 1s-cusp.
    void validate() const {
        if (plane.axis != 'x' && plane.axis != 'y' && plane.axis != 'z')
            throw std::domain_error("plane axis must be x, y, or z");
        if (!(extent > 0)) throw std::domain_error("extent must be positive");
        if (resolution < 16 || resolution % 2 != 0)
            throw std::domain_error("resolution must be even and >= 16");
    }

    /// Cartesian point of the pixel-center (i = column, j = row; row 0 is the
    /// top of the image, i.e. the largest second-coordinate value).
    std::array<double, 3> point(int i, int j) const {
        const double step = 2.0 * extent / resolution;
        const double u = -extent + (i + 0.5) * step;
        const double v = extent - (j + 0.5) * step;
        switch (plane.axis) {
            case 'x': return {offset_(), u, v};
            case 'y': return {u, offset_(), v};
            default: return {u, v, offset_()};
        }
    }

private:
    double offset_() const { return plane.offset; }
};

/// |Psi|^2 in units of a^-3, phi-independent (|e^{im phi}|^2 = 1).
inline double density(const HydrogenState& state, double r, double theta, double /*phi*/) {
    if (r < 0) throw std::domain_error("r must be >= 0");
    const double radial = state.radial.exp_poly().eval(r);
    const double polar = state.polar.trig_poly().eval(theta);
    return state.radial.c2.to_double() * radial * radial * state.polar.n2.to_double() * polar *
           polar / (2.0 * M_PI);
}

/// Density sampled by sections: for m != 0 the azimuthal factor is the real
/// standing-wave combination cos^2(m phi)/pi (same total mass as 1/(2 pi),
/// but it resolves the azimuthal node structure that the |e^{im phi}|^2
/// modulus hides).
inline double section_density(const HydrogenState& state, double x, double y, double z) {
    const double r = std::sqrt(x * x + y * y + z * z);
    const double theta = r > 0 ? std::acos(std::clamp(z / r, -1.0, 1.0)) : 0.0;
    const double base = density(state, r, theta, 0.0);
    if (state.m == 0) return base;
    const double phi = std::atan2(y, x);
    const double c = std::cos(state.m * phi);
    return base * 2.0 * c * c;
}

struct Raster {
    std::string label;
    PlaneSpec plane;
    double extent = 0.0;
    int resolution = 0;
    std::string note;
    std::vector<double> values; // row-major, resolution x resolution
    double max_value = 0.0;

    double at(int i, int j) const { return values[static_cast<std::size_t>(j) * resolution + i]; }
};

/// Raw |Psi|^2 raster over the requested plane. Values are absolute densities
/// (units a^-3); image writers normalize by max_value.
inline Raster section(const HydrogenState& state, const GridSpec& spec) {
    spec.validate();
    Raster raster;
    raster.label = state.label();
    raster.plane = spec.plane;
    raster.extent = spec.extent;
    raster.resolution = spec.resolution;
    raster.note = state.m == 0 ? "azimuthal factor 1/(2pi)"
                               : "azimuthal factor cos^2(m phi)/pi (real standing-wave form)";
    raster.values.resize(static_cast<std::size_t>(spec.resolution) * spec.resolution);
    for (int j = 0; j < spec.resolution; ++j) {
        for (int i = 0; i < spec.resolution; ++i) {
            const auto [x, y, z] = spec.point(i, j);
            const double v = section_density(state, x, y, z);
            raster.values[static_cast<std::size_t>(j) * spec.resolution + i] = v;
            raster.max_value = std::max(raster.max_value, v);
        }
    }
    return raster;
}

/// One velocity arrow of the spinning-field picture: plane coordinates in
/// units of a, direction a 3-D unit vector (always azimuthal), speed in m/s,
/// and the local density as a filter weight.
struct VelocityArrow {
    double u = 0.0, v = 0.0;
    double magnitude = 0.0;
    std::array<double, 3> direction{0.0, 0.0, 0.0};
    double weight = 0.0;
};

/// Tangential velocity arrows v = 2 pi r sin(theta)/T of the rotating 2p
/// field, sampled over the plane. Defined only for (2,1,m) states.
inline std::vector<VelocityArrow> velocity_field(const HydrogenState& state, const GridSpec& spec,
                                                 double period_s, const PhysicalConstants& c) {
    if (state.n != 2 || state.l != 1)
        throw std::domain_error("velocity field analysis covers only the (2,1,m) states");
    if (!(period_s > 0)) throw std::domain_error("period must be positive");
    spec.validate();
    std::vector<VelocityArrow> arrows;
    arrows.reserve(static_cast<std::size_t>(spec.resolution) * spec.resolution);
    for (int j = 0; j < spec.resolution; ++j) {
        for (int i = 0; i < spec.resolution; ++i) {
            const auto [x, y, z] = spec.point(i, j);
            const double r = std::sqrt(x * x + y * y + z * z);
            const double rho = std::hypot(x, y); // r sin(theta)
            VelocityArrow a;
            const double step = 2.0 * spec.extent / spec.resolution;
            a.u = -spec.extent + (i + 0.5) * step;
            a.v = spec.extent - (j + 0.5) * step;
            a.magnitude = 2.0 * M_PI * rho * c.bohr_radius / period_s;
            if (rho > 0) a.direction = {-y / rho, x / rho, 0.0};
            const double theta = r > 0 ? std::acos(std::clamp(z / r, -1.0, 1.0)) : 0.0;
            a.weight = density(state, r, theta, 0.0);
            arrows.push_back(a);
        }
    }
    return arrows;
}

/// Eq.-of-continuity radial flux (i hbar/2m)(Psi dPsi*/dr - Psi* dPsi/dr).
/// The radial factor is real and the phase carries no r-dependence, so the
/// bracket cancels symbolically; the cancellation is verified on the exact
/// representation and the result is an exact 0.
inline double radial_current(const HydrogenState& state, double r, double theta) {
    if (!(r > 0)) throw std::domain_error("r must be > 0");
    (void)theta;
    const ExpPoly radial = state.radial.exp_poly();
    const ExpPoly bracket = radial * radial.derivative() - radial.derivative() * radial;
    if (!bracket.is_zero())
        throw ConsistencyError("radial current failed to cancel symbolically");
    return 0.0;
}

/// Structural summary of a section: where the density peaks and how many
/// local maxima lie on the peak circle (azimuthal) and along the peak ray
/// (radial). Counting is plateau-tolerant so exact ties cannot double-count.
struct LobeSummary {
    double r_peak = 0.0;
    double phi_peak = 0.0;
    int azimuthal_maxima = 0;
    int radial_maxima = 0;
    bool central = false; // peak sits at the nucleus (s-state "1 central maximum")

    std::string describe() const {
        if (central) return "1 central maximum";
        return std::to_string(azimuthal_maxima) + " azimuthal x " + std::to_string(radial_maxima) +
               " radial maxima";
    }
};

namespace detail {

/// Local maxima of a sampled profile with plateau tolerance: consecutive
/// samples within `tol` (relative to the profile peak) merge into one
/// plateau, and a plateau counts when both neighbors sit strictly below it.
/// Open endpoints count when their single neighbor sits below (`periodic`
/// wraps instead, for circles).
inline int count_local_maxima(const std::vector<double>& f, bool periodic, double tol = 1e-12) {
    const int n = static_cast<int>(f.size());
    if (n < 3) return 0;
    double peak = 0.0;
    for (double v : f) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return 0;
    const double eps = tol * peak;
    const auto cmp = [&](double a, double b) {
        if (a > b + eps) return 1;
        if (a < b - eps) return -1;
        return 0;
    };
    int count = 0;
    if (periodic) {
        for (int i = 0; i < n; ++i) {
            // find the plateau starting at i (skip if we're inside one)
            const int prev = (i + n - 1) % n;
            if (cmp(f[i], f[prev]) == 0 && i > 0) continue;
            int j = i;
            while (cmp(f[(j + 1) % n], f[i]) == 0 && j < i + n - 1) ++j;
            if (j - i == n - 1) return 1; // constant circle: one big plateau
            const int before = (i + n - 1) % n;
            const int after = (j + 1) % n;
            if (cmp(f[i], f[before]) > 0 && cmp(f[i], f[after]) > 0) ++count;
        }
        return count;
    }
    int i = 0;
    while (i < n) {
        int j = i;
        while (j + 1 < n && cmp(f[j + 1], f[i]) == 0) ++j;
        const bool left_ok = (i == 0) || cmp(f[i], f[i - 1]) > 0;
        const bool right_ok = (j == n - 1) || cmp(f[i], f[j + 1]) > 0;
        if (left_ok && right_ok && !(i == 0 && j == n - 1)) ++count;
        i = j + 1;
    }
    return count;
}

} // namespace detail

/// Locates the density peak on the plane through the nucleus and counts
/// azimuthal maxima around the peak circle and radial maxima along the peak
/// ray. The ray is sampled out to the grid extent, so the extent must cover
/// the state's outermost antinode for the radial count to be complete
/// (12 n a suffices for the states here).
inline LobeSummary analyze_section(const HydrogenState& state, const GridSpec& spec) {
    spec.validate();
    if (spec.plane.axis != 'z' || spec.plane.offset != 0.0)
        throw std::domain_error("lobe analysis is defined for the z = 0 plane");

    const int samples = 4 * spec.resolution;
    const double pixel = 2.0 * spec.extent / spec.resolution;

    // peak location: scan radius x angle directly (finer than the raster in
    // angle, same radial granularity)
    LobeSummary summary;
    double best = -1.0;
    for (int ir = 0; ir < 2 * spec.resolution; ++ir) {
        const double r = (ir + 0.5) * spec.extent / (2.0 * spec.resolution);
        for (int ia = 0; ia < 64; ++ia) {
            const double phi = 2.0 * M_PI * ia / 64;
            const double v = section_density(state, r * std::cos(phi), r * std::sin(phi), 0.0);
            if (v > best) {
                best = v;
                summary.r_peak = r;
                summary.phi_peak = phi;
            }
        }
    }
    if (summary.r_peak < pixel) {
        summary.central = true;
        summary.azimuthal_maxima = 1;
        summary.radial_maxima = 1;
        return summary;
    }

    std::vector<double> circle(samples);
    for (int i = 0; i < samples; ++i) {
        const double phi = 2.0 * M_PI * i / samples;
        circle[i] = section_density(state, summary.r_peak * std::cos(phi),
                                    summary.r_peak * std::sin(phi), 0.0);
    }
    summary.azimuthal_maxima = detail::count_local_maxima(circle, /*periodic=*/true);

    std::vector<double> ray(samples);
    const double cphi = std::cos(summary.phi_peak), sphi = std::sin(summary.phi_peak);
    for (int i = 0; i < samples; ++i) {
        const double r = (i + 0.5) * spec.extent / samples;
        ray[i] = section_density(state, r * cphi, r * sphi, 0.0);
    }
    summary.radial_maxima = detail::count_local_maxima(ray, /*periodic=*/false);
    return summary;
}

/// Row-major CSV with '#'-prefixed metadata header; raw absolute densities.
inline void write_csv(const Raster& raster, std::ostream& out) {
    out << "# state " << raster.label << "\n";
    out << "# plane " << raster.plane.axis << " offset " << raster.plane.offset << "\n";
    out << "# extent " << raster.extent << " resolution " << raster.resolution << "\n";
    out << "# " << raster.note << "\n";
    out.precision(17);
    for (int j = 0; j < raster.resolution; ++j) {
        for (int i = 0; i < raster.resolution; ++i) {
            if (i) out << ',';
            out << raster.at(i, j);
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("raster CSV write failed");
}

/// 8-bit grayscale PGM (P2), linearly max-normalized.
inline void write_pgm(const Raster& raster, std::ostream& out) {
    out << "P2\n" << raster.resolution << ' ' << raster.resolution << "\n255\n";
    const double scale = raster.max_value > 0 ? 255.0 / raster.max_value : 0.0;
    for (int j = 0; j < raster.resolution; ++j) {
        for (int i = 0; i < raster.resolution; ++i) {
            if (i) out << ' ';
            out << static_cast<int>(std::lround(raster.at(i, j) * scale));
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("raster PGM write failed");
}

} // namespace hatom
