#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hatom/hatom.hpp"
#include "hatom/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitIo = 3;
constexpr int kMaxN = 30;

using hatom::json;
using hatom::Rational;

std::string fmt_rat(const Rational& r) { return r.pretty(); }

std::string fmt_double(double v, int precision = 8) {
    std::ostringstream os;
    os << std::setprecision(precision) << v;
    return os.str();
}

void check_ceiling(int n) {
    if (n > kMaxN)
        throw std::domain_error("n=" + std::to_string(n) + " exceeds the supported ceiling of " +
                                std::to_string(kMaxN));
}

void reject_pgm(const std::string& format) {
    if (format == "pgm") throw std::domain_error("pgm output applies only to section rasters");
}

/// Writes `content` to `path` (or stdout when path is empty).
void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open output file: " + path);
    out << content;
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

hatom::PhysicalConstants load_constants(const std::string& path) {
    if (path.empty()) return hatom::PhysicalConstants::codata2018();
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open constants file: " + path);
    json j;
    try {
        in >> j;
        return hatom::constants_from_json(j);
    } catch (const json::exception& e) {
        throw std::domain_error("constants file rejected: " + std::string(e.what()));
    } catch (const hatom::ConsistencyError& e) {
        // a bad user-supplied file is bad input, not a library invariant failure
        throw std::domain_error("constants file rejected: " + std::string(e.what()));
    }
}

struct PlaneArg {
    char axis = 'z';
    double offset = 0.0;
};

PlaneArg parse_plane(const std::string& text) {
    if (text.empty()) return {};
    PlaneArg p;
    p.axis = static_cast<char>(std::tolower(static_cast<unsigned char>(text[0])));
    if (p.axis != 'x' && p.axis != 'y' && p.axis != 'z')
        throw std::domain_error("plane must be one of x, y, z (optionally axis=offset)");
    if (text.size() > 1) {
        if (text[1] != '=') throw std::domain_error("plane syntax is axis or axis=offset");
        std::size_t used = 0;
        p.offset = std::stod(text.substr(2), &used);
        if (used != text.size() - 2) throw std::domain_error("bad plane offset: " + text);
    }
    return p;
}

// ---- text rendering ------------------------------------------------------

/// Code-point count, so the multibyte "±" in row labels pads correctly.
std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

std::string pad(const std::string& s, std::size_t width, bool left) {
    const std::size_t w = display_width(s);
    const std::string fill(width > w ? width - w : 0, ' ');
    return left ? s + fill : fill + s;
}

std::string render_breakdown_text(const std::string& label, const hatom::EnergyBreakdown& b) {
    std::ostringstream os;
    os << "state " << label << "  (energies in units of E1; E1 = "
       << fmt_double(hatom::kE1ElectronVolts) << " eV, display only)\n";
    const std::vector<std::pair<const char*, const Rational*>> rows = {
        {"KE_r", &b.keR},          {"KE_theta", &b.keTheta}, {"KE_phi", &b.kePhi},
        {"dynamic", &b.dynamic},   {"total KE", &b.totalKE}, {"potential", &b.potential},
        {"total", &b.total},
    };
    std::size_t width = 0;
    for (const auto& [name, value] : rows) width = std::max(width, fmt_rat(*value).size());
    for (const auto& [name, value] : rows) {
        os << "  " << std::left << std::setw(10) << name << std::right << std::setw(static_cast<int>(width))
           << fmt_rat(*value) << "   = " << fmt_double(value->to_double()) << "\n";
    }
    return os.str();
}

const std::vector<const char*> kTableColumns = {"KE_r",    "KE_theta", "KE_phi", "dynamic",
                                                "totalKE", "potential", "total"};

std::vector<std::string> row_cells(const hatom::EnergyBreakdown& b, bool pretty) {
    const auto f = [&](const Rational& r) { return pretty ? fmt_rat(r) : r.str(); };
    return {f(b.keR),     f(b.keTheta),  f(b.kePhi), f(b.dynamic),
            f(b.totalKE), f(b.potential), f(b.total)};
}

std::string render_table_text(const std::vector<std::pair<std::string, hatom::EnergyBreakdown>>& t) {
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head = {"state"};
    head.insert(head.end(), kTableColumns.begin(), kTableColumns.end());
    grid.push_back(head);
    for (const auto& [label, b] : t) {
        std::vector<std::string> row = {label};
        const auto cells = row_cells(b, true);
        row.insert(row.end(), cells.begin(), cells.end());
        grid.push_back(row);
    }
    std::vector<std::size_t> widths(grid[0].size(), 0);
    for (const auto& row : grid)
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], display_width(row[i]));
    std::ostringstream os;
    os << "energies in units of E1 (E_n = E1/n^2)\n";
    for (const auto& row : grid) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "  " : "") << pad(row[i], widths[i], /*left=*/i == 0);
        os << "\n";
    }
    return os.str();
}

std::string render_table_csv(const std::vector<std::pair<std::string, hatom::EnergyBreakdown>>& t) {
    std::ostringstream os;
    os << "label";
    for (const char* c : kTableColumns) os << ',' << c;
    os << '\n';
    for (const auto& [label, b] : t) {
        os << '"' << label << '"';
        for (const auto& cell : row_cells(b, false)) os << ',' << cell;
        os << '\n';
    }
    return os.str();
}

json table_json(const std::vector<std::pair<std::string, hatom::EnergyBreakdown>>& t) {
    json rows = json::array();
    for (const auto& [label, b] : t) {
        json row = hatom::energy_json(b);
        row["label"] = label;
        rows.push_back(std::move(row));
    }
    return json{{"unit", "E1"}, {"rows", std::move(rows)}};
}

// ---- subcommand implementations -------------------------------------------

int cmd_state(int n, int l, int m, const std::string& format, const std::string& out) {
    reject_pgm(format);
    check_ceiling(n);
    const hatom::HydrogenState state = hatom::build_state(n, l, m);
    hatom::verify_eigenvalue(state);
    const hatom::EnergyBreakdown b = hatom::decompose(state);
    if (format == "json") {
        json j = hatom::energy_json(b);
        j["state"] = json{{"n", n}, {"l", l}, {"m", m}};
        j["wavefunction"] = hatom::wavefunction_json(state);
        emit(out, j.dump(2) + "\n");
    } else if (format == "csv") {
        std::ostringstream os;
        os << "label";
        for (const char* c : kTableColumns) os << ',' << c;
        os << '\n' << '"' << state.label() << '"';
        for (const auto& cell : row_cells(b, false)) os << ',' << cell;
        os << '\n';
        emit(out, os.str());
    } else {
        emit(out, render_breakdown_text(state.label(), b));
    }
    return kExitOk;
}

int cmd_table2(const std::string& format, const std::string& out) {
    reject_pgm(format);
    const auto table = hatom::energy_table();
    if (format == "json")
        emit(out, table_json(table).dump(2) + "\n");
    else if (format == "csv")
        emit(out, render_table_csv(table));
    else
        emit(out, render_table_text(table));
    return kExitOk;
}

int cmd_expect(int n, int l, int m, int k, const std::string& format, const std::string& out) {
    reject_pgm(format);
    check_ceiling(n);
    const hatom::HydrogenState state = hatom::build_state(n, l, m);
    const Rational value = hatom::expectation_r_power(state, k);
    if (format == "json") {
        json j{{"state", json{{"n", n}, {"l", l}, {"m", m}}},
               {"k", k},
               {"exact", value.str()},
               {"approx", value.to_double()},
               {"unit", "a^" + std::to_string(k)}};
        emit(out, j.dump(2) + "\n");
    } else if (format == "csv") {
        emit(out, "n,l,m,k,exact,approx\n" + std::to_string(n) + ',' + std::to_string(l) + ',' +
                      std::to_string(m) + ',' + std::to_string(k) + ',' + value.str() + ',' +
                      fmt_double(value.to_double(), 17) + "\n");
    } else {
        emit(out, "<r^" + std::to_string(k) + "> for state " + state.label() + " = " +
                      fmt_rat(value) + " a^" + std::to_string(k) + "  = " +
                      fmt_double(value.to_double()) + "\n");
    }
    return kExitOk;
}

int cmd_spin2p(const std::string& format, const std::string& out, const std::string& constants_path,
               bool arrows, const std::string& plane_text, double extent, int resolution) {
    reject_pgm(format);
    const hatom::PhysicalConstants c = load_constants(constants_path);
    const double period = hatom::spinning_period_2p(c);
    const auto explicit_dyn = hatom::dynamic_energy_explicit_2p(c);
    const Rational operator_dyn = hatom::decompose(hatom::build_state(2, 1, 0)).dynamic;
    const double f_field = 1.0 / period;
    const double f_particle = hatom::particle_orbit_frequency_2p(c);
    const double v3a = hatom::field_velocity(3.0, 1.0, period, c);
    const bool agreement = explicit_dyn.in_e1 == operator_dyn;

    if (format == "json") {
        json j{{"period_s", period},
               {"f_field_hz", f_field},
               {"f_particle_hz", f_particle},
               {"v_3a_m_s", v3a},
               {"v_3a_over_c", v3a / c.light_speed},
               {"explicit_dynamic", json{{"joules", explicit_dyn.joules},
                                         {"in_e1", explicit_dyn.in_e1.str()}}},
               {"operator_dynamic", operator_dyn.str()},
               {"agreement", agreement}};
        if (arrows) {
            const PlaneArg p = parse_plane(plane_text);
            hatom::GridSpec spec{{p.axis, p.offset}, extent, resolution};
            spec.validate();
            j["arrows"] =
                hatom::arrows_json(hatom::velocity_field(hatom::build_state(2, 1, 1), spec, period, c));
        }
        emit(out, j.dump(2) + "\n");
    } else if (format == "csv") {
        if (arrows) throw std::domain_error("arrow output requires --format json");
        std::ostringstream os;
        os << "quantity,value\n";
        os << "period_s," << fmt_double(period, 17) << '\n';
        os << "f_field_hz," << fmt_double(f_field, 17) << '\n';
        os << "f_particle_hz," << fmt_double(f_particle, 17) << '\n';
        os << "v_3a_m_s," << fmt_double(v3a, 17) << '\n';
        os << "v_3a_over_c," << fmt_double(v3a / c.light_speed, 17) << '\n';
        os << "explicit_dynamic_e1," << explicit_dyn.in_e1.str() << '\n';
        os << "operator_dynamic_e1," << operator_dyn.str() << '\n';
        os << "agreement," << (agreement ? "true" : "false") << '\n';
        emit(out, os.str());
    } else {
        if (arrows) throw std::domain_error("arrow output requires --format json");
        std::ostringstream os;
        os << "2p spinning-field analysis\n";
        os << "  rotation period T        " << fmt_double(period) << " s\n";
        os << "  field frequency 1/T      " << fmt_double(f_field) << " Hz\n";
        os << "  particle-orbit frequency " << fmt_double(f_particle) << " Hz\n";
        os << "  field speed at r=3a      " << fmt_double(v3a) << " m/s  ("
           << fmt_double(100.0 * v3a / c.light_speed, 3) << "% of c)\n";
        os << "  explicit dynamic energy  " << fmt_rat(explicit_dyn.in_e1) << " E1  = "
           << fmt_double(explicit_dyn.joules) << " J\n";
        os << "  operator dynamic energy  " << fmt_rat(operator_dyn) << " E1\n";
        os << "  agreement                " << (agreement ? "yes" : "NO") << "\n";
        emit(out, os.str());
    }
    return kExitOk;
}

int cmd_section(int n, int l, int m, const std::string& format, const std::string& out,
                const std::string& plane_text, double extent, bool extent_given, int resolution) {
    check_ceiling(n);
    const hatom::HydrogenState state = hatom::build_state(n, l, m);
    const PlaneArg p = parse_plane(plane_text);
    hatom::GridSpec spec{{p.axis, p.offset}, extent, resolution};
    if (!extent_given) spec.extent = 40.0 * n / 7.0;
    spec.validate();

    const hatom::Raster raster = hatom::section(state, spec);
    if (!out.empty()) {
        std::ofstream file(out, std::ios::binary);
        if (!file) throw std::ios_base::failure("cannot open output file: " + out);
        if (format == "pgm")
            hatom::write_pgm(raster, file);
        else
            hatom::write_csv(raster, file);
        if (!file) throw std::ios_base::failure("write failed: " + out);
    }

    const bool analyzable = spec.plane.axis == 'z' && spec.plane.offset == 0.0;
    std::ostringstream os;
    if (format == "json") {
        json j{{"state", json{{"n", n}, {"l", l}, {"m", m}}},
               {"plane", std::string(1, spec.plane.axis) + "=" + fmt_double(spec.plane.offset)},
               {"extent", spec.extent},
               {"resolution", spec.resolution},
               {"max_density", raster.max_value},
               {"written", out}};
        if (analyzable) {
            hatom::GridSpec analysis = spec;
            analysis.extent = std::max(spec.extent, 12.0 * n);
            j["lobes"] = hatom::lobe_summary_json(hatom::analyze_section(state, analysis));
        }
        os << j.dump(2) << "\n";
    } else {
        os << "section " << state.label() << "  plane " << spec.plane.axis << "="
           << fmt_double(spec.plane.offset) << "  extent " << fmt_double(spec.extent)
           << "a  resolution " << spec.resolution << "\n";
        os << "  peak density " << fmt_double(raster.max_value) << " a^-3\n";
        if (!out.empty()) os << "  wrote " << (format == "pgm" ? "PGM" : "CSV") << " to " << out << "\n";
        if (analyzable) {
            hatom::GridSpec analysis = spec;
            analysis.extent = std::max(spec.extent, 12.0 * n);
            os << "  structure: " << hatom::analyze_section(state, analysis).describe() << "\n";
        } else {
            os << "  structure: lobe analysis is defined for the z=0 plane\n";
        }
    }
    std::cout << os.str();
    return kExitOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyReport {
    std::vector<std::pair<std::string, std::string>> passed; // family -> detail
    std::vector<std::pair<std::string, std::string>> failed;

    void ok(const std::string& family, const std::string& detail) { passed.emplace_back(family, detail); }
    void fail(const std::string& family, const std::string& detail) { failed.emplace_back(family, detail); }

    void run(const std::string& family, const std::string& detail, const std::function<void()>& body) {
        try {
            body();
            ok(family, detail);
        } catch (const std::exception& e) {
            fail(family, e.what());
        }
    }
};

int cmd_verify(int max_n, bool inject_bad_c2, const std::string& format, const std::string& out) {
    reject_pgm(format);
    if (max_n < 1 || max_n > kMaxN)
        throw std::domain_error("--max-n must lie in [1, " + std::to_string(kMaxN) + "]");
    VerifyReport report;

    report.run("normalization", "norm == 1 exactly for all states, n <= " + std::to_string(max_n), [&] {
        for (int n = 1; n <= max_n; ++n)
            for (int l = 0; l < n; ++l)
                for (int m = 0; m <= l; ++m) {
                    hatom::HydrogenState st = hatom::build_state(n, l, m);
                    if (inject_bad_c2 && n == 2 && l == 1 && m == 0)
                        st.radial.c2 += Rational(1, 100);
                    if (hatom::norm_squared(st) != Rational(1))
                        throw hatom::ConsistencyError("normalization broken for state " + st.label());
                }
    });
    report.run("eigenvalue", "symbolic (H - E) Psi == 0 for all states", [&] {
        for (int n = 1; n <= max_n; ++n)
            for (int l = 0; l < n; ++l)
                for (int m = 0; m <= l; ++m) hatom::verify_eigenvalue(hatom::build_state(n, l, m));
    });
    report.run("checksum", "total KE == E1/n^2 and total == -E1/n^2 exactly", [&] {
        for (int n = 1; n <= max_n; ++n)
            for (int l = 0; l < n; ++l)
                for (int m = 0; m <= l; ++m) {
                    const auto b = hatom::decompose(hatom::build_state(n, l, m));
                    const Rational expect(1, static_cast<long>(n) * n);
                    if (b.totalKE != expect || b.total != -expect)
                        throw hatom::ConsistencyError("checksum failed at n=" + std::to_string(n));
                }
    });
    report.run("virial", "potential == -2 x total KE exactly", [&] {
        for (int n = 1; n <= max_n; ++n)
            for (int l = 0; l < n; ++l)
                for (int m = 0; m <= l; ++m) {
                    const auto b = hatom::decompose(hatom::build_state(n, l, m));
                    if (b.potential != Rational(-2) * b.totalKE)
                        throw hatom::ConsistencyError("virial failed at n=" + std::to_string(n));
                }
    });
    report.run("m-independence", "dynamic energy depends only on (n, l)", [&] {
        for (int n = 1; n <= max_n; ++n)
            for (int l = 0; l < n; ++l) {
                const Rational base = hatom::decompose(hatom::build_state(n, l, 0)).dynamic;
                for (int m = 1; m <= l; ++m)
                    if (hatom::decompose(hatom::build_state(n, l, m)).dynamic != base)
                        throw hatom::ConsistencyError("dynamic energy varies with m at (n,l)=(" +
                                                      std::to_string(n) + "," + std::to_string(l) + ")");
            }
    });
    report.run("dynamic-identity", "KE_theta + KE_phi == l(l+1) x |RI| exactly", [&] {
        for (int n = 1; n <= max_n; ++n)
            for (int l = 0; l < n; ++l)
                for (int m = 0; m <= l; ++m) {
                    const auto st = hatom::build_state(n, l, m);
                    const auto b = hatom::decompose(st);
                    if (b.dynamic != Rational(hatom::l_squared_exact(l)) * (-hatom::ri_term(st)))
                        throw hatom::ConsistencyError("dynamic identity failed for " + st.label());
                }
    });
    report.run("oracle", "quadrature recomputation of all table rows deviates < 1e-10", [&] {
        static const int rows[][3] = {{1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {2, 1, 0}, {2, 1, 1},
                                      {3, 1, 0}, {3, 1, 1}, {3, 2, 0}, {3, 2, 1}, {3, 2, 2},
                                      {7, 3, 0}, {7, 3, 1}, {7, 3, 2}, {7, 3, 3}};
        for (const auto& r : rows) {
            const double dev = hatom::cross_check_state(hatom::build_state(r[0], r[1], r[2]));
            if (!(dev < 1e-10))
                throw hatom::ConsistencyError("oracle deviation " + std::to_string(dev) + " at (" +
                                              std::to_string(r[0]) + "," + std::to_string(r[1]) + "," +
                                              std::to_string(r[2]) + ")");
        }
    });
    report.run("quadrature-selftest", "Laguerre rule of order q integrates x^{2q-1} e^{-x} to (2q-1)!", [&] {
        for (int q : {4, 8, 16}) {
            const double got = hatom::quad_radial(hatom::ExpPoly::term(Rational(1), 2 * q - 1, Rational(1)), q);
            const double expect = hatom::factorial(static_cast<unsigned>(2 * q - 1)).get_d();
            if (std::abs(got - expect) / expect > 1e-9)
                throw hatom::ConsistencyError("Laguerre self-test failed at order " + std::to_string(q));
        }
    });
    report.run("spin-coupling", "sum of coefficient squares == 1 for all l <= 6 couplings", [&] {
        for (int l = 0; l <= 6; ++l)
            for (int two_j : {2 * l + 1, 2 * l - 1}) {
                if (two_j < 1) continue;
                for (int two_jz = -two_j; two_jz <= two_j; two_jz += 2)
                    hatom::couple_spin(l, two_j, two_jz); // throws if the sum is not 1
            }
        const auto eq12 = hatom::couple_spin(1, 1, 1);
        if (eq12.terms.size() != 2 || eq12.terms[0].coeff_squared != Rational(1, 3) ||
            eq12.terms[1].coeff_squared != Rational(2, 3))
            throw hatom::ConsistencyError("j=1/2 coupling weights are not (1/3, 2/3)");
    });
    report.run("radial-current", "j_r cancels symbolically for all states with n <= 7", [&] {
        for (int n = 1; n <= std::min(max_n, 7); ++n)
            for (int l = 0; l < n; ++l)
                for (int m = 0; m <= l; ++m)
                    if (hatom::radial_current(hatom::build_state(n, l, m), 1.5, 0.7) != 0.0)
                        throw hatom::ConsistencyError("radial current nonzero");
    });
    report.run("table-goldens", "published energy cells match exactly", [&] {
        const auto table = hatom::energy_table();
        const auto find = [&](const char* label) -> const hatom::EnergyBreakdown& {
            for (const auto& [name, b] : table)
                if (name == label) return b;
            throw hatom::ConsistencyError(std::string("row missing: ") + label);
        };
        if (find("3,2,±2").keR != Rational(1, 45)) throw hatom::ConsistencyError("keR(3,2,2)");
        if (find("3,2,±2").keTheta != Rational(2, 135)) throw hatom::ConsistencyError("keTheta(3,2,2)");
        if (find("3,2,±2").kePhi != Rational(10, 135)) throw hatom::ConsistencyError("kePhi(3,2,2)");
        if (find("7,3,±1").keTheta != Rational(17, 2401)) throw hatom::ConsistencyError("keTheta(7,3,1)");
        if (find("7,3,±3").kePhi != Rational(21, 2401)) throw hatom::ConsistencyError("kePhi(7,3,3)");
    });
    report.run("spinning-field", "closed form and moment-integral period agree; frequencies in range", [&] {
        const auto c = hatom::PhysicalConstants::codata2018();
        const double period = hatom::spinning_period_2p(c); // throws on route disagreement
        const double f_field = 1.0 / period;
        if (f_field < 7.5e14 || f_field > 8.1e14)
            throw hatom::ConsistencyError("field frequency out of range");
        const double f_particle = hatom::particle_orbit_frequency_2p(c);
        if (f_particle < 4.3e14 || f_particle > 5.2e14)
            throw hatom::ConsistencyError("particle frequency out of range");
        hatom::dynamic_energy_explicit_2p(c); // throws on operator mismatch
    });

    std::ostringstream os;
    if (format == "json") {
        json families = json::array();
        for (const auto& [name, detail] : report.passed)
            families.push_back(json{{"family", name}, {"ok", true}, {"detail", detail}});
        for (const auto& [name, detail] : report.failed)
            families.push_back(json{{"family", name}, {"ok", false}, {"detail", detail}});
        os << json{{"ok", report.failed.empty()}, {"families", std::move(families)}}.dump(2) << "\n";
    } else {
        for (const auto& [name, detail] : report.passed) os << "ok   " << name << ": " << detail << "\n";
        for (const auto& [name, detail] : report.failed) os << "FAIL " << name << ": " << detail << "\n";
        os << (report.failed.empty() ? "all invariants hold" : "invariant failures detected") << "\n";
    }
    emit(out, os.str());
    return report.failed.empty() ? kExitOk : kExitInvariant;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hydrogen-atom eigenfunctions, energy decompositions, and field analyses"};
    app.require_subcommand(1);
    app.fallthrough(); // lets the global --format/--out/--constants follow the subcommand

    std::string format = "text";
    std::string out;
    std::string constants_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv", "pgm"}))
        ->capture_default_str();
    app.add_option("--out", out, "write primary output to this path");
    app.add_option("--constants", constants_path, "JSON file overriding physical constants");

    int n = 1, l = 0, m = 0, k = 1;
    std::string plane = "z=0";
    double extent = 0.0;
    int resolution = 256;
    int max_n = 12;
    bool arrows = false;
    bool inject_bad_c2 = false;

    auto* state_cmd = app.add_subcommand("state", "energy breakdown of one (n, l, m) state");
    state_cmd->add_option("n", n, "principal quantum number")->required();
    state_cmd->add_option("l", l, "orbital quantum number")->required();
    state_cmd->add_option("m", m, "magnetic quantum number")->required();

    auto* table_cmd = app.add_subcommand("table2", "the 14-row published energy table");

    auto* spin_cmd = app.add_subcommand("spin2p", "explicit 2p spinning-field analysis");
    spin_cmd->add_flag("--arrows", arrows, "include the velocity arrow field (json format)");
    spin_cmd->add_option("--plane", plane, "sampling plane for arrows, axis[=offset]")
        ->capture_default_str();
    spin_cmd->add_option("--extent", extent, "half-width of the arrow grid in units of a");
    spin_cmd->add_option("--resolution", resolution, "arrow grid resolution");

    auto* section_cmd = app.add_subcommand("section", "|Psi|^2 raster over a plane");
    section_cmd->add_option("n", n, "principal quantum number")->required();
    section_cmd->add_option("l", l, "orbital quantum number")->required();
    section_cmd->add_option("m", m, "magnetic quantum number")->required();
    section_cmd->add_option("--plane", plane, "axis[=offset], e.g. z=0")->capture_default_str();
    section_cmd->add_option("--extent", extent, "half-width in units of a (default 40n/7)");
    section_cmd->add_option("--resolution", resolution, "pixels per side")->capture_default_str();

    auto* expect_cmd = app.add_subcommand("expect", "expectation value <r^k>");
    expect_cmd->add_option("n", n, "principal quantum number")->required();
    expect_cmd->add_option("l", l, "orbital quantum number")->required();
    expect_cmd->add_option("m", m, "magnetic quantum number")->required();
    expect_cmd->add_option("k", k, "power of r")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run all library invariants");
    verify_cmd->add_option("--max-n", max_n, "largest principal quantum number swept")
        ->capture_default_str();
    verify_cmd->add_flag("--inject-bad-c2", inject_bad_c2, "corrupt one normalization (fault-injection hook)")
        ->group(""); // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        // a requested constants file must load and validate regardless of
        // which subcommand consumes it
        if (!constants_path.empty()) load_constants(constants_path);
        if (state_cmd->parsed()) return cmd_state(n, l, m, format, out);
        if (table_cmd->parsed()) return cmd_table2(format, out);
        if (spin_cmd->parsed()) {
            if (!spin_cmd->count("--extent")) extent = 12.0;
            if (!spin_cmd->count("--resolution")) resolution = 24;
            return cmd_spin2p(format, out, constants_path, arrows, plane, extent, resolution);
        }
        if (section_cmd->parsed())
            return cmd_section(n, l, m, format, out, plane, extent,
                               section_cmd->count("--extent") > 0, resolution);
        if (expect_cmd->parsed()) return cmd_expect(n, l, m, k, format, out);
        if (verify_cmd->parsed()) return cmd_verify(max_n, inject_bad_c2, format, out);
    } catch (const hatom::ConsistencyError& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::domain_error& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitBadInput;
}
