#include "phpos/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "phpos/grid.hpp"
#include "phpos/hertz.hpp"
#include "phpos/specfun.hpp"
#include "phpos/verify.hpp"

namespace phpos::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
    std::string family = "LP";
    int sigma = 1;
    std::vector<double> axis{0.0, 0.0, 1.0};
    std::vector<double> grid{-2.0, 2.0, 201, -2.0, 2.0, 201};
    double mask_band = 1e-3;
    std::string out;
    std::string format; // empty: csv for tables, json for verify reports
    double hbar_c = 1.0;
    double clamp = 1.5;
    bool apply_clamp = false;
    double theta_lo = 0.0;
    double theta_hi = pi;
    int samples = 721;
    double rho_over_r = 0.5;
    double t_over_r = 0.1;
    int n_max = 12;
    std::string suite = "all";
    oracle::QuadratureConfig quad;
};

double nan() { return std::numeric_limits<double>::quiet_NaN(); }

Format table_format(const Options& o, Format fallback)
{
    if (o.format.empty()) return fallback;
    if (o.format == "csv") return Format::csv;
    if (o.format == "json") return Format::json;
    throw DomainError("--format must be csv or json");
}

double clamped(const Options& o, double v)
{
    if (!o.apply_clamp || std::isnan(v)) return v;
    return std::clamp(v, -o.clamp, o.clamp);
}

// Writes the table to --out (or the output stream) and, with --out, the
// metadata to <out>.meta.json.
void emit(const Options& o, const Table& t, Format f, const ordered_json& meta, std::ostream& out)
{
    if (o.out.empty()) {
        write_table(out, t, f);
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw DomainError("cannot open output file '" + o.out + "'");
    write_table(file, t, f);
    if (!meta.is_null()) {
        std::ofstream m(o.out + ".meta.json", std::ios::binary);
        if (!m) throw DomainError("cannot open metadata file '" + o.out + ".meta.json'");
        m << meta.dump(2) << '\n';
    }
}

ordered_json base_meta(const Options& o, const char* command, double beta)
{
    ordered_json m;
    m["command"] = command;
    m["family"] = o.family;
    m["beta"] = beta;
    m["hbar_c"] = o.hbar_c;
    m["unit_scale"] = std::pow(o.hbar_c, beta / 2.0);
    m["clamp"] = o.clamp;
    m["clamp_applied"] = o.apply_clamp;
    m["delta_terms"] = ordered_json::array();
    return m;
}

int cmd_profiles(const Options& o, std::ostream& out)
{
    const auto fam = eigenfield::parse_family(o.family);
    const double beta = eigenfield::family_beta(fam);
    const double scale = std::pow(o.hbar_c, beta / 2.0);
    const auto rows = grid::profile_table(fam, o.theta_lo, o.theta_hi, o.samples);
    Table t{{"theta", "family", "P_rho", "P_psi_regular", "P_z", "delta_psi_coeff"}, {}};
    for (const auto& r : rows)
        t.rows.push_back({r.theta, std::string(eigenfield::family_name(fam)), clamped(o, scale * r.p.P_rho),
                          clamped(o, scale * r.p.P_psi_regular), clamped(o, scale * r.p.P_z),
                          scale * r.p.delta_psi_coeff});
    ordered_json meta = base_meta(o, "profiles", beta);
    const double d = scale * eigenfield::profile(fam, pi / 2).delta_psi_coeff;
    if (d != 0.0)
        meta["delta_terms"].push_back({{"component", "psi"},
                                       {"support", "theta = pi/2"},
                                       {"convention", "polar_angle"},
                                       {"coefficient_times_sigma", d},
                                       {"radial_power", -3.0}});
    emit(o, t, table_format(o, Format::csv), meta, out);
    return exit_ok;
}

grid::GridSpec grid_spec(const Options& o)
{
    if (o.grid.size() != 6) throw DomainError("--grid expects x_lo,x_hi,nx,z_lo,z_hi,nz");
    auto count = [](double v) {
        if (v != std::floor(v) || v < 2 || v > 1e7) throw DomainError("grid sample counts must be integers >= 2");
        return int(v);
    };
    grid::GridSpec g;
    g.axis = Vec3(o.axis[0], o.axis[1], o.axis[2]);
    g.x_lo = o.grid[0];
    g.x_hi = o.grid[1];
    g.nx = count(o.grid[2]);
    g.z_lo = o.grid[3];
    g.z_hi = o.grid[4];
    g.nz = count(o.grid[5]);
    g.mask_band = o.mask_band;
    g.validate();
    return g;
}

int cmd_field(const Options& o, std::ostream& out)
{
    const auto fam = grid::parse_field_family(o.family);
    checked_sigma(o.sigma);
    const grid::GridSpec g = grid_spec(o);
    const double beta = fam == grid::FieldFamily::RS ? 1.0 : 0.0;
    const double scale = std::pow(o.hbar_c, beta / 2.0);
    const bool complex_valued = fam == grid::FieldFamily::Debierre;
    const auto rows = grid::field_grid(g, fam, o.sigma);

    Table t{{"x", "z", "comp_rho", "comp_psi", "comp_z", "mask_flag"}, {}};
    if (complex_valued) t.columns.insert(t.columns.end(), {"comp_rho_im", "comp_psi_im", "comp_z_im"});
    for (const auto& r : rows) {
        std::vector<Cell> row{r.x, r.z};
        for (int j = 0; j < 3; ++j) row.push_back(clamped(o, scale * r.comp[j].real()));
        row.push_back(std::string(grid::row_mask_name(r.mask)));
        if (complex_valued)
            for (int j = 0; j < 3; ++j) row.push_back(clamped(o, scale * r.comp[j].imag()));
        t.rows.push_back(std::move(row));
    }

    ordered_json meta = base_meta(o, "field", beta);
    meta["sigma"] = o.sigma;
    const Vec3 n = g.axis.normalized();
    const Vec3 ref = eigenfield::default_ref(n);
    meta["axis"] = {n.x(), n.y(), n.z()};
    meta["x_direction"] = {ref.x(), ref.y(), ref.z()};
    if (fam == grid::FieldFamily::LP) {
        meta["delta_terms"].push_back({{"component", "psi"},
                                       {"support", "plane through q perpendicular to the axis"},
                                       {"convention", "polar_angle"},
                                       {"coefficient", o.sigma * scale * eigenfield::lp_profile(pi / 2).delta_psi_coeff},
                                       {"radial_power", -3.0}});
    } else if (fam == grid::FieldFamily::Debierre) {
        // one metadata row per grid x on the singular plane
        for (int ix = 0; ix < g.nx; ++ix) {
            const double x = ix == g.nx - 1 ? g.x_hi : g.x_lo + (g.x_hi - g.x_lo) * ix / (g.nx - 1);
            if (x == 0.0) continue;
            const auto f = eigenfield::debierre_lp(x * ref, o.sigma, n, ref);
            const CVec3 c = scale * f.singular_as(eigenfield::DeltaConvention::plane_coordinate);
            meta["delta_terms"].push_back({{"x", x},
                                           {"convention", "plane_coordinate"},
                                           {"rho", {c[0].real(), c[0].imag()}},
                                           {"psi", {c[1].real(), c[1].imag()}},
                                           {"z", {c[2].real(), c[2].imag()}}});
        }
    }
    emit(o, t, table_format(o, Format::csv), meta, out);
    return exit_ok;
}

int cmd_hertz(const Options& o, std::ostream& out, std::ostream& err)
{
    checked_sigma(o.sigma);
    if (!(o.rho_over_r >= 0.0 && o.rho_over_r < 1.0)) throw DomainError("--rho-over-r must lie in [0, 1)");
    if (o.n_max < 0 || o.n_max > 60) throw DomainError("--n-max must lie in [0, 60]");
    const double scale = std::sqrt(o.hbar_c);
    const auto h = hertz::hertz_series(o.rho_over_r, o.n_max);
    const double s = std::sqrt((1.0 - o.rho_over_r) * (1.0 + o.rho_over_r));

    Table t{{"kind", "k", "t_over_r", "real_coeff", "imag_coeff", "f_2F1", "f_elliptic", "g_2F1", "g_elliptic",
             "max_diff", "zeta_re", "zeta_im", "wave_residual", "Z_z_static"},
            {}};
    for (int k = 0; k <= o.n_max; ++k) {
        const double f = specfun::gauss_2f1(k + 0.75, 0.5, 1.0, 1.0 - s * s);
        const double g = specfun::gauss_2f1(k + 1.25, 0.5, 1.0, 1.0 - s * s);
        double fe = nan(), ge = nan();
        if (s < 1.0) std::tie(fe, ge) = hertz::elliptic_coefficient_forms(k, s);
        const double diff = std::max(std::abs(f - fe), std::abs(g - ge));
        t.rows.push_back({std::string("coefficient"), long(k), nan(), h.real_coeffs[k], h.imag_coeffs[k], f, fe, g,
                          ge, diff, nan(), nan(), nan(), nan()});
    }
    const Vec3 x(o.rho_over_r, 0.0, s);
    for (double tr : {0.0, 0.5 * o.t_over_r, o.t_over_r}) {
        const auto z = hertz::zeta_eval(x, tr, o.n_max);
        if (z.truncation_warning)
            err << "warning: truncated time series not converged at t/r = " << format_number(tr) << '\n';
        const double res = hertz::wave_residual(x, tr, o.n_max, 1e-2);
        const double zs = tr == 0.0 ? scale * hertz::hertz_t0(x, o.sigma).z() : nan();
        t.rows.push_back({std::string("zeta"), long(-1), tr, nan(), nan(), nan(), nan(), nan(), nan(), nan(),
                          scale * z.value.real(), scale * z.value.imag(), scale * res, zs});
    }
    ordered_json meta = base_meta(o, "hertz", 1.0);
    meta["sigma"] = o.sigma;
    meta["rho_over_r"] = o.rho_over_r;
    meta["point"] = {x.x(), x.y(), x.z()};
    meta["residual_step"] = 1e-2;
    emit(o, t, table_format(o, Format::csv), meta, out);
    return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    o.quad.validate();
    std::vector<oracle::OracleReport> reports;
    try {
        reports = verify::run_suite(o.suite, o.quad);
    } catch (const ConvergenceError& e) {
        err << "verification aborted: " << e.what() << '\n';
        return exit_verification_failed;
    }
    Table t{{"check_name", "max_abs_err", "max_rel_err", "tolerance", "passed", "samples", "criterion", "notes"}, {}};
    int passed = 0;
    for (const auto& r : reports) {
        t.rows.push_back({r.check_name, r.max_abs_err, r.max_rel_err, r.tolerance, r.passed, long(r.samples),
                          long(r.criterion), r.notes});
        passed += r.passed;
    }
    const Format f = table_format(o, Format::json);
    if (o.out.empty()) {
        write_table(out, t, f);
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) throw DomainError("cannot open output file '" + o.out + "'");
        write_table(file, t, f);
        for (const auto& r : reports) {
            char line[256];
            std::snprintf(line, sizeof line, "%s  %-45s rel %.3e  tol %.1e\n", r.passed ? "PASS" : "FAIL",
                          r.check_name.c_str(), r.max_rel_err, r.tolerance);
            out << line;
        }
    }
    out << passed << "/" << reports.size() << " checks passed\n";
    return verify::all_passed(reports) ? exit_ok : exit_verification_failed;
}

std::string json_string(const std::string& s) { return ordered_json(s).dump(); }

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string render(const Cell& c, Format f)
{
    return std::visit(
        [f](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (std::isfinite(v)) return format_number(v);
                if (f == Format::json) return "null";
                return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
            } else if constexpr (std::is_same_v<T, long>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return f == Format::json ? json_string(v) : csv_field(v);
            }
        },
        c);
}

} // namespace

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_table(std::ostream& os, const Table& t, Format f)
{
    if (f == Format::csv) {
        for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << t.columns[j];
        os << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << render(row[j], f);
            os << '\n';
        }
        return;
    }
    os << "[";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        os << (i ? ",\n " : "\n ") << "{";
        for (std::size_t j = 0; j < t.columns.size(); ++j)
            os << (j ? ", " : "") << json_string(t.columns[j]) << ": " << render(t.rows[i][j], f);
        os << "}";
    }
    os << (t.rows.empty() ? "]\n" : "\n]\n");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Photon position eigenfunctions: profiles, field grids, Hertz series and verification", "phpos"};
    app.set_config("--config", "", "flat key=value file; keys are the long flag names");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.require_subcommand(1, 1);
    app.fallthrough();

    app.add_option("--family", o.family, "LP, RS or Debierre")->capture_default_str();
    app.add_option("--sigma", o.sigma, "helicity, +1 or -1")->capture_default_str();
    app.add_option("--axis", o.axis, "frame axis nx,ny,nz")->delimiter(',')->expected(3);
    app.add_option("--grid", o.grid, "x_lo,x_hi,nx,z_lo,z_hi,nz (use --grid=... for negative bounds)")
        ->delimiter(',')
        ->expected(6);
    app.add_option("--mask-band", o.mask_band, "mask rows with |cos theta| below this")->capture_default_str();
    app.add_option("--out", o.out, "output file; metadata goes to <out>.meta.json");
    app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--hbar-c", o.hbar_c, "value of hbar c; outputs scale by (hbar c)^{beta/2}")
        ->capture_default_str();
    app.add_option("--clamp", o.clamp, "clamp threshold recorded as metadata")->capture_default_str();
    app.add_flag("--apply-clamp", o.apply_clamp, "clip emitted components to [-clamp, clamp]");
    app.add_option("--theta-lo", o.theta_lo)->capture_default_str();
    app.add_option("--theta-hi", o.theta_hi)->capture_default_str();
    app.add_option("--samples", o.samples, "theta samples, endpoints included")->capture_default_str();
    app.add_option("--rho-over-r", o.rho_over_r)->capture_default_str();
    app.add_option("--t-over-r", o.t_over_r, "largest t/r evaluated (also t/2 and 0)")->capture_default_str();
    app.add_option("--n-max", o.n_max, "series truncation order")->capture_default_str();
    app.add_option("--epsilon-list", o.quad.epsilon_list, "damping parameters, strictly decreasing")
        ->delimiter(',');
    app.add_option("--richardson-order", o.quad.richardson_order)->capture_default_str();
    app.add_option("--k-max", o.quad.k_max, "momentum cutoff; 0 selects 30 / min(epsilon)")->capture_default_str();
    app.add_option("--abs-tol", o.quad.abs_tol)->capture_default_str();
    app.add_option("--rel-tol", o.quad.rel_tol)->capture_default_str();

    auto* profiles = app.add_subcommand("profiles", "angular profiles P_rho, P_psi, P_z over theta");
    auto* field = app.add_subcommand("field", "field components on a plane containing the axis");
    auto* verify_cmd = app.add_subcommand("verify", "run property and oracle suites, write a JSON report");
    auto* hertz_cmd = app.add_subcommand("hertz", "Hertz time-series coefficients and zeta evaluations");
    verify_cmd->add_option("suite", o.suite, "specfun, operators, eigenfield, hertz, oracle or all")
        ->check(CLI::IsMember(verify::suite_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*profiles) return cmd_profiles(o, out);
        if (*field) return cmd_field(o, out);
        if (*hertz_cmd) return cmd_hertz(o, out, err);
        return cmd_verify(o, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_verification_failed;
    }
}

} // namespace phpos::cli
