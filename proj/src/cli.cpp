#include "sublattice_ee/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sublattice_ee/analysis.hpp"
#include "sublattice_ee/asymptotics.hpp"
#include "sublattice_ee/entropy.hpp"
#include "sublattice_ee/errors.hpp"
#include "sublattice_ee/oracle.hpp"
#include "sublattice_ee/symplectic.hpp"
#include "sublattice_ee/version.hpp"

namespace sublattice {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 17 significant digits: enough that a conforming strtod recovers the exact
// bit pattern, so output files round-trip and repeated runs are byte-equal.
std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt(int v) { return std::to_string(v); }

// JSON has no literal for infinities; emit them as strings.
std::string json_num(double v) {
    return std::isfinite(v) ? fmt(v) : '"' + fmt(v) + '"';
}

std::string json_array(const std::vector<double>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += json_num(v[i]);
    }
    return s + "]";
}

std::string json_string_array(const std::vector<std::string>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += '"' + v[i] + '"';
    }
    return s + "]";
}

// State parameters in canonical command-line form, vacuum spelled as the flag.
std::string state_args(double beta_m) {
    return std::isinf(beta_m) ? std::string("--vacuum") : "--beta-m " + fmt(beta_m);
}

std::string state_json(double beta_m) {
    return std::isinf(beta_m) ? std::string("\"vacuum\"") : fmt(beta_m);
}

struct Writer {
    const RunConfig& cfg;
    std::ostream& out;
    bool json;
    bool first_field = true;

    Writer(const RunConfig& c, std::ostream& o)
        : cfg(c), out(o), json(c.format == OutputFormat::json) {}

    // `canonical` is the parameter list echoed on the CSV comment line;
    // `params_json` the same data as a JSON object body (sans braces).
    void open(const std::string& canonical, const std::string& params_json) {
        if (json) {
            out << "{\n  \"tool\": \"sublattice-ee\",\n  \"version\": \"" << kVersion
                << "\",\n  \"command\": \"" << cfg.command << "\",\n  \"params\": {"
                << params_json << "}";
        } else {
            out << "# sublattice-ee v" << kVersion << ' ' << cfg.command;
            if (!canonical.empty()) out << ' ' << canonical;
            out << '\n';
        }
    }

    void scalar(const char* key, double v) {
        if (json) out << ",\n  \"" << key << "\": " << json_num(v);
    }

    void array(const char* key, const std::vector<double>& v) {
        if (json) out << ",\n  \"" << key << "\": " << json_array(v);
    }

    void table(const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
        if (json) {
            out << ",\n  \"columns\": " << json_string_array(columns) << ",\n  \"rows\": [";
            for (size_t i = 0; i < rows.size(); ++i) {
                out << (i ? "," : "") << "\n    " << json_array(rows[i]);
            }
            out << (rows.empty() ? "]" : "\n  ]");
        } else {
            for (size_t i = 0; i < columns.size(); ++i)
                out << (i ? "," : "") << columns[i];
            out << '\n';
            for (const auto& row : rows) {
                for (size_t i = 0; i < row.size(); ++i)
                    out << (i ? "," : "") << fmt(row[i]);
                out << '\n';
            }
        }
    }

    // Summary values that belong after the data in CSV (comment line) but are
    // ordinary fields in JSON.
    void trailer(const char* key, double v) {
        if (json)
            out << ",\n  \"" << key << "\": " << json_num(v);
        else
            out << "# " << key << '=' << fmt(v) << '\n';
    }

    void close() {
        if (json) out << "\n}\n";
    }
};

std::vector<std::vector<double>> mode_table(const std::vector<std::vector<double>>& cols) {
    std::vector<std::vector<double>> rows(cols.empty() ? 0 : cols.front().size());
    for (size_t l = 0; l < rows.size(); ++l) {
        rows[l].reserve(cols.size() + 1);
        rows[l].push_back(static_cast<double>(l));
        for (const auto& c : cols) rows[l].push_back(c[l]);
    }
    return rows;
}

std::string model_args(const RunConfig& cfg) {
    return "--n " + fmt(cfg.n_sites) + " --p " + fmt(cfg.stride) + " --mass-eps " +
           fmt(cfg.mass_eps) + ' ' + state_args(cfg.beta_m);
}

std::string model_json(const RunConfig& cfg) {
    return "\"n\": " + fmt(cfg.n_sites) + ", \"p\": " + fmt(cfg.stride) +
           ", \"mass_eps\": " + fmt(cfg.mass_eps) + ", \"beta_m\": " + state_json(cfg.beta_m);
}

void run_spectrum(const RunConfig& cfg, std::ostream& out) {
    const LatticeSpec spec = make_spec(cfg.n_sites, cfg.stride, cfg.mass_eps, cfg.beta_m);
    const SymplecticSpectrum sp = spectrum(spec);
    Writer w(cfg, out);
    w.open(model_args(cfg), model_json(cfg));
    if (w.json) {
        w.array("lambda", sp.lambda);
        w.array("lambda_phi", sp.lambda_phi);
        w.array("lambda_pi", sp.lambda_pi);
    } else {
        w.table({"l", "lambda", "lambda_phi", "lambda_pi"},
                mode_table({sp.lambda, sp.lambda_phi, sp.lambda_pi}));
    }
    w.close();
}

void run_entropy(const RunConfig& cfg, std::ostream& out) {
    const LatticeSpec spec = make_spec(cfg.n_sites, cfg.stride, cfg.mass_eps, cfg.beta_m);
    const SymplecticSpectrum sp = spectrum(spec);
    const EntanglementResult er = entropy_from_spectrum(sp);
    Writer w(cfg, out);
    w.open(model_args(cfg), model_json(cfg));
    if (w.json) {
        w.array("lambda", sp.lambda);
        w.array("per_mode", er.per_mode);
        w.scalar("entropy", er.entropy);
    } else {
        w.table({"l", "lambda", "per_mode"}, mode_table({sp.lambda, er.per_mode}));
        w.trailer("entropy", er.entropy);
    }
    w.close();
}

void run_mutual_info(const RunConfig& cfg, std::ostream& out) {
    const MutualInfoResult mi =
        mutual_information_antipodal(cfg.n_sites, cfg.mass_eps, cfg.beta_m);
    Writer w(cfg, out);
    w.open("--n " + fmt(cfg.n_sites) + " --mass-eps " + fmt(cfg.mass_eps) + ' ' +
               state_args(cfg.beta_m),
           "\"n\": " + fmt(cfg.n_sites) + ", \"mass_eps\": " + fmt(cfg.mass_eps) +
               ", \"beta_m\": " + state_json(cfg.beta_m));
    if (w.json) {
        w.scalar("s_a", mi.s_a);
        w.scalar("s_b", mi.s_b);
        w.scalar("s_ab", mi.s_ab);
        w.scalar("i_ab", mi.i_ab);
    } else {
        w.table({"n", "s_a", "s_b", "s_ab", "i_ab"},
                {{static_cast<double>(mi.n_sites), mi.s_a, mi.s_b, mi.s_ab, mi.i_ab}});
    }
    w.close();
}

void run_continuum(const RunConfig& cfg, std::ostream& out) {
    const ContinuumSpec spec{cfg.n_sub, cfg.mass_eps, cfg.beta_m};
    const double lambda0 = spec.is_vacuum()
                               ? continuum_lambda0(spec.mass_eps)
                               : thermal_continuum_lambda0(spec.mass_eps, spec.beta_m);
    const double density = mode_entropy(lambda0);
    Writer w(cfg, out);
    w.open("--n-sub " + fmt(cfg.n_sub) + " --mass-eps " + fmt(cfg.mass_eps) + ' ' +
               state_args(cfg.beta_m),
           "\"n_sub\": " + fmt(cfg.n_sub) + ", \"mass_eps\": " + fmt(cfg.mass_eps) +
               ", \"beta_m\": " + state_json(cfg.beta_m));
    if (w.json) {
        w.scalar("lambda0", lambda0);
        w.scalar("entropy_density", density);
        w.scalar("entropy", cfg.n_sub * density);
    } else {
        w.table({"lambda0", "entropy_density", "entropy"},
                {{lambda0, density, cfg.n_sub * density}});
    }
    w.close();
}

SweepAxis axis_from_name(const std::string& name) {
    if (name == "mass-eps") return SweepAxis::mass_eps;
    if (name == "beta-m") return SweepAxis::beta_m;
    if (name == "n") return SweepAxis::n_sites;
    if (name == "n-sub") return SweepAxis::n_sub;
    if (name == "p") return SweepAxis::stride;
    throw std::invalid_argument("unknown sweep axis \"" + name + "\"");
}

void run_sweep(const RunConfig& cfg, std::ostream& out) {
    SweepBase base;
    base.stride = cfg.stride;
    base.n_sub = cfg.n_sub;
    base.mass_eps = cfg.mass_eps;
    base.beta_m = cfg.beta_m;

    const std::vector<double> grid = cfg.axis_values.empty()
                                         ? log_spaced_grid(cfg.axis_min, cfg.axis_max, cfg.points)
                                         : cfg.axis_values;
    const SweepResult r = parameter_sweep(axis_from_name(cfg.axis), grid, base);

    std::string canonical = "--axis " + cfg.axis + ' ';
    std::string pjson = "\"axis\": \"" + cfg.axis + "\", ";
    if (cfg.axis_values.empty()) {
        canonical += "--min " + fmt(cfg.axis_min) + " --max " + fmt(cfg.axis_max) +
                     " --points " + fmt(cfg.points);
        pjson += "\"min\": " + fmt(cfg.axis_min) + ", \"max\": " + fmt(cfg.axis_max) +
                 ", \"points\": " + fmt(cfg.points);
    } else {
        canonical += "--values ";
        for (size_t i = 0; i < grid.size(); ++i)
            canonical += (i ? "," : "") + fmt(grid[i]);
        pjson += "\"values\": " + json_array(grid);
    }
    canonical += " --n-sub " + fmt(cfg.n_sub) + " --p " + fmt(cfg.stride) + " --mass-eps " +
                 fmt(cfg.mass_eps) + ' ' + state_args(cfg.beta_m);
    pjson += ", \"n_sub\": " + fmt(cfg.n_sub) + ", \"p\": " + fmt(cfg.stride) +
             ", \"mass_eps\": " + fmt(cfg.mass_eps) + ", \"beta_m\": " + state_json(cfg.beta_m);

    Writer w(cfg, out);
    w.open(canonical, pjson);
    w.table(r.columns, r.rows);
    w.close();
}

void run_figure(const RunConfig& cfg, std::ostream& out) {
    FigureId id;
    if (cfg.figure == "fig4")
        id = FigureId::fig4;
    else if (cfg.figure == "fig5")
        id = FigureId::fig5;
    else if (cfg.figure == "fig6")
        id = FigureId::fig6;
    else if (cfg.figure == "fig7")
        id = FigureId::fig7;
    else
        throw std::invalid_argument("unknown figure \"" + cfg.figure + "\"");

    FigureOptions opt;
    opt.grid_points = cfg.points;
    opt.mass_eps = cfg.mass_eps;
    opt.n_max = cfg.n_max;
    const SweepResult r = figure_data(id, opt);

    std::string canonical = cfg.figure + ' ';
    std::string pjson = "\"figure\": \"" + cfg.figure + "\", ";
    if (id == FigureId::fig7) {
        canonical += "--mass-eps " + fmt(cfg.mass_eps) + " --n-max " + fmt(cfg.n_max);
        pjson += "\"mass_eps\": " + fmt(cfg.mass_eps) + ", \"n_max\": " + fmt(cfg.n_max);
    } else {
        canonical += "--points " + fmt(cfg.points);
        pjson += "\"points\": " + fmt(cfg.points);
    }

    Writer w(cfg, out);
    w.open(canonical, pjson);
    w.table(r.columns, r.rows);
    w.close();
}

// Closed-form spectra and entropies against the dense route over the whole
// small-size grid. One row per configuration; worst relative error in the
// trailer. Entropy error is measured against max(1, S) so near-zero vacuum
// entropies do not inflate the relative error.
int run_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.max_n < 1) throw std::invalid_argument("--max-n must be >= 1");
    constexpr double kTol = 1e-10;
    const double masses[] = {0.1, 1.0, 10.0};
    const double betas[] = {kInf, 1.0, 0.1};

    std::vector<std::vector<double>> rows;
    double worst = 0.0;
    for (int n = 1; n <= cfg.max_n; ++n) {
        for (int p = 1; p <= n; ++p) {
            if (n % p != 0) continue;
            std::vector<int> sites;
            for (int s = 0; s < n; s += p) sites.push_back(s);
            for (double me : masses) {
                for (double bm : betas) {
                    const LatticeSpec spec = make_spec(n, p, me, bm);
                    std::vector<double> closed = spectrum(spec).lambda;
                    std::sort(closed.begin(), closed.end());
                    const std::vector<double> dense =
                        symplectic_spectrum_dense(dense_correlators(spec, sites));
                    double err_lambda = 0.0;
                    for (size_t i = 0; i < closed.size(); ++i)
                        err_lambda = std::max(
                            err_lambda, std::abs(closed[i] - dense[i]) / std::abs(dense[i]));
                    const double s_closed = entropy_from_spectrum(closed).entropy;
                    const double s_dense = entropy_from_spectrum(dense).entropy;
                    const double err_s =
                        std::abs(s_closed - s_dense) / std::max(1.0, std::abs(s_dense));
                    worst = std::max(worst, std::max(err_lambda, err_s));
                    rows.push_back({static_cast<double>(n), static_cast<double>(p), me, bm,
                                    err_lambda, err_s});
                }
            }
        }
    }

    Writer w(cfg, out);
    w.open("--max-n " + fmt(cfg.max_n), "\"max_n\": " + fmt(cfg.max_n));
    w.table({"n", "p", "mass_eps", "beta_m", "err_lambda", "err_entropy"}, rows);
    w.trailer("worst", worst);
    w.trailer("tolerance", kTol);
    w.close();

    if (!(worst <= kTol)) {
        err << "error: validation failed: worst relative error " << fmt(worst)
            << " exceeds " << fmt(kTol) << '\n';
        return 2;
    }
    return 0;
}

// Shared flags: every subcommand can choose its serialization and redirect to
// a file. `format_set` records whether the user overrode the per-command
// default (JSON for single-configuration commands, CSV for tabular ones).
void add_output_flags(CLI::App* sub, RunConfig& cfg, std::string& format_name) {
    sub->add_option("--format", format_name, "output format (csv or json)")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", cfg.output_path, "write output to this file instead of stdout");
}

void add_state_flags(CLI::App* sub, RunConfig& cfg, bool required) {
    auto* group = sub->add_option_group("state", "thermal state selection");
    group->add_option("--beta-m", cfg.beta_m, "inverse temperature in units of 1/m");
    group->add_flag_callback(
        "--vacuum", [&cfg] { cfg.beta_m = kInf; }, "ground state (zero temperature)");
    if (required)
        group->require_option(1);
    else
        group->require_option(0, 1);
}

}  // namespace

RunConfig parse_command_line(const std::vector<std::string>& args) {
    RunConfig cfg;
    std::string format_name;

    CLI::App app{"entanglement spectra and entropies of periodic sublattices of a "
                 "harmonic chain"};
    app.set_version_flag("--version", std::string("sublattice-ee v") + kVersion);
    app.require_subcommand(1);

    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "symplectic entanglement spectrum of one sublattice");
    auto* entropy_cmd =
        app.add_subcommand("entropy", "entanglement entropy and per-mode contributions");
    for (CLI::App* sub : {spectrum_cmd, entropy_cmd}) {
        sub->add_option("--n", cfg.n_sites, "total number of lattice sites")->required();
        sub->add_option("--p", cfg.stride, "sublattice stride (keep every p-th site)")
            ->required();
        sub->add_option("--mass-eps", cfg.mass_eps, "mass times lattice spacing")->required();
        add_state_flags(sub, cfg, true);
        add_output_flags(sub, cfg, format_name);
    }

    auto* mutual_cmd = app.add_subcommand(
        "mutual-info", "mutual information between the even and odd sublattices");
    mutual_cmd->add_option("--n", cfg.n_sites, "total number of lattice sites (even)")
        ->required();
    mutual_cmd->add_option("--mass-eps", cfg.mass_eps, "mass times lattice spacing")
        ->required();
    add_state_flags(mutual_cmd, cfg, true);
    add_output_flags(mutual_cmd, cfg, format_name);

    auto* continuum_cmd = app.add_subcommand(
        "continuum", "infinite-lattice limit of the p = 2 entanglement spectrum");
    auto* continuum_nsub =
        continuum_cmd->add_option("--n-sub", cfg.n_sub, "number of retained sites [1]");
    continuum_cmd->add_option("--mass-eps", cfg.mass_eps, "mass times lattice spacing")
        ->required();
    add_state_flags(continuum_cmd, cfg, true);
    add_output_flags(continuum_cmd, cfg, format_name);

    auto* sweep_cmd =
        app.add_subcommand("sweep", "entropy profile along one parameter axis");
    sweep_cmd->add_option("--axis", cfg.axis, "swept parameter")
        ->required()
        ->check(CLI::IsMember({"mass-eps", "beta-m", "n", "n-sub", "p"}));
    sweep_cmd->add_option("--min", cfg.axis_min, "lower end of the log-spaced grid");
    sweep_cmd->add_option("--max", cfg.axis_max, "upper end of the log-spaced grid");
    sweep_cmd->add_option("--points", cfg.points, "number of grid points");
    sweep_cmd->add_option("--values", cfg.axis_values, "explicit grid (overrides min/max)")
        ->delimiter(',');
    auto* sweep_nsub =
        sweep_cmd->add_option("--n-sub", cfg.n_sub, "retained sites when not swept [10]");
    auto* sweep_p = sweep_cmd->add_option("--p", cfg.stride, "stride when not swept [2]");
    auto* sweep_mass =
        sweep_cmd->add_option("--mass-eps", cfg.mass_eps, "mass when not swept [1]");
    add_state_flags(sweep_cmd, cfg, false);
    add_output_flags(sweep_cmd, cfg, format_name);

    auto* figure_cmd = app.add_subcommand("figure", "data series behind the study plots");
    figure_cmd->add_option("id", cfg.figure, "one of fig4, fig5, fig6, fig7")
        ->required()
        ->check(CLI::IsMember({"fig4", "fig5", "fig6", "fig7"}));
    figure_cmd->add_option("--points", cfg.points, "grid points per curve (fig4/fig5/fig6)");
    auto* figure_mass = figure_cmd->add_option(
        "--mass-eps", cfg.mass_eps, "mass times lattice spacing (fig7) [1e-6]");
    figure_cmd->add_option("--n-max", cfg.n_max, "largest lattice size (fig7)");
    add_output_flags(figure_cmd, cfg, format_name);

    auto* validate_cmd = app.add_subcommand(
        "validate", "cross-check closed-form spectra against the dense solver");
    validate_cmd->add_option("--max-n", cfg.max_n, "largest lattice size in the grid");
    add_output_flags(validate_cmd, cfg, format_name);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("sublattice-ee");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::CallForVersion&) {
        throw HelpRequested{app.version() + "\n"};
    } catch (const CLI::ParseError& e) {
        throw std::invalid_argument(e.what());
    }

    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();

    // Per-command defaults for fields shared between subcommands. These are
    // applied here rather than through CLI11 default_val so one subcommand's
    // default can never leak into another's.
    if (cfg.command == "continuum") {
        if (continuum_nsub->count() == 0) cfg.n_sub = 1;
    } else if (cfg.command == "sweep") {
        if (sweep_nsub->count() == 0) cfg.n_sub = 10;
        if (sweep_p->count() == 0) cfg.stride = 2;
        if (sweep_mass->count() == 0) cfg.mass_eps = 1.0;
    } else if (cfg.command == "figure") {
        if (figure_mass->count() == 0) cfg.mass_eps = 1e-6;
    }

    if (!format_name.empty()) {
        cfg.format = format_name == "json" ? OutputFormat::json : OutputFormat::csv;
        cfg.format_set = true;
    } else {
        const bool tabular =
            cfg.command == "sweep" || cfg.command == "figure" || cfg.command == "validate";
        cfg.format = tabular ? OutputFormat::csv : OutputFormat::json;
    }
    return cfg;
}

int run_config(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "spectrum")
            run_spectrum(cfg, out);
        else if (cfg.command == "entropy")
            run_entropy(cfg, out);
        else if (cfg.command == "mutual-info")
            run_mutual_info(cfg, out);
        else if (cfg.command == "continuum")
            run_continuum(cfg, out);
        else if (cfg.command == "sweep")
            run_sweep(cfg, out);
        else if (cfg.command == "figure")
            run_figure(cfg, out);
        else if (cfg.command == "validate")
            return run_validate(cfg, out, err);
        else
            throw std::invalid_argument("unknown command \"" + cfg.command + "\"");
        return 0;
    } catch (const NumericalError& e) {
        err << "error: numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid argument: " << e.what() << '\n';
        return 1;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg = parse_command_line(std::vector<std::string>(argv + 1, argv + argc));
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid argument: " << e.what() << '\n';
        return 1;
    }

    if (!cfg.output_path.empty()) {
        std::ofstream file(cfg.output_path, std::ios::binary);
        if (!file) {
            err << "error: invalid argument: cannot open output file \"" << cfg.output_path
                << "\"\n";
            return 1;
        }
        return run_config(cfg, file, err);
    }
    return run_config(cfg, out, err);
}

}  // namespace sublattice
