#pragma once

// Command-line front end. Subcommands: spectrum, entropy, sweep, mutual-info,
// continuum, figure, validate. Output is CSV (first line
// "# sublattice-ee v<version> <command> <canonicalized-params>", second line
// the column header, then data rows) or JSON mirroring the same fields.
// Reals are printed with 17 significant digits so they round-trip exactly;
// identical configurations produce byte-identical output.
//
// Exit codes: 0 success, 1 invalid arguments, 2 numerical failure. Errors are
// a single machine-parsable line on stderr: "error: <kind>: <detail>".

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace sublattice {

enum class OutputFormat { csv, json };

// Thrown by parse_command_line when --help/--version is requested; the
// caller prints `text` to stdout and exits 0.
struct HelpRequested {
    std::string text;
};

struct RunConfig {
    std::string command;

    // model parameters
    int n_sites = 0;
    int stride = 1;
    int n_sub = 0;  // continuum command
    double mass_eps = 1.0;
    double beta_m = std::numeric_limits<double>::infinity();

    // sweep
    std::string axis;
    double axis_min = 1e-6;
    double axis_max = 1e2;
    int points = 60;
    std::vector<double> axis_values;  // explicit grid, wins over min/max

    // figure
    std::string figure;
    int n_max = 1024;

    // validate
    int max_n = 24;

    OutputFormat format = OutputFormat::csv;
    bool format_set = false;  // per-command default applies when false
    std::string output_path;  // empty = stdout
};

// Parse argv (throws std::invalid_argument on bad usage; never exits).
RunConfig parse_command_line(const std::vector<std::string>& args);

// Execute a parsed configuration, writing the payload to `out`.
// Returns the process exit code and reports failures on `err`.
int run_config(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Full entry point used by main(): parse, dispatch, map exceptions to exit
// codes. Output goes to `out` unless the config redirects it to a file.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sublattice
