#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sublattice_ee/cli.hpp"

using namespace sublattice;

namespace {

struct RunOutcome {
    int code;
    std::string out;
    std::string err;
};

RunOutcome run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("sublattice-ee");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parsing fills the config with per-command defaults") {
    const RunConfig cfg = parse_command_line(
        {"entropy", "--n", "12", "--p", "2", "--mass-eps", "1.0", "--vacuum"});
    CHECK(cfg.command == "entropy");
    CHECK(cfg.n_sites == 12);
    CHECK(cfg.stride == 2);
    CHECK(cfg.mass_eps == 1.0);
    CHECK(std::isinf(cfg.beta_m));
    CHECK(cfg.format == OutputFormat::json);
    CHECK_FALSE(cfg.format_set);

    const RunConfig th = parse_command_line(
        {"spectrum", "--n", "6", "--p", "3", "--mass-eps", "0.5", "--beta-m", "2.5"});
    CHECK(th.beta_m == 2.5);

    const RunConfig sw = parse_command_line({"sweep", "--axis", "mass-eps"});
    CHECK(sw.format == OutputFormat::csv);
    CHECK(sw.n_sub == 10);
    CHECK(sw.stride == 2);
    CHECK(sw.mass_eps == 1.0);
    CHECK(std::isinf(sw.beta_m));

    const RunConfig swj =
        parse_command_line({"sweep", "--axis", "mass-eps", "--format", "json"});
    CHECK(swj.format == OutputFormat::json);
    CHECK(swj.format_set);

    const RunConfig cont = parse_command_line({"continuum", "--mass-eps", "2", "--vacuum"});
    CHECK(cont.n_sub == 1);

    const RunConfig fig = parse_command_line({"figure", "fig7"});
    CHECK(fig.figure == "fig7");
    CHECK(fig.mass_eps == 1e-6);
    CHECK(fig.n_max == 1024);

    const RunConfig val = parse_command_line({"validate"});
    CHECK(val.max_n == 24);
}

TEST_CASE("bad usage throws before any work is done") {
    CHECK_THROWS_AS(parse_command_line({"entropy", "--n", "12"}), std::invalid_argument);
    CHECK_THROWS_AS(parse_command_line({"nonsense"}), std::invalid_argument);
    CHECK_THROWS_AS(parse_command_line({}), std::invalid_argument);
    CHECK_THROWS_AS(parse_command_line({"figure", "fig9"}), std::invalid_argument);
    CHECK_THROWS_AS(parse_command_line({"sweep", "--axis", "banana"}),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_command_line({"entropy", "--n", "4", "--p", "2", "--mass-eps",
                                        "1", "--vacuum", "--beta-m", "2"}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        parse_command_line({"entropy", "--n", "4", "--p", "2", "--mass-eps", "1"}),
        std::invalid_argument);
    CHECK_THROWS_AS(parse_command_line({"--help"}), HelpRequested);
}

TEST_CASE("help and version exit cleanly") {
    const RunOutcome h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("Subcommands:") != std::string::npos);
    const RunOutcome v = run({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("entropy json payload carries the advertised fields") {
    const RunOutcome r =
        run({"entropy", "--n", "12", "--p", "2", "--mass-eps", "1.0", "--vacuum"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("\"command\": \"entropy\"") != std::string::npos);
    CHECK(r.out.find("\"beta_m\": \"vacuum\"") != std::string::npos);
    CHECK(r.out.find("\"per_mode\": [") != std::string::npos);
    CHECK(r.out.find("\"entropy\": ") != std::string::npos);

    const size_t open = r.out.find("\"lambda\": [");
    REQUIRE(open != std::string::npos);
    const size_t close = r.out.find(']', open);
    REQUIRE(close != std::string::npos);
    const std::string values = r.out.substr(open, close - open);
    CHECK(std::count(values.begin(), values.end(), ',') == 5);  // six eigenvalues
}

TEST_CASE("entropy csv schema") {
    const RunOutcome r = run({"entropy", "--n", "12", "--p", "2", "--mass-eps", "1.0",
                              "--vacuum", "--format", "csv"});
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "# sublattice-ee v0.1.0 entropy --n 12 --p 2 --mass-eps 1 --vacuum");
    REQUIRE(std::getline(is, line));
    CHECK(line == "l,lambda,per_mode");
    int rows = 0;
    std::string last;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        last = line;
        if (line[0] != '#') ++rows;
    }
    CHECK(rows == 6);
    CHECK(last.rfind("# entropy=", 0) == 0);
}

TEST_CASE("figure fig7 emits the pinned header") {
    const RunOutcome r = run({"figure", "fig7", "--n-max", "8"});
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line ==
          "# sublattice-ee v0.1.0 figure fig7 --mass-eps 9.9999999999999995e-07 "
          "--n-max 8");
    REQUIRE(std::getline(is, line));
    CHECK(line == "N,I_AB,S_A,S_AB");
    int rows = 0;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2);  // N = 4 and N = 8
}

TEST_CASE("mutual info and continuum payloads") {
    const RunOutcome mi = run({"mutual-info", "--n", "8", "--mass-eps", "1", "--beta-m", "2"});
    CHECK(mi.code == 0);
    CHECK(mi.out.find("\"beta_m\": 2") != std::string::npos);
    CHECK(mi.out.find("\"s_ab\": ") != std::string::npos);
    CHECK(mi.out.find("\"i_ab\": ") != std::string::npos);

    const RunOutcome ct = run({"continuum", "--n-sub", "3", "--mass-eps", "1", "--vacuum"});
    CHECK(ct.code == 0);
    CHECK(ct.out.find("\"lambda0\": 0.51915686050484744") != std::string::npos);
    CHECK(ct.out.find("\"entropy_density\": ") != std::string::npos);
}

TEST_CASE("reruns are byte identical, also across thread counts") {
    const std::vector<std::string> args = {"sweep",    "--axis", "mass-eps", "--values",
                                           "0.5,1,2",  "--n-sub", "4"};
    const RunOutcome a = run(args);
    const RunOutcome b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    setenv("SUBLATTICE_EE_THREADS", "1", 1);
    const RunOutcome c = run(args);
    setenv("SUBLATTICE_EE_THREADS", "4", 1);
    const RunOutcome d = run(args);
    unsetenv("SUBLATTICE_EE_THREADS");
    CHECK(c.out == d.out);
    CHECK(a.out == c.out);
}

TEST_CASE("exit codes and single-line diagnostics") {
    const RunOutcome bad = run({"entropy", "--n", "12", "--p", "5", "--mass-eps", "1",
                                "--vacuum"});
    CHECK(bad.code == 1);
    CHECK(bad.out.empty());
    CHECK(bad.err.rfind("error: invalid argument:", 0) == 0);
    CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);

    // mass_eps so small that (m eps)^2 underflows to zero: the zero mode
    // degenerates and the entropy genuinely diverges
    const RunOutcome div = run({"entropy", "--n", "4", "--p", "2", "--mass-eps", "1e-200",
                                "--vacuum"});
    CHECK(div.code == 2);
    CHECK(div.err.rfind("error: numerical failure:", 0) == 0);
    CHECK(std::count(div.err.begin(), div.err.end(), '\n') == 1);

    const RunOutcome usage = run({"entropy", "--n"});
    CHECK(usage.code == 1);
    CHECK(usage.err.rfind("error: invalid argument:", 0) == 0);
}

TEST_CASE("validate passes on the small grid") {
    const RunOutcome r = run({"validate", "--max-n", "6"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    std::istringstream is(r.out);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "# sublattice-ee v0.1.0 validate --max-n 6");
    REQUIRE(std::getline(is, line));
    CHECK(line == "n,p,mass_eps,beta_m,err_lambda,err_entropy");
    CHECK(r.out.find("# worst=") != std::string::npos);
    CHECK(r.out.find("# tolerance=1e-10") != std::string::npos);
}

TEST_CASE("output file redirection") {
    const std::string path = "cli_test_output.json";
    const RunOutcome filed =
        run({"continuum", "--mass-eps", "1", "--vacuum", "--output", path});
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    const RunOutcome direct = run({"continuum", "--mass-eps", "1", "--vacuum"});
    CHECK(buf.str() == direct.out);
    std::remove(path.c_str());

    const RunOutcome bad = run({"continuum", "--mass-eps", "1", "--vacuum", "--output",
                                "no_such_dir/x.json"});
    CHECK(bad.code == 1);
    CHECK(bad.err.rfind("error: invalid argument: cannot open", 0) == 0);
}
