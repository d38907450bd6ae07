#include "sublattice_ee/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "sublattice_ee/asymptotics.hpp"
#include "sublattice_ee/entropy.hpp"
#include "sublattice_ee/symplectic.hpp"

namespace sublattice {

namespace {

// Run fn(i) for i in [0, n) across at most max_worker_threads() workers.
// Each index writes only its own output slot, so scheduling cannot change
// results; chunks are contiguous for cache friendliness.
template <class Fn>
void parallel_for(size_t n, const Fn& fn) {
    const unsigned cap = max_worker_threads();
    const unsigned workers =
        static_cast<unsigned>(std::min<size_t>(cap, n));
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const size_t lo = static_cast<size_t>(w) * chunk;
        const size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

struct EntropyRow {
    double entropy;
    double lambda_min;
    double lambda_max;
};

EntropyRow entropy_row(const LatticeSpec& spec) {
    const SymplecticSpectrum sp = spectrum(spec);
    const EntanglementResult er = entropy_from_spectrum(sp);
    const auto [lo, hi] = std::minmax_element(sp.lambda.begin(), sp.lambda.end());
    return EntropyRow{er.entropy, *lo, *hi};
}

}  // namespace

unsigned max_worker_threads() {
    const char* env = std::getenv("SUBLATTICE_EE_THREADS");
    if (env == nullptr || *env == '\0') {
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : hw;
    }
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        throw std::invalid_argument(
            "SUBLATTICE_EE_THREADS must be a positive integer, got \"" +
            std::string(env) + "\"");
    return static_cast<unsigned>(v);
}

MutualInfoResult mutual_information_antipodal(int n_sites, double mass_eps,
                                              double beta_m) {
    if (n_sites < 4 || n_sites % 2 != 0)
        throw std::invalid_argument("antipodal split needs even n_sites >= 4, got " +
                                    std::to_string(n_sites));
    const LatticeSpec spec_a = make_spec(n_sites, n_sites, mass_eps, beta_m);
    const LatticeSpec spec_ab = make_spec(n_sites, n_sites / 2, mass_eps, beta_m);
    const double s_a = sublattice_entropy(spec_a);
    const double s_ab = sublattice_entropy(spec_ab);
    return MutualInfoResult{n_sites, s_a, s_a, s_ab, s_a + s_a - s_ab};
}

SweepResult extensivity_profile(int stride, const std::vector<double>& mass_eps_grid,
                                const std::vector<int>& n_sub_values, double beta_m) {
    if (mass_eps_grid.empty() || n_sub_values.empty())
        throw std::invalid_argument("extensivity profile needs a non-empty grid");
    for (size_t i = 1; i < mass_eps_grid.size(); ++i)
        if (!(mass_eps_grid[i] > mass_eps_grid[i - 1]))
            throw std::invalid_argument("mass_eps grid must be strictly increasing");

    SweepResult r;
    r.axis = "mass_eps";
    r.columns = {"mass_eps", "n_sub",      "entropy",
                 "entropy_density", "lambda_min", "lambda_max"};
    const size_t cols = mass_eps_grid.size();
    r.rows.resize(n_sub_values.size() * cols);
    parallel_for(r.rows.size(), [&](size_t i) {
        const int n_sub = n_sub_values[i / cols];
        const double me = mass_eps_grid[i % cols];
        const LatticeSpec spec = make_spec(n_sub * stride, stride, me, beta_m);
        const EntropyRow row = entropy_row(spec);
        r.rows[i] = {me,
                     static_cast<double>(n_sub),
                     row.entropy,
                     row.entropy / n_sub,
                     row.lambda_min,
                     row.lambda_max};
    });
    return r;
}

SweepResult parameter_sweep(SweepAxis axis, const std::vector<double>& values,
                            const SweepBase& base) {
    if (values.empty()) throw std::invalid_argument("sweep needs at least one grid point");
    const auto integral = [](double v, const char* what) {
        if (!(v > 0.0) || v != std::floor(v) || v > 1e9)
            throw std::invalid_argument(std::string(what) + " sweep values must be positive integers");
        return static_cast<int>(v);
    };
    const char* axis_name = "";
    std::vector<LatticeSpec> specs;
    specs.reserve(values.size());
    switch (axis) {
        case SweepAxis::mass_eps:
            axis_name = "mass_eps";
            for (double v : values)
                specs.push_back(make_spec(base.n_sub * base.stride, base.stride, v, base.beta_m));
            break;
        case SweepAxis::beta_m:
            axis_name = "beta_m";
            for (double v : values)
                specs.push_back(make_spec(base.n_sub * base.stride, base.stride, base.mass_eps, v));
            break;
        case SweepAxis::n_sites:
            axis_name = "n";
            for (double v : values)
                specs.push_back(make_spec(integral(v, "n"), base.stride, base.mass_eps, base.beta_m));
            break;
        case SweepAxis::n_sub:
            axis_name = "n_sub";
            for (double v : values)
                specs.push_back(make_spec(integral(v, "n_sub") * base.stride, base.stride,
                                          base.mass_eps, base.beta_m));
            break;
        case SweepAxis::stride:
            axis_name = "p";
            for (double v : values)
                specs.push_back(make_spec(base.n_sub * integral(v, "p"), integral(v, "p"),
                                          base.mass_eps, base.beta_m));
            break;
    }

    SweepResult r;
    r.axis = axis_name;
    r.columns = {axis_name, "entropy", "entropy_density", "lambda_min", "lambda_max"};
    r.rows.resize(values.size());
    parallel_for(r.rows.size(), [&](size_t i) {
        const EntropyRow row = entropy_row(specs[i]);
        r.rows[i] = {values[i], row.entropy, row.entropy / specs[i].n_sub, row.lambda_min,
                     row.lambda_max};
    });
    return r;
}

std::vector<double> log_spaced_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo))
        throw std::invalid_argument("log grid needs 0 < lo < hi");
    if (points < 2) throw std::invalid_argument("log grid needs at least 2 points");
    std::vector<double> g(points);
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (int i = 0; i < points; ++i)
        g[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                  static_cast<double>(points - 1));
    g.front() = lo;  // pin the endpoints exactly
    g.back() = hi;
    return g;
}

SweepResult figure_data(FigureId which, const FigureOptions& opt) {
    constexpr double kVac = std::numeric_limits<double>::infinity();
    switch (which) {
        case FigureId::fig4:
            return extensivity_profile(2, log_spaced_grid(1e-6, 1e2, opt.grid_points),
                                       {5, 10, 500}, kVac);
        case FigureId::fig5:
            return extensivity_profile(10, log_spaced_grid(1e-6, 1e2, opt.grid_points),
                                       {1, 2, 100}, kVac);
        case FigureId::fig6: {
            SweepResult r;
            r.axis = "mass_eps";
            r.columns = {"mass_eps", "lambda0", "entropy_density"};
            const std::vector<double> grid = log_spaced_grid(1e-6, 1e2, opt.grid_points);
            r.rows.resize(grid.size());
            parallel_for(r.rows.size(), [&](size_t i) {
                const double l0 = continuum_lambda0(grid[i]);
                r.rows[i] = {grid[i], l0, mode_entropy(l0)};
            });
            return r;
        }
        case FigureId::fig7: {
            if (opt.n_max < 4)
                throw std::invalid_argument("fig7 needs n_max >= 4");
            SweepResult r;
            r.axis = "n";
            r.columns = {"N", "I_AB", "S_A", "S_AB"};
            std::vector<int> ns;
            for (int n = 4; n <= opt.n_max; n *= 2) ns.push_back(n);
            r.rows.resize(ns.size());
            parallel_for(r.rows.size(), [&](size_t i) {
                const MutualInfoResult mi =
                    mutual_information_antipodal(ns[i], opt.mass_eps, kVac);
                r.rows[i] = {static_cast<double>(ns[i]), mi.i_ab, mi.s_a, mi.s_ab};
            });
            return r;
        }
    }
    throw std::invalid_argument("unknown figure id");
}

}  // namespace sublattice
