// Acceptance gate for the release. Twelve numbered criteria, one printed
// line each, every tolerance pinned here in code. Exits nonzero if any
// criterion fails. Unlike the unit suites this binary has no framework:
// the output is meant to be read top to bottom.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "sublattice_ee/analysis.hpp"
#include "sublattice_ee/asymptotics.hpp"
#include "sublattice_ee/core_model.hpp"
#include "sublattice_ee/entropy.hpp"
#include "sublattice_ee/oracle.hpp"
#include "sublattice_ee/symplectic.hpp"

using namespace sublattice;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int failures = 0;

void report(const char* id, bool ok, const std::string& detail) {
    std::printf("%-5s %s (%s)\n", id, ok ? "PASS" : "FAIL", detail.c_str());
    if (!ok) ++failures;
}

void guarded(const char* id, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(id, false, std::string("unexpected exception: ") + e.what());
    }
}

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::vector<int> divisors(int n) {
    std::vector<int> d;
    for (int k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

// Closed-form spectrum and entropy against the dense oracle for one spec.
// Returns {worst relative lambda error, entropy error / max(1, |S|)}.
std::pair<double, double> oracle_errors(const LatticeSpec& spec) {
    const SymplecticSpectrum closed = spectrum(spec);
    std::vector<double> lc = closed.lambda;
    std::sort(lc.begin(), lc.end());

    std::vector<int> sites(spec.n_sub);
    for (int i = 0; i < spec.n_sub; ++i) sites[i] = i * spec.stride;
    const std::vector<double> ld = symplectic_spectrum_dense(dense_correlators(spec, sites));

    double dl = 0.0;
    for (size_t i = 0; i < lc.size(); ++i)
        dl = std::max(dl, std::abs(lc[i] - ld[i]) / ld[i]);

    const double sc = entropy_from_spectrum(closed).entropy;
    const double sd = entropy_from_spectrum(std::span<const double>(ld)).entropy;
    const double ds = std::abs(sc - sd) / std::max(1.0, std::abs(sc));
    return {dl, ds};
}

void ac1_oracle_equivalence() {
    const double masses[] = {0.1, 1.0, 10.0};
    const double betas[] = {kInf, 1.0, 0.1};
    const double tol = 1e-10;
    double worst_l = 0.0, worst_s = 0.0;
    int cases = 0;
    for (int n = 1; n <= 24; ++n)
        for (int p : divisors(n))
            for (double me : masses)
                for (double bm : betas) {
                    const auto [dl, ds] = oracle_errors(make_spec(n, p, me, bm));
                    worst_l = std::max(worst_l, dl);
                    worst_s = std::max(worst_s, ds);
                    ++cases;
                }
    const bool ok = worst_l <= tol && worst_s <= tol;
    report("AC-1", ok,
           "closed form vs dense oracle, " + std::to_string(cases) +
               " configs: worst dlambda " + num(worst_l) + ", worst dS " + num(worst_s) +
               ", tol 1e-10");
}

void ac2_uv_density() {
    const double d = uv_entropy_density_p2();
    const bool ok = std::abs(d - 0.36) <= 0.005;
    report("AC-2", ok, "p=2 massless entropy density " + num(d) + " vs 0.36 +- 0.005");
}

void ac3_extensivity() {
    const double d10 = sublattice_entropy(make_vacuum_spec(20, 2, 2.0)) / 10.0;
    const double d500 = sublattice_entropy(make_vacuum_spec(1000, 2, 2.0)) / 500.0;
    const double rel = std::abs(d500 - d10) / d500;
    report("AC-3", rel < 0.01,
           "p=2 entropy density drift N_A 10 -> 500: " + num(rel) + ", tol 0.01");
}

void ac4_zero_mode() {
    const double lam = spectrum(make_vacuum_spec(2, 2, 1e-4)).lambda[0];
    const double ref =
        reference_expansion(ReferenceFormula::zero_mode_lambda, {.mass_eps = 1e-4});
    const double rel = std::abs(lam - ref) / ref;
    report("AC-4", rel < 1e-3,
           "N=2 zero-mode lambda " + num(lam) + " vs 1/(2 sqrt(2 m eps)) " + num(ref) +
               ", rel " + num(rel) + ", tol 1e-3");
}

void ac5_small_mass_constant() {
    const double s = sublattice_entropy(make_vacuum_spec(2, 2, 1e-6));
    const double ref = reference_expansion(ReferenceFormula::small_mass_vacuum_entropy_n2,
                                           {.mass_eps = 1e-6});
    const double diff = std::abs(s - ref);
    report("AC-5", diff < 0.01,
           "N=2 small-mass entropy " + num(s) + " vs " + num(ref) + ", |diff| " +
               num(diff) + ", tol 0.01");
}

void ac6_low_temperature() {
    const double st = sublattice_entropy(make_spec(2, 2, 0.01, 20.0));
    const double s0 = sublattice_entropy(make_vacuum_spec(2, 2, 0.01));
    const double ratio = (st - s0) / std::exp(-20.0);
    const bool ok = ratio >= 0.85 && ratio <= 1.15;
    report("AC-6", ok,
           "(S(beta_m=20) - S(vac)) / e^-20 = " + num(ratio) + ", window [0.85, 1.15]");
}

void ac7_continuum_lambda() {
    double worst = 0.0;
    for (double me : {0.1, 1.0, 10.0}) {
        const double finite = spectrum(make_vacuum_spec(2000, 2000, me)).lambda[0];
        worst = std::max(worst, std::abs(continuum_lambda0(me) - finite));
    }
    report("AC-7", worst < 1e-3,
           "elliptic lambda0 vs p=2000 vacuum, worst |diff| " + num(worst) +
               ", tol 1e-3");
}

void ac8_high_temperature() {
    const double s = sublattice_entropy(make_spec(20, 2, 100.0, 0.01));
    const double ref = reference_expansion(ReferenceFormula::high_temperature_entropy_p2,
                                           {.mass_eps = 100.0, .beta_m = 0.01, .n_sub = 10});
    const double rel = std::abs(s - ref) / s;
    report("AC-8", rel < 0.01,
           "S " + num(s) + " vs N_A(1 + log(T/m)) " + num(ref) + ", rel " + num(rel) +
               ", tol 0.01");
}

void ac9_mutual_information_decay() {
    std::vector<double> series;
    for (int n = 4; n <= 1024; n *= 2)
        series.push_back(mutual_information_antipodal(n, 1e-6, kInf).i_ab);
    bool positive = true, decreasing = true;
    for (size_t i = 0; i < series.size(); ++i) {
        positive = positive && series[i] > 0.0;
        if (i > 0) decreasing = decreasing && series[i] < series[i - 1];
    }
    const double far = mutual_information_antipodal(1000000, 1e-6, kInf).i_ab;
    const bool tail_ok = far < series.back() / 2.0;
    report("AC-9", positive && decreasing && tail_ok,
           "I_AB > 0 and decreasing over N in {4..1024}: " +
               std::string(positive && decreasing ? "yes" : "no") + "; I(1e6) " +
               num(far) + " < I(1024)/2 " + num(series.back() / 2.0) +
               (tail_ok ? "" : " VIOLATED"));
}

void ac10_first_law() {
    const LatticeSpec spec = make_spec(12, 2, 1.0, 2.0);
    double gap[3];
    const double deltas[3] = {1e-3, 5e-4, 2.5e-4};
    for (int i = 0; i < 3; ++i) {
        const FirstLawCheck fl = first_law_check(spec, deltas[i]);
        gap[i] = std::abs(fl.lhs - fl.rhs);
    }
    const double slope1 = std::log2(gap[0] / gap[1]);
    const double slope2 = std::log2(gap[1] / gap[2]);
    const bool ok = slope1 >= 1.8 && slope1 <= 2.2 && slope2 >= 1.8 && slope2 <= 2.2;
    report("AC-10", ok,
           "first-law residual Richardson slopes " + num(slope1) + ", " + num(slope2) +
               ", window [1.8, 2.2]");
}

void ac11_algebraic_identities() {
    // (a) xi-route vs lambda-route and (b) beta <-> lambda round trip, on a
    // handful of engine spectra spanning deep-vacuum to hot-thermal regimes.
    const LatticeSpec specs[] = {
        make_vacuum_spec(12, 2, 1.0),   make_spec(12, 3, 1.0, 0.8),
        make_spec(16, 4, 0.1, 1.0),     make_spec(20, 5, 10.0, 0.1),
        make_vacuum_spec(18, 6, 1e-4),  make_spec(8, 1, 0.7, 2.0),
    };
    double worst_xi = 0.0, worst_rt = 0.0;
    for (const LatticeSpec& spec : specs) {
        const SymplecticSpectrum sp = spectrum(spec);
        const EntanglementResult a = entropy_from_spectrum(sp);
        const EntanglementResult b = entropy_xi_form(sp);
        for (size_t l = 0; l < sp.lambda.size(); ++l) {
            worst_xi = std::max(worst_xi, std::abs(a.per_mode[l] - b.per_mode[l]) /
                                              (1.0 + a.per_mode[l]));
            const double back = lambda_from_modular(modular_energy(sp.lambda[l]));
            worst_rt = std::max(worst_rt, std::abs(back - sp.lambda[l]) / sp.lambda[l]);
        }
    }
    const bool ok_ab = worst_xi <= 1e-12 && worst_rt <= 1e-12;

    // (c) physical bound lambda >= 1/2 on a seeded random parameter grid.
    std::mt19937 gen(12345);
    std::uniform_int_distribution<int> pick_n(2, 32);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst_bound = kInf;
    for (int t = 0; t < 200; ++t) {
        const int n = pick_n(gen);
        const std::vector<int> divs = divisors(n);
        const int p = divs[std::uniform_int_distribution<size_t>(0, divs.size() - 1)(gen)];
        const double me = std::exp(std::log(1e-6) + unit(gen) * std::log(1e8));
        const double bm =
            unit(gen) < 0.5 ? kInf : std::exp(std::log(1e-2) + unit(gen) * std::log(1e4));
        for (double l : spectrum(make_spec(n, p, me, bm)).lambda)
            worst_bound = std::min(worst_bound, l);
    }
    const bool ok_c = worst_bound >= 0.5 - 1e-12;

    // (d) p=1 vacuum is pure, (e) p=1 thermal is the free-boson Gibbs entropy.
    const double s_pure = sublattice_entropy(make_vacuum_spec(16, 1, 0.7));
    const bool ok_d = s_pure <= 1e-12;

    const LatticeSpec whole = make_spec(16, 1, 0.7, 2.0);
    const double s_whole = sublattice_entropy(whole);
    const std::vector<double> occ = thermal_occupations(whole, dispersion(whole));
    double gibbs = 0.0;
    for (double n_k : occ)
        if (n_k > 0.0) gibbs += (1.0 + n_k) * std::log1p(n_k) - n_k * std::log(n_k);
    const double d_gibbs = std::abs(s_whole - gibbs) / (1.0 + s_whole);
    const bool ok_e = d_gibbs <= 1e-10;

    report("AC-11", ok_ab && ok_c && ok_d && ok_e,
           "xi vs lambda " + num(worst_xi) + " (tol 1e-12); round trip " + num(worst_rt) +
               " (tol 1e-12); min lambda - 1/2 = " + num(worst_bound - 0.5) +
               " (>= -1e-12); p=1 vacuum S " + num(s_pure) + " (tol 1e-12); Gibbs diff " +
               num(d_gibbs) + " (tol 1e-10)");
}

void ac12_spectrum_normalization() {
    const SymplecticSpectrum sp = spectrum(make_spec(4, 2, 1.0, 2.0));
    const EntanglementSpectrum es = entanglement_spectrum(sp, 1e-12);
    double worst_norm = 0.0;
    double shannon = 0.0;
    for (const std::vector<double>& ladder : es.ladders) {
        double total = 0.0, h = 0.0;
        for (double pn : ladder) {
            total += pn;
            if (pn > 0.0) h -= pn * std::log(pn);
        }
        worst_norm = std::max(worst_norm, std::abs(total - 1.0));
        shannon += h;
    }
    const double s = entropy_from_spectrum(sp).entropy;
    const double ds = std::abs(shannon - s);
    const bool ok = worst_norm <= 1.5e-12 && ds <= 1e-9;
    report("AC-12", ok,
           "ladder normalization |sum p - 1| " + num(worst_norm) +
               " (tol 1.5e-12); Shannon vs S_A |diff| " + num(ds) + " (tol 1e-9)");
}

}  // namespace

int main() {
    guarded("AC-1", ac1_oracle_equivalence);
    guarded("AC-2", ac2_uv_density);
    guarded("AC-3", ac3_extensivity);
    guarded("AC-4", ac4_zero_mode);
    guarded("AC-5", ac5_small_mass_constant);
    guarded("AC-6", ac6_low_temperature);
    guarded("AC-7", ac7_continuum_lambda);
    guarded("AC-8", ac8_high_temperature);
    guarded("AC-9", ac9_mutual_information_decay);
    guarded("AC-10", ac10_first_law);
    guarded("AC-11", ac11_algebraic_identities);
    guarded("AC-12", ac12_spectrum_normalization);
    if (failures == 0)
        std::printf("acceptance: all 12 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
