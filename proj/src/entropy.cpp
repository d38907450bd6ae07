#include "sublattice_ee/entropy.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "sublattice_ee/numerics.hpp"

namespace sublattice {

namespace {

constexpr double kHalfSlack = 1e-12;   // |lambda - 1/2| below this is a pure mode
constexpr double kUnphysical = 1e-9;   // lambda below 1/2 - this is an error
constexpr double kInf = std::numeric_limits<double>::infinity();

void reject_unphysical(double lambda) {
    if (!(lambda >= 0.5 - kUnphysical)) {  // catches NaN too
        char msg[96];
        std::snprintf(msg, sizeof msg, "unphysical spectrum: lambda = %.17g < 1/2", lambda);
        throw NumericalError(msg);
    }
}

}  // namespace

double mode_entropy(double lambda) {
    reject_unphysical(lambda);
    if (std::isinf(lambda))
        throw NumericalError("divergent entanglement entropy: lambda is infinite");
    const double d = lambda - 0.5;
    if (d <= kHalfSlack) return 0.0;
    return std::log1p(d) + d * std::log1p(1.0 / d);
}

double modular_energy(double lambda) {
    reject_unphysical(lambda);
    const double d = lambda - 0.5;
    if (d <= kHalfSlack) return kInf;
    return std::log1p(1.0 / d);
}

double lambda_from_modular(double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("modular energy must be positive");
    if (std::isinf(beta)) return 0.5;
    return 0.5 + bose_from_exponent(beta);
}

std::vector<double> modular_energies(std::span<const double> lambda) {
    std::vector<double> beta(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) beta[i] = modular_energy(lambda[i]);
    return beta;
}

EntanglementResult entropy_from_spectrum(std::span<const double> lambda) {
    EntanglementResult r;
    r.per_mode.resize(lambda.size());
    r.mode_energies.resize(lambda.size());
    r.xi.resize(lambda.size());
    KahanSum total;
    for (size_t i = 0; i < lambda.size(); ++i) {
        const double l = lambda[i];
        r.per_mode[i] = mode_entropy(l);
        const double d = l - 0.5;
        if (d <= kHalfSlack) {
            r.mode_energies[i] = kInf;
            r.xi[i] = 0.0;
        } else {
            r.mode_energies[i] = std::log1p(1.0 / d);
            r.xi[i] = d / (l + 0.5);
        }
        total.add(r.per_mode[i]);
    }
    r.entropy = total.value();
    return r;
}

EntanglementResult entropy_from_spectrum(const SymplecticSpectrum& s) {
    return entropy_from_spectrum(std::span<const double>(s.lambda));
}

EntanglementResult entropy_xi_form(std::span<const double> lambda) {
    EntanglementResult r;
    r.per_mode.resize(lambda.size());
    r.mode_energies.resize(lambda.size());
    r.xi.resize(lambda.size());
    KahanSum total;
    for (size_t i = 0; i < lambda.size(); ++i) {
        const double l = lambda[i];
        reject_unphysical(l);
        if (std::isinf(l))
            throw NumericalError("divergent entanglement entropy: xi reached 1");
        const double d = l - 0.5;
        if (d <= kHalfSlack) {
            r.per_mode[i] = 0.0;
            r.mode_energies[i] = kInf;
            r.xi[i] = 0.0;
            continue;
        }
        // one_minus_xi is the exact algebraic complement of xi, not a
        // subtraction: at large lambda the subtraction would wipe it out.
        // log(xi) goes through log1p of that complement for the same reason;
        // forming xi first and taking its log costs lambda*eps of absolute
        // accuracy once xi rounds against 1.
        const double xi = d / (l + 0.5);
        const double one_minus_xi = 1.0 / (l + 0.5);
        if (!(xi < 1.0))
            throw NumericalError("divergent entanglement entropy: xi reached 1");
        const double log_xi = std::log1p(-one_minus_xi);
        r.xi[i] = xi;
        r.mode_energies[i] = -log_xi;
        r.per_mode[i] = -std::log(one_minus_xi) - (xi / one_minus_xi) * log_xi;
        total.add(r.per_mode[i]);
    }
    r.entropy = total.value();
    return r;
}

EntanglementResult entropy_xi_form(const SymplecticSpectrum& s) {
    return entropy_xi_form(std::span<const double>(s.lambda));
}

EntanglementSpectrum entanglement_spectrum(const SymplecticSpectrum& s, double tail) {
    if (!(tail > 0.0 && tail < 1.0))
        throw std::invalid_argument("tail bound must lie in (0, 1)");
    EntanglementSpectrum es;
    es.tail = tail;
    es.ladders.reserve(s.lambda.size());
    const double log_inv_tail = -std::log(tail);
    for (size_t l = 0; l < s.lambda.size(); ++l) {
        const double beta = modular_energy(s.lambda[l]);
        if (std::isinf(beta)) {
            es.ladders.push_back({1.0});  // pure mode: the ladder is trivial
            continue;
        }
        // Residual mass above n is e^{-beta (n+1)}; solve for the smallest n.
        const double levels = log_inv_tail / beta;  // need n_max + 1 >= levels
        if (levels > 1e8) {
            char msg[128];
            std::snprintf(msg, sizeof msg,
                          "spectrum too flat: mode %zu needs %.3g ladder levels", l, levels);
            throw NumericalError(msg);
        }
        const long n_max = std::max(0L, static_cast<long>(std::ceil(levels)) - 1);
        const double q = std::exp(-beta);
        std::vector<double> ladder(static_cast<size_t>(n_max) + 1);
        double pn = -std::expm1(-beta);  // p_0 = 1 - e^{-beta}, no cancellation
        for (long n = 0; n <= n_max; ++n) {
            ladder[static_cast<size_t>(n)] = pn;
            pn *= q;
        }
        es.ladders.push_back(std::move(ladder));
    }
    return es;
}

FirstLawCheck first_law_check(const LatticeSpec& spec, double delta_beta_m) {
    if (spec.is_vacuum())
        throw std::invalid_argument("first law check needs a thermal state");
    if (!(spec.beta_m + delta_beta_m > 0.0))
        throw std::invalid_argument("perturbed beta_m must stay positive");
    const SymplecticSpectrum base = spectrum_thermal(spec);
    const LatticeSpec moved = make_spec(spec.n_sites, spec.stride, spec.mass_eps,
                                        spec.beta_m + delta_beta_m);
    const SymplecticSpectrum bumped = spectrum_thermal(moved);

    const EntanglementResult s0 = entropy_from_spectrum(base);
    const EntanglementResult s1 = entropy_from_spectrum(bumped);
    KahanSum rhs;
    for (size_t l = 0; l < base.lambda.size(); ++l) {
        const double dl = bumped.lambda[l] - base.lambda[l];
        if (std::isinf(s0.mode_energies[l])) {
            if (dl != 0.0) rhs.add(kInf);  // cannot happen for thermal spectra
            continue;
        }
        rhs.add(s0.mode_energies[l] * dl);
    }
    return FirstLawCheck{s1.entropy - s0.entropy, rhs.value()};
}

double sublattice_entropy(const LatticeSpec& spec) {
    return entropy_from_spectrum(spectrum(spec)).entropy;
}

}  // namespace sublattice
