#include "sublattice_ee/symplectic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sublattice_ee/numerics.hpp"

namespace sublattice {

namespace {

// Shared driver: weight(k) supplies 2<N_k>+1 for ring mode k.
template <class WeightFn>
SymplecticSpectrum spectrum_from_weights(const LatticeSpec& spec, const WeightFn& weight) {
    const int na = spec.n_sub;
    const int p = spec.stride;
    SymplecticSpectrum out{spec, {}, {}, {}};
    out.lambda.resize(na);
    out.lambda_phi.resize(na);
    out.lambda_pi.resize(na);
    for (int l = 0; l < na; ++l) {
        KahanSum a, b;
        for (int j = 0; j < p; ++j) {
            // Modes congruent to +l and -l mod N_A; both brackets pair the
            // occupation with the frequency of the same mode.
            const long long k1 = l + static_cast<long long>(j) * na;
            const long long k2 = static_cast<long long>(j + 1) * na - l;
            const double u1 = mode_frequency(spec, k1);
            const double u2 = mode_frequency(spec, k2);
            const double w1 = weight(k1 % spec.n_sites, u1);
            const double w2 = weight(k2 % spec.n_sites, u2);
            // One rounded add per mirror pair keeps lambda_l == lambda_{N_A-l}
            // bitwise (the pair reverses, but fl(x+y) is commutative).
            a.add(w1 / u1 + w2 / u2);
            b.add(u1 * w1 + u2 * w2);
        }
        const double lp = a.value() / (4.0 * p);
        const double lq = b.value() / (4.0 * p);
        out.lambda_phi[l] = lp;
        out.lambda_pi[l] = lq;
        out.lambda[l] = std::sqrt(lp * lq);
    }
    return out;
}

}  // namespace

SymplecticSpectrum spectrum_general(const LatticeSpec& spec,
                                    std::span<const double> occupations) {
    if (static_cast<int>(occupations.size()) != spec.n_sites)
        throw std::invalid_argument("need one occupation per ring mode: got " +
                                    std::to_string(occupations.size()) + " for N = " +
                                    std::to_string(spec.n_sites));
    for (double n : occupations)
        if (!(n >= 0.0) || std::isinf(n))
            throw std::invalid_argument("occupations must be finite and >= 0");
    return spectrum_from_weights(
        spec, [&](long long k, double) { return 2.0 * occupations[static_cast<size_t>(k)] + 1.0; });
}

SymplecticSpectrum spectrum_thermal(const LatticeSpec& spec) {
    if (spec.is_vacuum())
        throw std::invalid_argument("spectrum_thermal needs finite beta_m; use spectrum_vacuum");
    const double scale = spec.beta_m / spec.mass_eps;
    return spectrum_from_weights(
        spec, [scale](long long, double u) { return coth_half(scale * u); });
}

SymplecticSpectrum spectrum_vacuum(const LatticeSpec& spec) {
    const int na = spec.n_sub;
    const int p = spec.stride;
    SymplecticSpectrum out{spec, {}, {}, {}};
    out.lambda.resize(na);
    out.lambda_phi.resize(na);
    out.lambda_pi.resize(na);
    for (int l = 0; l < na; ++l) {
        // Mirror terms equal the direct ones in the vacuum, so one congruence
        // class suffices and the prefactor is 1/(2p).
        KahanSum inv, dir;
        for (int j = 0; j < p; ++j) {
            const double u = mode_frequency(spec, l + static_cast<long long>(j) * na);
            inv.add(1.0 / u);
            dir.add(u);
        }
        const double lp = inv.value() / (2.0 * p);
        const double lq = dir.value() / (2.0 * p);
        out.lambda_phi[l] = lp;
        out.lambda_pi[l] = lq;
        out.lambda[l] = std::sqrt(lp * lq);
    }
    return out;
}

SymplecticSpectrum spectrum(const LatticeSpec& spec) {
    return spec.is_vacuum() ? spectrum_vacuum(spec) : spectrum_thermal(spec);
}

SymplecticSpectrum spectrum_two_oscillators(double mass_eps, double beta_m) {
    const LatticeSpec spec = make_spec(2, 2, mass_eps, beta_m);
    const double u0 = mass_eps;
    const double u1 = std::sqrt(mass_eps * mass_eps + 4.0);
    // coth_half saturates to exactly 1 at +inf, which is the vacuum weight.
    const double c0 = spec.is_vacuum() ? 1.0 : coth_half(beta_m);
    const double c1 = spec.is_vacuum() ? 1.0 : coth_half(beta_m * u1 / mass_eps);
    const double lp = 0.25 * (c0 / u0 + c1 / u1);
    const double lq = 0.25 * (u0 * c0 + u1 * c1);
    return SymplecticSpectrum{spec, {std::sqrt(lp * lq)}, {lp}, {lq}};
}

}  // namespace sublattice
