#pragma once

// Entanglement entropy and modular data from a symplectic spectrum. Each
// mode contributes
//
//     s(lambda) = (lambda+1/2) log(lambda+1/2) - (lambda-1/2) log(lambda-1/2)
//
// in nats. Two deliberately independent evaluation routes are kept: the
// lambda form above and the xi form
//
//     s = -log(1-xi) - xi/(1-xi) log xi,      xi = (lambda-1/2)/(lambda+1/2),
//
// so each can cross-check the other at the 1e-12 level. lambda within 1e-12
// of 1/2 contributes exactly 0 (pure mode); lambda below 1/2 - 1e-9 is
// rejected as unphysical.

#include <span>
#include <vector>

#include "sublattice_ee/core_model.hpp"
#include "sublattice_ee/symplectic.hpp"

namespace sublattice {

struct EntanglementResult {
    double entropy = 0.0;                  // sum of per_mode, nats
    std::vector<double> per_mode;          // s(lambda_l)
    std::vector<double> mode_energies;     // beta_l = log((lambda+1/2)/(lambda-1/2)), +inf at 1/2
    std::vector<double> xi;                // xi_l in [0, 1)
};

// Per-mode entropy, lambda route. Evaluated as
// log1p(d) + d*log1p(1/d) with d = lambda - 1/2, which is the same
// expression rearranged so no term grows like lambda*log(lambda); the naive
// two-term difference loses eps*lambda*log(lambda) absolute at large lambda.
double mode_entropy(double lambda);

// Modular (entanglement Hamiltonian) energy of one mode and its inverse.
double modular_energy(double lambda);      // +inf at lambda = 1/2
double lambda_from_modular(double beta);   // 1/2 * coth(beta/2)

EntanglementResult entropy_from_spectrum(std::span<const double> lambda);
EntanglementResult entropy_from_spectrum(const SymplecticSpectrum& s);

// Independent xi-route evaluation; same outputs, different floating-point
// path. Raises "divergent entanglement entropy" if xi reaches 1.
EntanglementResult entropy_xi_form(std::span<const double> lambda);
EntanglementResult entropy_xi_form(const SymplecticSpectrum& s);

std::vector<double> modular_energies(std::span<const double> lambda);

// Per-mode Boltzmann ladders p_n = (1 - e^{-beta}) e^{-beta n}, n = 0..n_max,
// truncated at the smallest n_max whose residual mass e^{-beta (n_max+1)} is
// <= tail. A mode flatter than n_max = 1e8 raises "spectrum too flat".
struct EntanglementSpectrum {
    std::vector<std::vector<double>> ladders;  // one per mode, mode order
    double tail;                               // the bound used
};
EntanglementSpectrum entanglement_spectrum(const SymplecticSpectrum& s, double tail = 1e-12);

// Finite-difference check of the entanglement first law
// dS = sum_l beta_l dlambda_l under beta_m -> beta_m + delta. Returns both
// sides; their gap shrinks as O(delta^2).
struct FirstLawCheck {
    double lhs;  // S(beta_m + delta) - S(beta_m)
    double rhs;  // sum_l beta_l(beta_m) * delta lambda_l
};
FirstLawCheck first_law_check(const LatticeSpec& spec, double delta_beta_m);

// Headline number: entanglement entropy of the sublattice in the spec's
// state (vacuum or thermal).
double sublattice_entropy(const LatticeSpec& spec);

}  // namespace sublattice
