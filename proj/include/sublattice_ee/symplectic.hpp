#pragma once

// Symplectic eigenvalues of the reduced Gaussian state on the sublattice.
// Because Phi and Pi are simultaneously diagonal in the sublattice DFT basis,
// each symplectic eigenvalue factorizes, lambda_l = sqrt(lambda^phi_l *
// lambda^pi_l), and each factor is a single sum over the p modes congruent to
// +l or -l mod N_A:
//
//   lambda^phi_l = 1/(4p) sum_j [ w(l+jN_A)/u_{l+jN_A} + w((j+1)N_A-l)/u_{(j+1)N_A-l} ]
//   lambda^pi_l  = 1/(4p) sum_j [ w(l+jN_A)*u_{l+jN_A} + w((j+1)N_A-l)*u_{(j+1)N_A-l} ]
//
// with weight w(k) = 2<N_k>+1 (thermal: coth(beta omega_k / 2); vacuum: 1).
// The occupation and the frequency inside each bracket share the same mode
// index; in the vacuum the mirror terms coincide by reflection symmetry and
// the prefactor collapses to 1/(2p).

#include <span>
#include <vector>

#include "sublattice_ee/core_model.hpp"

namespace sublattice {

struct SymplecticSpectrum {
    LatticeSpec spec;                // the configuration this spectrum belongs to
    std::vector<double> lambda;      // ordered by mode index l = 0..N_A-1, not sorted
    std::vector<double> lambda_phi;  // factor eigenvalues, kept as diagnostics
    std::vector<double> lambda_pi;
};

// Arbitrary (non-negative, finite) mode occupations, one per ring mode.
SymplecticSpectrum spectrum_general(const LatticeSpec& spec,
                                    std::span<const double> occupations);

// Bose-Einstein occupations at the spec's finite temperature.
SymplecticSpectrum spectrum_thermal(const LatticeSpec& spec);

// Vacuum closed form lambda_l = 1/(2p) sqrt( sum_{j,k} u_{l+kN_A} / u_{l+jN_A} ),
// evaluated as the product of the two single sums.
SymplecticSpectrum spectrum_vacuum(const LatticeSpec& spec);

// Dispatch on the spec's state (vacuum vs thermal).
SymplecticSpectrum spectrum(const LatticeSpec& spec);

// N = 2, p = 2 closed form straight from the two normal modes
// u_0 = m eps, u_1 = sqrt((m eps)^2 + 4); beta_m may be +infinity.
SymplecticSpectrum spectrum_two_oscillators(double mass_eps, double beta_m);

}  // namespace sublattice
