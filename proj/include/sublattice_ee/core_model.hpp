#pragma once

// Discretized (1+1)d massive scalar on a periodic ring of N sites, lattice
// spacing eps, and the periodic sublattice A obtained by keeping every p-th
// site (N_A = N/p sites). Everything downstream works with the dimensionless
// mode frequencies
//
//     u_k = eps * omega_k = sqrt( (m eps)^2 + 4 sin^2(pi k / N) ),   k = 0..N-1,
//
// and the dimensionless inverse temperature beta*m. The two independent
// couplings are mass_eps = m*eps (UV knob) and beta_m = beta*m (thermal knob);
// beta_m = +infinity is the vacuum, encoded as a distinguished value rather
// than a large float so vacuum results are exact.

#include <vector>

namespace sublattice {

struct LatticeSpec {
    int n_sites;      // N, total ring sites
    int stride;       // p, sublattice keeps sites 0, p, 2p, ...
    int n_sub;        // N_A = N / p
    double mass_eps;  // m * eps > 0
    double beta_m;    // beta * m > 0, +infinity encodes the vacuum

    bool is_vacuum() const;
};

// Validating factories. Throw std::invalid_argument when p does not divide N,
// or mass_eps / beta_m are out of range.
LatticeSpec make_spec(int n_sites, int stride, double mass_eps, double beta_m);
LatticeSpec make_vacuum_spec(int n_sites, int stride, double mass_eps);

struct ModeSpectrum {
    std::vector<double> u;  // u_k in mode order, size N
};

// Symmetric circulant coupling matrix, stored as its first row. The
// nearest-neighbour row for this model is (2 + (m eps)^2, -1, 0, ..., 0, -1).
class CouplingMatrix {
public:
    explicit CouplingMatrix(std::vector<double> first_row);
    const std::vector<double>& first_row() const { return row_; }
    int size() const { return static_cast<int>(row_.size()); }

private:
    std::vector<double> row_;
};

// u_k for a single mode index (any integer, reduced mod N). The index is
// folded to min(k, N-k) before the sine so that u_k == u_{N-k} holds
// bitwise, not just to rounding.
double mode_frequency(const LatticeSpec& spec, long long k);

// All N mode frequencies of the nearest-neighbour model.
ModeSpectrum dispersion(const LatticeSpec& spec);

// Mode frequencies of a general stable circulant coupling: u_k = sqrt(mu_k)
// with mu_k the (real) circulant eigenvalues. A non-positive eigenvalue means
// a massless or tachyonic mode and raises "unstable coupling".
ModeSpectrum dispersion_from_coupling(const CouplingMatrix& coupling);

// Bose-Einstein occupation of mode u_k at the spec's temperature,
// <N_k> = 1/(e^{beta omega_k} - 1) with beta omega_k = beta_m * u_k / mass_eps.
// Exactly 0 in the vacuum and once beta omega_k > 700.
double occupation(double u_k, const LatticeSpec& spec);

// occupation() applied across a full mode spectrum.
std::vector<double> thermal_occupations(const LatticeSpec& spec, const ModeSpectrum& modes);

}  // namespace sublattice
