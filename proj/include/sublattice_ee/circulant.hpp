#pragma once

// Circulant machinery for the periodic sublattice: eigenvalues as cosine
// sums, DFT eigenvectors, and the reduced two-point correlators of the kept
// sites, which are themselves circulant because the sublattice inherits the
// translation symmetry.

#include <complex>
#include <vector>

#include "sublattice_ee/core_model.hpp"

namespace sublattice {

// Symmetric real circulant, stored as its first row c_0..c_{n-1} with
// c_j == c_{n-j} enforced at construction.
class CirculantMatrix {
public:
    explicit CirculantMatrix(std::vector<double> first_row);
    const std::vector<double>& first_row() const { return row_; }
    int size() const { return static_cast<int>(row_.size()); }

private:
    std::vector<double> row_;
};

// Eigenvalues lambda_m = sum_k c_k cos(2 pi m k / n), m = 0..n-1, in mode
// order. Imaginary parts vanish identically for a symmetric row, so only the
// cosine sum is evaluated (compensated).
std::vector<double> circulant_eigenvalues(const CirculantMatrix& c);

// DFT eigenvector v_k = n^{-1/2} exp(-2 pi i m k / n) shared by every n x n
// circulant.
std::vector<std::complex<double>> circulant_eigenvector(int n, int m);

struct SublatticeCorrelators {
    CirculantMatrix phi;  // <phi_i phi_j> restricted to sublattice sites
    CirculantMatrix pi;   // <pi_i pi_j>, same restriction
};

// First rows of the reduced correlators,
//   Phi_{0j} = 1/(2N) sum_k (2<N_k>+1) / u_k * cos(2 pi j k / N_A),
//   Pi_{0j}  = 1/(2N) sum_k (2<N_k>+1) * u_k * cos(2 pi j k / N_A),
// with the full-ring mode sum evaluated per row offset j.
SublatticeCorrelators sublattice_correlators(const LatticeSpec& spec);

// Dense n x n realization of a circulant; handy for cross-checks and the
// commutator test, not used on the fast paths.
std::vector<std::vector<double>> dense_from_circulant(const CirculantMatrix& c);

}  // namespace sublattice
