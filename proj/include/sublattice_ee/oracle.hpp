#pragma once

// Dense-matrix oracle for cross-validation. Builds the two-point correlators
// of an arbitrary site subset directly from the mode sums, then extracts the
// symplectic spectrum as sqrt(eig(Phi^{1/2} Pi Phi^{1/2})) with a hand-rolled
// cyclic Jacobi eigensolver. Shares no code with the circulant closed forms
// on purpose: this path is the arbiter when they disagree.

#include <span>
#include <vector>

#include "sublattice_ee/core_model.hpp"

namespace sublattice {

// Minimal square dense matrix, row-major. Only what the oracle needs.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}
    int size() const { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

private:
    int n_ = 0;
    std::vector<double> a_;
};

struct DenseCorrelators {
    std::vector<int> sites;
    DenseMatrix phi;
    DenseMatrix pi;
};

// Correlators restricted to `sites` (distinct ring positions), for arbitrary
// mode occupations (size n_sites). No divisibility assumption: any subset of
// the ring is legal. The dense path is capped at 512 sites.
DenseCorrelators dense_correlators(int n_sites, double mass_eps,
                                   std::span<const int> sites,
                                   std::span<const double> occupations);

// Same, with occupations taken from the spec's state (vacuum or thermal).
DenseCorrelators dense_correlators(const LatticeSpec& spec, std::span<const int> sites);

// Eigenvalues (ascending) of a symmetric matrix by cyclic Jacobi sweeps.
// Convergence: off-diagonal Frobenius norm below 1e-13 * ||M||_F; more than
// max_sweeps sweeps raises "eigensolver stalled".
std::vector<double> symmetric_eigenvalues(const DenseMatrix& m, int max_sweeps = 100);

struct EigenSystem {
    std::vector<double> values;  // ascending
    DenseMatrix vectors;         // column i pairs with values[i]
};
EigenSystem symmetric_eigensystem(const DenseMatrix& m, int max_sweeps = 100);

// Symplectic spectrum of the reduced state: sqrt of the eigenvalues of
// Phi^{1/2} Pi Phi^{1/2}, sorted ascending. Phi must be positive definite
// ("invalid correlator" otherwise).
std::vector<double> symplectic_spectrum_dense(const DenseCorrelators& c);

}  // namespace sublattice
