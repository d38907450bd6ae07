#include "sublattice_ee/core_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sublattice_ee/circulant.hpp"
#include "sublattice_ee/numerics.hpp"

namespace sublattice {

bool LatticeSpec::is_vacuum() const { return std::isinf(beta_m); }

namespace {

void validate_couplings(double mass_eps, double beta_m) {
    if (!(mass_eps > 0.0) || std::isinf(mass_eps))
        throw std::invalid_argument("mass_eps must be positive and finite, got " +
                                    std::to_string(mass_eps));
    if (!(beta_m > 0.0))  // +inf (vacuum) passes, NaN and <= 0 do not
        throw std::invalid_argument("beta_m must be positive, got " +
                                    std::to_string(beta_m));
}

}  // namespace

LatticeSpec make_spec(int n_sites, int stride, double mass_eps, double beta_m) {
    if (n_sites < 1)
        throw std::invalid_argument("n_sites must be >= 1, got " + std::to_string(n_sites));
    if (stride < 1)
        throw std::invalid_argument("stride must be >= 1, got " + std::to_string(stride));
    if (n_sites % stride != 0)
        throw std::invalid_argument("stride " + std::to_string(stride) +
                                    " does not divide n_sites " + std::to_string(n_sites));
    validate_couplings(mass_eps, beta_m);
    return LatticeSpec{n_sites, stride, n_sites / stride, mass_eps, beta_m};
}

LatticeSpec make_vacuum_spec(int n_sites, int stride, double mass_eps) {
    return make_spec(n_sites, stride, mass_eps,
                     std::numeric_limits<double>::infinity());
}

double mode_frequency(const LatticeSpec& spec, long long k) {
    const long long n = spec.n_sites;
    long long r = k % n;
    if (r < 0) r += n;
    if (r > n - r) r = n - r;  // fold so u_k == u_{N-k} bitwise
    const double s = std::sin(std::numbers::pi * static_cast<double>(r) /
                              static_cast<double>(n));
    return std::sqrt(spec.mass_eps * spec.mass_eps + 4.0 * s * s);
}

ModeSpectrum dispersion(const LatticeSpec& spec) {
    ModeSpectrum m;
    m.u.resize(spec.n_sites);
    for (int k = 0; k < spec.n_sites; ++k) m.u[k] = mode_frequency(spec, k);
    return m;
}

CouplingMatrix::CouplingMatrix(std::vector<double> first_row) : row_(std::move(first_row)) {
    const int n = static_cast<int>(row_.size());
    if (n < 1) throw std::invalid_argument("coupling row must be non-empty");
    for (int j = 1; j < n; ++j)
        if (row_[j] != row_[n - j])
            throw std::invalid_argument("coupling row is not symmetric at offset " +
                                        std::to_string(j));
}

ModeSpectrum dispersion_from_coupling(const CouplingMatrix& coupling) {
    const CirculantMatrix c(coupling.first_row());
    const std::vector<double> mu = circulant_eigenvalues(c);
    ModeSpectrum m;
    m.u.resize(mu.size());
    for (size_t k = 0; k < mu.size(); ++k) {
        if (!(mu[k] > 0.0))
            throw std::invalid_argument(
                "unstable coupling: mode " + std::to_string(k) +
                " has non-positive eigenvalue " + std::to_string(mu[k]));
        m.u[k] = std::sqrt(mu[k]);
    }
    return m;
}

double occupation(double u_k, const LatticeSpec& spec) {
    if (spec.is_vacuum()) return 0.0;
    return bose_from_exponent(spec.beta_m * u_k / spec.mass_eps);
}

std::vector<double> thermal_occupations(const LatticeSpec& spec, const ModeSpectrum& modes) {
    std::vector<double> n(modes.u.size());
    for (size_t k = 0; k < modes.u.size(); ++k) n[k] = occupation(modes.u[k], spec);
    return n;
}

}  // namespace sublattice
