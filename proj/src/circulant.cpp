#include "sublattice_ee/circulant.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sublattice_ee/numerics.hpp"

namespace sublattice {

namespace {

// cos(2 pi r / n) for r = 0..n-1 with the fold r -> min(r, n-r) applied, so
// the table, and everything summed from it, is exactly reflection-symmetric.
std::vector<double> cosine_table(int n) {
    std::vector<double> t(n);
    for (int r = 0; r <= n / 2; ++r)
        t[r] = std::cos(2.0 * std::numbers::pi * static_cast<double>(r) /
                        static_cast<double>(n));
    for (int r = n / 2 + 1; r < n; ++r) t[r] = t[n - r];
    return t;
}

}  // namespace

CirculantMatrix::CirculantMatrix(std::vector<double> first_row) : row_(std::move(first_row)) {
    const int n = static_cast<int>(row_.size());
    if (n < 1) throw std::invalid_argument("circulant row must be non-empty");
    for (int j = 1; j < n; ++j)
        if (row_[j] != row_[n - j])
            throw std::invalid_argument("circulant row is not symmetric at offset " +
                                        std::to_string(j));
}

std::vector<double> circulant_eigenvalues(const CirculantMatrix& c) {
    const int n = c.size();
    const std::vector<double>& row = c.first_row();
    const std::vector<double> tab = cosine_table(n);
    std::vector<double> lam(n);
    for (int m = 0; m < n; ++m) {
        KahanSum s;
        for (int k = 0; k < n; ++k)
            s.add(row[k] * tab[static_cast<int>((static_cast<long long>(m) * k) % n)]);
        lam[m] = s.value();
    }
    return lam;
}

std::vector<std::complex<double>> circulant_eigenvector(int n, int m) {
    if (n < 1) throw std::invalid_argument("eigenvector size must be >= 1");
    if (m < 0 || m >= n)
        throw std::invalid_argument("mode index " + std::to_string(m) +
                                    " outside [0, " + std::to_string(n) + ")");
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<std::complex<double>> v(n);
    for (int k = 0; k < n; ++k) {
        const long long r = (static_cast<long long>(m) * k) % n;
        const double phase = -2.0 * std::numbers::pi * static_cast<double>(r) /
                             static_cast<double>(n);
        v[k] = std::polar(norm, phase);
    }
    return v;
}

SublatticeCorrelators sublattice_correlators(const LatticeSpec& spec) {
    const int n = spec.n_sites;
    const int na = spec.n_sub;

    // Mode weights (2<N_k>+1)/u_k and (2<N_k>+1)*u_k, one pass.
    std::vector<double> w_phi(n), w_pi(n);
    for (int k = 0; k < n; ++k) {
        const double u = mode_frequency(spec, k);
        const double w = spec.is_vacuum()
                             ? 1.0
                             : coth_half(spec.beta_m * u / spec.mass_eps);
        w_phi[k] = w / u;
        w_pi[k] = w * u;
    }

    const std::vector<double> tab = cosine_table(na);
    const double scale = 1.0 / (2.0 * static_cast<double>(n));
    std::vector<double> row_phi(na), row_pi(na);
    for (int j = 0; j < na; ++j) {
        KahanSum sp, sq;
        for (int k = 0; k < n; ++k) {
            const double c = tab[static_cast<int>((static_cast<long long>(j) * k) % na)];
            sp.add(w_phi[k] * c);
            sq.add(w_pi[k] * c);
        }
        row_phi[j] = scale * sp.value();
        row_pi[j] = scale * sq.value();
    }
    return SublatticeCorrelators{CirculantMatrix(std::move(row_phi)),
                                 CirculantMatrix(std::move(row_pi))};
}

std::vector<std::vector<double>> dense_from_circulant(const CirculantMatrix& c) {
    const int n = c.size();
    const std::vector<double>& row = c.first_row();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = row[((j - i) % n + n) % n];
    return a;
}

}  // namespace sublattice
