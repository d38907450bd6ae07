#include "sublattice_ee/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sublattice_ee/numerics.hpp"

namespace sublattice {

namespace {

constexpr int kDenseCap = 512;

double frobenius(const DenseMatrix& m) {
    KahanSum s;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) s.add(m(i, j) * m(i, j));
    return std::sqrt(s.value());
}

double off_diagonal_frobenius(const DenseMatrix& m) {
    KahanSum s;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            if (i != j) s.add(m(i, j) * m(i, j));
    return std::sqrt(s.value());
}

void require_symmetric(const DenseMatrix& m) {
    double scale = 0.0;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) scale = std::max(scale, std::abs(m(i, j)));
    const double tol = 1e-12 * std::max(1.0, scale);
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j)
            if (std::abs(m(i, j) - m(j, i)) > tol)
                throw std::invalid_argument("matrix is not symmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
}

// Cyclic Jacobi with eigenvector accumulation. Rotations zero one
// off-diagonal pair at a time; the off-diagonal mass is strictly
// non-increasing, quadratically so once sweeps start to converge.
EigenSystem jacobi(const DenseMatrix& input, int max_sweeps, bool want_vectors) {
    require_symmetric(input);
    const int n = input.size();
    DenseMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + input(j, i));
    DenseMatrix v(n);
    if (want_vectors)
        for (int i = 0; i < n; ++i) v(i, i) = 1.0;

    const double norm = frobenius(a);
    const double target = 1e-13 * norm;
    bool converged = (n <= 1) || (off_diagonal_frobenius(a) <= target);
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                if (want_vectors) {
                    for (int k = 0; k < n; ++k) {
                        const double vkp = v(k, p);
                        const double vkq = v(k, q);
                        v(k, p) = c * vkp - s * vkq;
                        v(k, q) = s * vkp + c * vkq;
                    }
                }
            }
        }
        converged = off_diagonal_frobenius(a) <= target;
    }
    if (!converged)
        throw NumericalError("eigensolver stalled: off-diagonal norm still above " +
                             std::to_string(target) + " after " +
                             std::to_string(max_sweeps) + " sweeps");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i) < a(j, j); });
    EigenSystem es;
    es.values.resize(n);
    es.vectors = DenseMatrix(n);
    for (int i = 0; i < n; ++i) {
        es.values[i] = a(order[i], order[i]);
        if (want_vectors)
            for (int k = 0; k < n; ++k) es.vectors(k, i) = v(k, order[i]);
    }
    return es;
}

DenseMatrix multiply(const DenseMatrix& x, const DenseMatrix& y) {
    const int n = x.size();
    DenseMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            KahanSum s;
            for (int k = 0; k < n; ++k) s.add(x(i, k) * y(k, j));
            r(i, j) = s.value();
        }
    return r;
}

}  // namespace

DenseCorrelators dense_correlators(int n_sites, double mass_eps,
                                   std::span<const int> sites,
                                   std::span<const double> occupations) {
    if (n_sites < 1) throw std::invalid_argument("n_sites must be >= 1");
    if (!(mass_eps > 0.0) || std::isinf(mass_eps))
        throw std::invalid_argument("mass_eps must be positive and finite");
    if (sites.empty()) throw std::invalid_argument("site subset must be non-empty");
    if (static_cast<int>(sites.size()) > kDenseCap)
        throw std::invalid_argument("dense path capped at " + std::to_string(kDenseCap) +
                                    " sites, got " + std::to_string(sites.size()));
    if (static_cast<int>(occupations.size()) != n_sites)
        throw std::invalid_argument("need one occupation per ring mode");
    for (size_t a = 0; a < sites.size(); ++a) {
        if (sites[a] < 0 || sites[a] >= n_sites)
            throw std::invalid_argument("site " + std::to_string(sites[a]) +
                                        " outside the ring");
        for (size_t b = a + 1; b < sites.size(); ++b)
            if (sites[a] == sites[b])
                throw std::invalid_argument("duplicate site " + std::to_string(sites[a]));
    }

    // Mode data straight from the dispersion; the fold keeps u_k symmetric.
    std::vector<double> w_phi(n_sites), w_pi(n_sites);
    for (int k = 0; k < n_sites; ++k) {
        long long r = k;
        if (r > n_sites - r) r = n_sites - r;
        const double s =
            std::sin(std::numbers::pi * static_cast<double>(r) / static_cast<double>(n_sites));
        const double u = std::sqrt(mass_eps * mass_eps + 4.0 * s * s);
        const double w = 2.0 * occupations[static_cast<size_t>(k)] + 1.0;
        w_phi[k] = w / u;
        w_pi[k] = w * u;
    }
    std::vector<double> tab(n_sites);
    for (int r = 0; r <= n_sites / 2; ++r)
        tab[r] = std::cos(2.0 * std::numbers::pi * static_cast<double>(r) /
                          static_cast<double>(n_sites));
    for (int r = n_sites / 2 + 1; r < n_sites; ++r) tab[r] = tab[n_sites - r];

    const int m = static_cast<int>(sites.size());
    DenseCorrelators out{std::vector<int>(sites.begin(), sites.end()), DenseMatrix(m),
                         DenseMatrix(m)};
    const double scale = 1.0 / (2.0 * static_cast<double>(n_sites));
    for (int a = 0; a < m; ++a) {
        for (int b = a; b < m; ++b) {
            const int q = ((sites[a] - sites[b]) % n_sites + n_sites) % n_sites;
            KahanSum sp, sq;
            for (int k = 0; k < n_sites; ++k) {
                const double c =
                    tab[static_cast<int>((static_cast<long long>(q) * k) % n_sites)];
                sp.add(w_phi[k] * c);
                sq.add(w_pi[k] * c);
            }
            out.phi(a, b) = out.phi(b, a) = scale * sp.value();
            out.pi(a, b) = out.pi(b, a) = scale * sq.value();
        }
    }
    return out;
}

DenseCorrelators dense_correlators(const LatticeSpec& spec, std::span<const int> sites) {
    const ModeSpectrum modes = dispersion(spec);
    const std::vector<double> occ = thermal_occupations(spec, modes);
    return dense_correlators(spec.n_sites, spec.mass_eps, sites, occ);
}

std::vector<double> symmetric_eigenvalues(const DenseMatrix& m, int max_sweeps) {
    return jacobi(m, max_sweeps, /*want_vectors=*/false).values;
}

EigenSystem symmetric_eigensystem(const DenseMatrix& m, int max_sweeps) {
    return jacobi(m, max_sweeps, /*want_vectors=*/true);
}

std::vector<double> symplectic_spectrum_dense(const DenseCorrelators& c) {
    const int n = c.phi.size();
    const EigenSystem phi_es = symmetric_eigensystem(c.phi);
    for (double d : phi_es.values)
        if (!(d > 0.0))
            throw NumericalError("invalid correlator: field correlator is not positive "
                                 "definite (eigenvalue " + std::to_string(d) + ")");

    DenseMatrix sqrt_phi(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            KahanSum s;
            for (int k = 0; k < n; ++k)
                s.add(phi_es.vectors(i, k) * std::sqrt(phi_es.values[k]) * phi_es.vectors(j, k));
            sqrt_phi(i, j) = s.value();
        }

    DenseMatrix prod = multiply(multiply(sqrt_phi, c.pi), sqrt_phi);
    for (int i = 0; i < n; ++i)  // symmetrize away the rounding skew
        for (int j = i + 1; j < n; ++j) {
            const double av = 0.5 * (prod(i, j) + prod(j, i));
            prod(i, j) = prod(j, i) = av;
        }
    std::vector<double> mu = symmetric_eigenvalues(prod);
    std::vector<double> lambda(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) {
        if (!(mu[i] > 0.0))
            throw NumericalError("invalid correlator: momentum correlator is not positive "
                                 "definite (eigenvalue " + std::to_string(mu[i]) + ")");
        lambda[i] = std::sqrt(mu[i]);
    }
    return lambda;  // ascending because mu is
}

}  // namespace sublattice
