#include "sublattice_ee/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sublattice_ee/entropy.hpp"
#include "sublattice_ee/numerics.hpp"

namespace sublattice {

namespace {

constexpr double kPi = std::numbers::pi;

// AGM evaluation of K and E at parameter m_hat in [0, 1), entered through
// b0 = sqrt(1 - m_hat) so the caller can supply 1 - m_hat exactly even when
// m_hat has rounded to 1 (deep negative-parameter regime).
struct KE {
    double K, E;
};

KE agm_ke(double b0, double c0_sq) {
    double a = 1.0;
    double b = b0;
    double sum = 0.5 * c0_sq;  // sum of 2^{n-1} c_n^2 starting at n = 0
    double pow2 = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double c = 0.5 * (a - b);
        // The iterates converge quadratically until they stall a few ulp
        // apart; past that point the c^2 terms are pure rounding noise and
        // the doubling weight would amplify them without bound.
        if (std::abs(c) <= 4.0 * std::numeric_limits<double>::epsilon() * a) break;
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        sum += pow2 * c * c;
        pow2 *= 2.0;
    }
    const double K = kPi / (2.0 * a);
    return KE{K, K * (1.0 - sum)};
}

// Negative-parameter reduction: for mu = -m > 0,
//   K(-mu) = K(mu/(1+mu)) / sqrt(1+mu),  E(-mu) = E(mu/(1+mu)) * sqrt(1+mu),
// and the inner parameter's complement 1 - m_hat = 1/(1+mu) is formed
// directly, never by subtraction.
KE elliptic_pair(double m_param) {
    if (!(m_param <= 0.0))
        throw std::invalid_argument("elliptic parameter must be <= 0, got " +
                                    std::to_string(m_param));
    if (m_param == 0.0) {
        const KE flat{kPi / 2.0, kPi / 2.0};
        return flat;
    }
    const double mu = -m_param;
    const double comp = 1.0 / (1.0 + mu);   // 1 - m_hat
    const double m_hat = mu * comp;         // mu / (1 + mu)
    const KE inner = agm_ke(std::sqrt(comp), m_hat);
    const double root = std::sqrt(1.0 + mu);
    return KE{inner.K / root, inner.E * root};
}

double folded_frequency(double mass_eps, double t) {
    const double s = std::sin(kPi * t);
    return std::sqrt(mass_eps * mass_eps + 4.0 * s * s);
}

}  // namespace

double elliptic_K(double m_param) { return elliptic_pair(m_param).K; }

double elliptic_E(double m_param) { return elliptic_pair(m_param).E; }

double continuum_lambda0(double mass_eps) {
    if (!(mass_eps > 0.0) || std::isinf(mass_eps))
        throw std::invalid_argument("mass_eps must be positive and finite");
    const double m_param = -4.0 / (mass_eps * mass_eps);
    if (std::isinf(m_param))
        throw std::invalid_argument("mass_eps too small: elliptic parameter overflows");
    const KE ke = elliptic_pair(m_param);
    return std::sqrt(ke.E * ke.K) / kPi;
}

double thermal_continuum_lambda0(double mass_eps, double beta_m) {
    if (!(mass_eps > 0.0) || std::isinf(mass_eps))
        throw std::invalid_argument("mass_eps must be positive and finite");
    if (!(beta_m > 0.0) || std::isinf(beta_m))
        throw std::invalid_argument("beta_m must be positive and finite here; "
                                    "the vacuum limit is continuum_lambda0");
    const double scale = beta_m / mass_eps;
    const auto weighted_inv = [&](double t) {
        const double u = folded_frequency(mass_eps, t);
        return coth_half(scale * u) / u;
    };
    const auto weighted_dir = [&](double t) {
        const double u = folded_frequency(mass_eps, t);
        return coth_half(scale * u) * u;
    };
    // The integrands are symmetric about t = 1/2; integrate the half range.
    // Tolerances are two passes: a coarse scale estimate, then 1e-11 of it.
    const auto integrate = [](const auto& f) {
        const double rough = adaptive_simpson(f, 0.0, 0.5, 1e-6, 24);
        const double tol = 1e-11 * std::max(1.0, std::abs(rough));
        return 2.0 * adaptive_simpson(f, 0.0, 0.5, tol);
    };
    const double i_phi = integrate(weighted_inv);
    const double i_pi = integrate(weighted_dir);
    return 0.5 * std::sqrt(i_phi * i_pi);
}

double continuum_entropy(const ContinuumSpec& c) {
    if (c.n_sub < 1) throw std::invalid_argument("n_sub must be >= 1");
    const double lambda0 = c.is_vacuum()
                               ? continuum_lambda0(c.mass_eps)
                               : thermal_continuum_lambda0(c.mass_eps, c.beta_m);
    return static_cast<double>(c.n_sub) * mode_entropy(lambda0);
}

double uv_entropy_density_p2(double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    // x = sin^2(pi t / 2) / 2 = (1 - cos(pi t)) / 4 maps t in [0,1] onto
    // x in [0,1/2] with vanishing slope at both ends, flattening the log
    // endpoint singularities of s(lambda(x)). sin cos products go through
    // sin(2 pi x)/2 so rounding near x = 1/2 cannot turn the radicand
    // negative.
    const auto integrand = [](double t) {
        if (t <= 0.0 || t >= 1.0) return 0.0;
        const double x = (1.0 - std::cos(kPi * t)) / 4.0;
        const double sc = std::sin(2.0 * kPi * x) / 2.0;
        if (!(sc > 0.0)) return 0.0;
        const double lambda =
            (std::sin(kPi * x) + std::cos(kPi * x)) / (4.0 * std::sqrt(sc));
        return mode_entropy(lambda) * std::sin(kPi * t);
    };
    // Integrand is symmetric about t = 1/2 (x -> 1/2 - x leaves lambda
    // invariant); the factor 2 in front of the x-integral and the Jacobian
    // pi/4 combine with the half-range doubling below.
    const double half = adaptive_simpson(integrand, 0.0, 0.5, 0.5 * tol);
    return 2.0 * (kPi / 4.0) * (2.0 * half);
}

double reference_expansion(ReferenceFormula which, const ExpansionParams& p) {
    const auto need_mass = [&] {
        if (!(p.mass_eps > 0.0)) throw std::invalid_argument("mass_eps must be positive");
    };
    const auto need_beta = [&] {
        if (!(p.beta_m > 0.0) || std::isinf(p.beta_m))
            throw std::invalid_argument("beta_m must be positive and finite");
    };
    const double na = static_cast<double>(p.n_sub);
    switch (which) {
        case ReferenceFormula::zero_mode_lambda:
            need_mass();
            return 1.0 / (2.0 * std::sqrt(2.0 * p.mass_eps));
        case ReferenceFormula::small_mass_vacuum_entropy_n2:
            need_mass();
            return 0.5 * std::log(1.0 / p.mass_eps) + 1.0 - 1.5 * std::log(2.0);
        case ReferenceFormula::small_mass_thermal_entropy_p2: {
            need_mass();
            need_beta();
            const double be = p.beta_m / p.mass_eps;  // beta / eps
            return std::log(1.0 / p.beta_m) + 1.0 - std::log(2.0) +
                   0.5 * std::log1p(be * coth_half(2.0 * be));
        }
        case ReferenceFormula::high_temperature_entropy_p2:
            need_beta();
            return na * (1.0 + std::log(1.0 / p.beta_m));
        case ReferenceFormula::low_temperature_entropy_shift:
            need_beta();
            return std::exp(-p.beta_m);
        case ReferenceFormula::continuum_small_mass_entropy:
            need_mass();
            return na * (0.5 * std::log(std::log(1.0 / p.mass_eps)) + 1.0 - std::log(kPi));
        case ReferenceFormula::continuum_high_temperature_entropy:
            need_mass();
            need_beta();
            return na * (std::log(1.0 / p.beta_m) - 0.5 * std::log(1.0 / p.mass_eps) +
                         1.0 - 0.5 * std::log(2.0));
    }
    throw std::invalid_argument("unknown reference formula");
}

}  // namespace sublattice
