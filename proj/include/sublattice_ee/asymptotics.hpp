#pragma once

// Continuum (p -> infinity at fixed N_A) limits and printed leading-order
// expansions used as comparison targets.
//
// In the continuum the sublattice spectrum degenerates to a single
// eigenvalue; in the vacuum it has the closed form
//
//     lambda_0 = (1/pi) sqrt( E(-4/(m eps)^2) K(-4/(m eps)^2) ),
//
// with K, E complete elliptic integrals in the PARAMETER convention
// (K(m) = int_0^{pi/2} dt / sqrt(1 - m sin^2 t), i.e. m = k^2; NOT the
// modulus convention). Only the m <= 0 branch ever arises here, handled by
// the standard negative-parameter transformation followed by AGM. At finite
// temperature lambda_0 comes from two adaptive quadratures over the folded
// Brillouin zone.

#include <cmath>
#include <limits>

namespace sublattice {

// Complete elliptic integrals, parameter convention, m <= 0 only
// (m > 0 is outside this library's needs and is rejected).
double elliptic_K(double m_param);
double elliptic_E(double m_param);

// Vacuum continuum eigenvalue (per sublattice site, independent of N_A).
double continuum_lambda0(double mass_eps);

// Thermal continuum eigenvalue at finite beta_m; reduces to
// continuum_lambda0 as beta_m -> infinity.
double thermal_continuum_lambda0(double mass_eps, double beta_m);

struct ContinuumSpec {
    int n_sub = 1;
    double mass_eps = 1.0;
    double beta_m = std::numeric_limits<double>::infinity();  // +inf = vacuum
    bool is_vacuum() const { return std::isinf(beta_m); }
};

// S = N_A * s(lambda_0): strictly extensive in the continuum.
double continuum_entropy(const ContinuumSpec& c);

// UV entropy density of the p = 2 sublattice at m eps -> 0:
//   2 int_0^{1/2} s(lambda(x)) dx,
//   lambda(x) = (sin pi x + cos pi x) / (4 sqrt(sin pi x cos pi x)),
// evaluated with the endpoint-regularizing substitution x = sin^2(pi t/2)/2.
// The value is about 0.356.
double uv_entropy_density_p2(double tol = 1e-10);

// Leading-order reference expressions. These are comparison targets for
// tests, not part of the exact engine.
enum class ReferenceFormula {
    zero_mode_lambda,                    // 1/(2 sqrt(2 m eps))
    small_mass_vacuum_entropy_n2,        // 1/2 log(1/(m eps)) + 1 - 3/2 log 2
    small_mass_thermal_entropy_p2,       // log(T/m) + 1 - log 2 + 1/2 log(1 + (b/e) coth(b/e))
    high_temperature_entropy_p2,         // N_A (1 + log(T/m)),  1/eps << m << T
    low_temperature_entropy_shift,       // e^{-beta m}
    continuum_small_mass_entropy,        // N_A (1/2 log log(1/(m eps)) + 1 - log pi)
    continuum_high_temperature_entropy,  // N_A (log(T/m) - 1/2 log(1/(m eps)) + 1 - 1/2 log 2)
};

struct ExpansionParams {
    double mass_eps = 1.0;
    double beta_m = std::numeric_limits<double>::infinity();
    int n_sub = 1;
};

double reference_expansion(ReferenceFormula which, const ExpansionParams& p);

}  // namespace sublattice
