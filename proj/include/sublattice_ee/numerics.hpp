#pragma once

// Small numerical utilities shared across the library: compensated
// summation, stable Bose/coth kernels, and an adaptive Simpson quadrature.

#include <cmath>
#include <cstdio>
#include <utility>

#include "sublattice_ee/errors.hpp"

namespace sublattice {

// Kahan-Neumaier compensated accumulator. Mode sums mix magnitudes as
// disparate as 1/u_0 ~ 1/(m eps) and u_k ~ 2, with up to 1e6 terms, so the
// running compensation is not optional.
class KahanSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// coth(x/2) = 1 + 2/(e^x - 1) through expm1: no cancellation at small x,
// exact saturation to 1 once 2/expm1(x) underflows next to 1. The cutoff at
// x = 700 also keeps expm1 clear of overflow.
inline double coth_half(double x) {
    if (x > 700.0) return 1.0;
    return 1.0 + 2.0 / std::expm1(x);
}

// Bose-Einstein occupation 1/(e^x - 1) with the same saturation cutoff.
inline double bose_from_exponent(double x) {
    if (x > 700.0) return 0.0;
    return 1.0 / std::expm1(x);
}

namespace detail {

struct SimpsonState {
    double excess = 0.0;  // error estimate abandoned at the depth cap
};

template <class F>
double simpson_rec(const F& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth, SimpsonState& st) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    if (depth <= 0) {
        st.excess += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, st) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, st);
}

}  // namespace detail

// Adaptive Simpson on [a, b] to absolute tolerance tol. Throws
// NumericalError carrying the achieved tolerance if the recursion depth cap
// is hit before the local error estimates fall below tol.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 48) {
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    detail::SimpsonState st;
    const double v =
        detail::simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth, st);
    if (st.excess > 0.01 * tol) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "quadrature did not converge: achieved %.3e, requested %.3e",
                      tol + st.excess, tol);
        throw NumericalError(msg);
    }
    return v;
}

}  // namespace sublattice
