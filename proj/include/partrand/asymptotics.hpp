#pragma once

#include <gmpxx.h>

#include "partrand/counting.hpp"

namespace partrand {

// c = pi/sqrt(6), the saddle-point scale constant.
double saddle_constant();

// Saddle point bundle for the partition generating function g at
// r = e^{-h_n}: the solution of a(e^{-h_n}) = n together with the
// variance factor b and log g there.
struct SaddleState {
    long n = 0;
    double h = 0;         // h_n
    double b = 0;         // b(e^{-h_n})
    double log_g = 0;     // log g(e^{-h_n})
    double residual = 0;  // |a(e^{-h_n}) - n|
};

// a(e^{-h}) = sum_j j e^{-jh} / (1 - e^{-jh}); strictly decreasing in h.
double saddle_a(double h);

// b(e^{-h}) = -d/dh a(e^{-h}) = sum_j j^2 e^{-jh} / (1 - e^{-jh})^2.
double saddle_b(double h);

// log g(e^{-h}) = -sum_k log(1 - e^{-kh}), by direct series summation.
double log_g_series(double h);

// Meinardus expansion zeta(2)/h + (1/2) log h - (1/2) log 2pi; cross-check
// for log_g_series.
double log_g_meinardus(double h);

// Bisection bracket plus Newton polish on a(e^{-h}) = n.
SaddleState solve_saddle(long n, double tol = 1e-12);

// Hardy-Ramanujan leading term, log scale and value.
double hr_leading_log(long n);
double hr_leading(long n);

// Two-term Rademacher form, log scale and value.
double rademacher_two_term_log(long n);
double rademacher_two_term(long n);

// Hayman coefficient formula e^{nh} g(e^{-h}) / sqrt(2 pi b), log scale
// and value.
double hayman_pn_log(long n);
double hayman_pn(long n);

// phi_{d,s}(e^{-h}): (S1 - (d+1) S2) prod_{j<=s} (1 - e^{-j(d+1)h}).
double phi_ds(double h, double d, double s);

// Finite-n approximation of the Theorem-1 joint CDF at (u, v):
// 2c E(Z_{d,s}) / (sqrt(n) log n) with d = n^{u/2}, s = n^{v/2}. Uses the
// exact expectation when a table covering n is supplied, else phi_{d,s}.
double approx_joint_proc1(long n, double u, double v, const CountTable* table = nullptr);

// Leading-order expectations sqrt(6n)/pi and (sqrt(6n)/2pi) log n.
double asym_EY(long n);
double asym_EZ(long n);

// log of an exact big-integer count, for relative-error comparisons.
double log_mpz(const mpz_class& v);

} // namespace partrand
