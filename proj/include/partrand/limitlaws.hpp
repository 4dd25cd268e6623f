#pragma once

#include <functional>

namespace partrand {

// Limiting joint CDF for procedure 1 on the log scale
// (2 log mu / log n, 2 log sigma / log n).
double F1(double u, double v);

// Limiting joint law for procedure 2: P(mu = m, c*sigma/sqrt(n) <= t) ->
// integral_0^t e^{-my}(1-e^{-y}) dy, in closed form.
double L2(long m, double t);

// Limiting joint law for procedure 3:
// (6m/pi^2) integral_0^t y(1-e^{-y})e^{-my} dy, in closed form.
double L3(long m, double t);

// Marginal laws.
double M1(double t);                 // t on (0,1), clamped outside
double M2_mult(long m);              // 1/(m(m+1))
double M2_size(double t);            // 1 - e^{-t}
double M3_mult(long m);              // 6(2m+1)/(pi^2 m (m+1)^2)
double M3_size(double t);            // (6/pi^2) integral_0^t y/(e^y-1) dy

// Adaptive Simpson quadrature; used for M3_size and as an independent
// oracle for the closed forms.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12);

// Integrands of Theorems 2 and 3, exposed for quadrature cross-checks.
double l2_integrand(long m, double y);
double l3_integrand(long m, double y);

} // namespace partrand
