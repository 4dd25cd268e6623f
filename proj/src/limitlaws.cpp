#include "partrand/limitlaws.hpp"

#include <cmath>
#include <stdexcept>

namespace partrand {

double F1(double u, double v) {
    if (std::min(u, v) <= 0) return 0;
    if (u > 1 && v > 1) return 1;
    if (u > 1) return std::min(1.0, v);
    if (v > 1) return std::min(1.0, u);
    if (u + v <= 1) return 0;
    return u + v - 1;
}

double L2(long m, double t) {
    if (m < 1) throw std::invalid_argument("L2: need m >= 1");
    if (t <= 0) return 0;
    const double md = static_cast<double>(m);
    return -std::expm1(-md * t) / md + std::expm1(-(md + 1) * t) / (md + 1);
}

namespace {

// integral_0^t y e^{-ay} dy = (1 - e^{-at}(1+at)) / a^2
double ramp_exp_integral(double a, double t) {
    return (1.0 - std::exp(-a * t) * (1.0 + a * t)) / (a * a);
}

} // namespace

double L3(long m, double t) {
    if (m < 1) throw std::invalid_argument("L3: need m >= 1");
    if (t <= 0) return 0;
    const double md = static_cast<double>(m);
    return (6.0 * md / (M_PI * M_PI)) *
           (ramp_exp_integral(md, t) - ramp_exp_integral(md + 1, t));
}

double M1(double t) { return std::clamp(t, 0.0, 1.0); }

double M2_mult(long m) {
    if (m < 1) throw std::invalid_argument("M2_mult: need m >= 1");
    const double md = static_cast<double>(m);
    return 1.0 / (md * (md + 1));
}

double M2_size(double t) { return t <= 0 ? 0.0 : -std::expm1(-t); }

double M3_mult(long m) {
    if (m < 1) throw std::invalid_argument("M3_mult: need m >= 1");
    const double md = static_cast<double>(m);
    return 6.0 * (2 * md + 1) / (M_PI * M_PI * md * (md + 1) * (md + 1));
}

double M3_size(double t) {
    if (t <= 0) return 0;
    // y/(e^y - 1) extended by its limit 1 at y = 0.
    auto f = [](double y) { return y < 1e-12 ? 1.0 : y / std::expm1(y); };
    return (6.0 / (M_PI * M_PI)) * adaptive_simpson(f, 0.0, t, 1e-12);
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b, double fb,
               double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa, double b, double fb,
             double fm, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, flm);
    const double right = simpson(f, m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adapt(f, a, fa, m, fm, flm, left, tol / 2, depth - 1) +
           adapt(f, m, fm, b, fb, frm, right, tol / 2, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = simpson(f, a, fa, b, fb, fm);
    return adapt(f, a, fa, b, fb, fm, whole, tol, 50);
}

double l2_integrand(long m, double y) {
    return std::exp(-static_cast<double>(m) * y) * -std::expm1(-y);
}

double l3_integrand(long m, double y) {
    return (6.0 * m / (M_PI * M_PI)) * y * -std::expm1(-y) * std::exp(-static_cast<double>(m) * y);
}

} // namespace partrand
