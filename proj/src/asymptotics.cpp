#include "partrand/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "partrand/expectations.hpp"

namespace partrand {

namespace {

constexpr double kZeta2 = M_PI * M_PI / 6.0;
// Series terms below this are under double-precision noise.
constexpr double kTermCutoff = 1e-18;

} // namespace

double saddle_constant() { return M_PI / std::sqrt(6.0); }

double saddle_a(double h) {
    if (h <= 0) throw std::invalid_argument("saddle_a: need h > 0");
    double sum = 0;
    for (long j = 1;; ++j) {
        const double e = std::exp(-j * h);
        if (e < kTermCutoff) break;
        sum += j * e / (1.0 - e);
    }
    return sum;
}

double saddle_b(double h) {
    if (h <= 0) throw std::invalid_argument("saddle_b: need h > 0");
    double sum = 0;
    for (long j = 1;; ++j) {
        const double e = std::exp(-j * h);
        if (e < kTermCutoff) break;
        const double d = 1.0 - e;
        sum += static_cast<double>(j) * j * e / (d * d);
    }
    return sum;
}

double log_g_series(double h) {
    if (h <= 0) throw std::invalid_argument("log_g_series: need h > 0");
    double sum = 0;
    for (long k = 1;; ++k) {
        const double e = std::exp(-k * h);
        if (e < kTermCutoff) break;
        sum -= std::log1p(-e);
    }
    return sum;
}

double log_g_meinardus(double h) {
    return kZeta2 / h + 0.5 * std::log(h) - 0.5 * std::log(2.0 * M_PI);
}

SaddleState solve_saddle(long n, double tol) {
    if (n < 1 || tol <= 0) throw std::invalid_argument("solve_saddle: need n >= 1, tol > 0");
    const double scale = M_PI / std::sqrt(6.0 * n);
    double lo = 0.2 * scale;
    double hi = 5.0 * scale;
    if (saddle_a(lo) < n || saddle_a(hi) > n)
        throw std::runtime_error("solve_saddle: bracket does not contain the root");
    // Bisection to ~1e-3 relative, then Newton with a' = -b.
    while ((hi - lo) / hi > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        (saddle_a(mid) > n ? lo : hi) = mid;
    }
    double h = 0.5 * (lo + hi);
    for (int iter = 0; iter < 60; ++iter) {
        const double r = saddle_a(h) - n;
        if (std::fabs(r) <= tol * n) break;
        h += r / saddle_b(h);
        h = std::clamp(h, 0.5 * lo, 2.0 * hi);
    }
    SaddleState st;
    st.n = n;
    st.h = h;
    st.b = saddle_b(h);
    st.log_g = log_g_series(h);
    st.residual = std::fabs(saddle_a(h) - n);
    return st;
}

double hr_leading_log(long n) {
    if (n < 1) throw std::invalid_argument("hr_leading_log: need n >= 1");
    return M_PI * std::sqrt(2.0 * n / 3.0) - std::log(4.0 * n * std::sqrt(3.0));
}

double hr_leading(long n) { return std::exp(hr_leading_log(n)); }

double rademacher_two_term_log(long n) {
    if (n < 1) throw std::invalid_argument("rademacher_two_term_log: need n >= 1");
    const double expo = M_PI * std::sqrt(2.0 * n / 3.0);
    const double c1 = 1.0 / (4.0 * n * std::sqrt(3.0));
    const double c2 = 1.0 / (4.0 * M_PI * std::sqrt(2.0) * std::pow(n, 1.5));
    return expo + std::log(c1 - c2);
}

double rademacher_two_term(long n) { return std::exp(rademacher_two_term_log(n)); }

double hayman_pn_log(long n) {
    const SaddleState st = solve_saddle(n);
    return n * st.h + st.log_g - 0.5 * std::log(2.0 * M_PI * st.b);
}

double hayman_pn(long n) { return std::exp(hayman_pn_log(n)); }

double phi_ds(double h, double d, double s) {
    if (h <= 0 || d < 1 || s < 1) throw std::invalid_argument("phi_ds: need h > 0, d,s >= 1");
    const long si = static_cast<long>(std::floor(s));
    double s1 = 0, s2 = 0, log_prod = 0;
    for (long j = 1; j <= si; ++j) {
        const double e = std::exp(-j * h);
        if (e >= kTermCutoff) s1 += e / (1.0 - e);
        const double ed = std::exp(-j * (d + 1.0) * h);
        if (ed >= kTermCutoff) {
            s2 += ed / (1.0 - ed);
            log_prod += std::log1p(-ed);
        }
    }
    return (s1 - (d + 1.0) * s2) * std::exp(log_prod);
}

double approx_joint_proc1(long n, double u, double v, const CountTable* table) {
    if (n < 2) throw std::invalid_argument("approx_joint_proc1: need n >= 2");
    const double d = std::pow(static_cast<double>(n), u / 2.0);
    const double s = std::pow(static_cast<double>(n), v / 2.0);
    double ez;
    if (table != nullptr && static_cast<std::size_t>(n) <= table->limit()) {
        ez = expect_Zds(*table, n, std::max(1.0, d), std::max(1.0, s)).get_d();
    } else {
        const SaddleState st = solve_saddle(n);
        ez = phi_ds(st.h, std::max(1.0, d), std::max(1.0, s));
    }
    return 2.0 * saddle_constant() * ez / (std::sqrt(static_cast<double>(n)) * std::log(n));
}

double asym_EY(long n) { return std::sqrt(6.0 * n) / M_PI; }

double asym_EZ(long n) { return std::sqrt(6.0 * n) / (2.0 * M_PI) * std::log(n); }

double log_mpz(const mpz_class& v) {
    signed long exp2;
    const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + exp2 * M_LN2;
}

} // namespace partrand
