#include "partrand/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace partrand {

namespace {

// Lower-series and continued-fraction evaluations of the regularized
// incomplete gamma functions.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double gamma_q(double a, double x) {
    if (a <= 0 || x < 0) throw std::invalid_argument("gamma_q: need a > 0, x >= 0");
    if (x == 0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi_square_pvalue(double stat, double df) {
    return gamma_q(0.5 * df, 0.5 * stat);
}

double chi_square_stat(const std::vector<std::uint64_t>& observed,
                       const std::vector<double>& expected_probs) {
    if (observed.size() != expected_probs.size())
        throw std::invalid_argument("chi_square_stat: size mismatch");
    std::uint64_t total = 0;
    for (auto o : observed) total += o;
    double stat = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double e = expected_probs[i] * static_cast<double>(total);
        if (e <= 0) throw std::invalid_argument("chi_square_stat: nonpositive expected count");
        const double diff = static_cast<double>(observed[i]) - e;
        stat += diff * diff / e;
    }
    return stat;
}

} // namespace partrand
