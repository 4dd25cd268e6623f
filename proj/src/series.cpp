#include "partrand/series.hpp"

#include <stdexcept>

#include "partrand/counting.hpp"

namespace partrand {

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.cap() != cap()) throw std::invalid_argument("series cap mismatch");
    for (std::size_t i = 0; i <= cap(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (o.cap() != cap()) throw std::invalid_argument("series cap mismatch");
    for (std::size_t i = 0; i <= cap(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (o.cap() != cap()) throw std::invalid_argument("series cap mismatch");
    TruncatedSeries r(cap());
    for (std::size_t i = 0; i <= cap(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= cap(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

void TruncatedSeries::mul_one_minus_power(std::size_t k) {
    if (k == 0 || k > cap()) return;
    for (std::size_t i = cap(); i >= k; --i) coeffs_[i] -= coeffs_[i - k];
}

void TruncatedSeries::div_one_minus_power(std::size_t k) {
    if (k == 0 || k > cap()) return;
    for (std::size_t i = k; i <= cap(); ++i) coeffs_[i] += coeffs_[i - k];
}

void TruncatedSeries::mul_euler_product() {
    for (std::size_t k = 1; k <= cap(); ++k) div_one_minus_power(k);
}

TruncatedSeries euler_product(std::size_t cap) {
    TruncatedSeries s(cap);
    s[0] = 1;
    s.mul_euler_product();
    return s;
}

mpz_class lemma1_coefficient(std::size_t cap, long n, long d, long s) {
    if (n < 0 || static_cast<std::size_t>(n) > cap)
        throw std::invalid_argument("lemma1_coefficient: need 0 <= n <= cap");
    if (d < 1 || s < 1) throw std::invalid_argument("lemma1_coefficient: need d,s >= 1");
    TruncatedSeries acc(cap);
    // sum_{j<=s} x^j/(1-x^j): 1 at every positive multiple of j.
    for (long j = 1; j <= s && static_cast<std::size_t>(j) <= cap; ++j)
        for (std::size_t i = static_cast<std::size_t>(j); i <= cap; i += static_cast<std::size_t>(j))
            acc[i] += 1;
    // -(d+1) sum_{j<=s} x^{j(d+1)}/(1-x^{j(d+1)}).
    for (long j = 1; j <= s; ++j) {
        const long period = j * (d + 1);
        if (period <= 0 || static_cast<std::size_t>(period) > cap) break;
        for (std::size_t i = static_cast<std::size_t>(period); i <= cap;
             i += static_cast<std::size_t>(period))
            acc[i] -= d + 1;
    }
    // prod_{j<=s} (1-x^{j(d+1)}).
    for (long j = 1; j <= s; ++j) {
        const long period = j * (d + 1);
        if (period <= 0 || static_cast<std::size_t>(period) > cap) break;
        acc.mul_one_minus_power(static_cast<std::size_t>(period));
    }
    acc.mul_euler_product();
    return acc[static_cast<std::size_t>(n)];
}

mpz_class lemma2_coefficient(std::size_t cap, long n, long m, long s) {
    if (n < 0 || static_cast<std::size_t>(n) > cap)
        throw std::invalid_argument("lemma2_coefficient: need 0 <= n <= cap");
    if (m < 1 || s < 1) throw std::invalid_argument("lemma2_coefficient: need m,s >= 1");
    TruncatedSeries acc(cap);
    for (long k = 1; k <= s; ++k) {
        if (static_cast<std::size_t>(m) * k <= cap) acc[static_cast<std::size_t>(m * k)] += 1;
        if (static_cast<std::size_t>(m + 1) * k <= cap) acc[static_cast<std::size_t>((m + 1) * k)] -= 1;
    }
    acc.mul_euler_product();
    return acc[static_cast<std::size_t>(n)];
}

mpz_class lemma2_direct(const CountTable& table, long n, long m, long s) {
    table.require(n);
    mpz_class acc = 0;
    for (long k = 1; k <= s; ++k) acc += table.p(n - m * k) - table.p(n - (m + 1) * k);
    return acc;
}

} // namespace partrand
