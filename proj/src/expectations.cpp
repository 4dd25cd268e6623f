#include "partrand/expectations.hpp"

#include <cmath>
#include <stdexcept>

namespace partrand {

namespace {

long floor_clamped(double x, long hi) {
    if (x < 0) return 0;
    const double f = std::floor(x);
    if (f >= static_cast<double>(hi)) return hi;
    return static_cast<long>(f);
}

} // namespace

mpq_class expect_Zn(const CountTable& table, long n) {
    table.require(n);
    if (n < 1) throw std::invalid_argument("expect_Zn: need n >= 1");
    mpz_class num = 0;
    for (long j = 1; j <= n; ++j)
        for (long m = 1; j * m <= n; ++m) num += table.p(n - j * m);
    mpq_class q(num, table.p(n));
    q.canonicalize();
    return q;
}

mpq_class expect_Yn(const CountTable& table, long n) {
    table.require(n);
    if (n < 1) throw std::invalid_argument("expect_Yn: need n >= 1");
    mpz_class num = 0;
    for (long k = 1; k <= n; ++k) num += table.p(n - k);
    mpq_class q(num, table.p(n));
    q.canonicalize();
    return q;
}

mpq_class expect_Zds(const CountTable& table, long n, double d, double s) {
    table.require(n);
    if (n < 1 || d < 1 || s < 1) throw std::invalid_argument("expect_Zds: need n,d,s >= 1");
    const long di = floor_clamped(d, n);
    const long si = floor_clamped(s, n);
    // sum_j sum_{m<=d} m Pr(alpha_j = m), with
    // sum_m m (p(n-jm) - p(n-j(m+1))) telescoped directly.
    mpz_class num = 0;
    for (long j = 1; j <= si; ++j)
        for (long m = 1; m <= di && j * m <= n; ++m)
            num += m * (table.p(n - j * m) - table.p(n - j * (m + 1)));
    mpq_class q(num, table.p(n));
    q.canonicalize();
    return q;
}

mpq_class expect_Yms(const CountTable& table, long n, long m, double s) {
    table.require(n);
    if (n < 1 || m < 1 || s < 1) throw std::invalid_argument("expect_Yms: need n,m,s >= 1");
    const long si = floor_clamped(s, n);
    mpz_class num = 0;
    for (long k = 1; k <= si && m * k <= n; ++k)
        num += table.p(n - m * k) - table.p(n - (m + 1) * k);
    mpq_class q(num, table.p(n));
    q.canonicalize();
    return q;
}

} // namespace partrand
