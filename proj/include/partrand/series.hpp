#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace partrand {

// Degree-capped power series with exact integer coefficients. All
// arithmetic is exact modulo x^{cap+1}.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t cap) : coeffs_(cap + 1) {}

    std::size_t cap() const { return coeffs_.size() - 1; }

    mpz_class& operator[](std::size_t k) { return coeffs_[k]; }
    const mpz_class& operator[](std::size_t k) const { return coeffs_[k]; }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries operator*(const TruncatedSeries& o) const;

    // Multiply in place by (1 - x^k).
    void mul_one_minus_power(std::size_t k);

    // Multiply in place by 1/(1 - x^k), i.e. by the geometric series
    // truncated at cap. Keeps coefficients integral.
    void div_one_minus_power(std::size_t k);

    // Multiply in place by the Euler product prod_{k<=cap} (1-x^k)^{-1}.
    void mul_euler_product();

    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<mpz_class> coeffs_;
};

// Partition generating function up to degree cap; coefficient of x^n is p(n).
TruncatedSeries euler_product(std::size_t cap);

// Coefficient of x^n in the right-hand side of the printed expectation
// identity for Z_{d,s}:
//   g(x) (sum_{j<=s} x^j/(1-x^j) - (d+1) sum_{j<=s} x^{j(d+1)}/(1-x^{j(d+1)}))
//        prod_{j<=s} (1-x^{j(d+1)}).
// This equals the sum, over partitions of n whose parts j <= s all have
// multiplicity <= d, of their number of parts of size <= s. It does NOT
// equal p(n)*E(Z_{d,s}) in general (counterexample n=4, d=1, s=4).
mpz_class lemma1_coefficient(std::size_t cap, long n, long d, long s);

// Coefficient of x^n in g(x) * sum_{k<=s} (x^{mk} - x^{(m+1)k}), which
// equals sum_{k<=s} (p(n-mk) - p(n-(m+1)k)) = p(n)*E(Y_{m,s}).
mpz_class lemma2_coefficient(std::size_t cap, long n, long m, long s);

// The same quantity evaluated directly from a sum of partition counts;
// independent route used for cross-checking.
mpz_class lemma2_direct(const class CountTable& table, long n, long m, long s);

} // namespace partrand
