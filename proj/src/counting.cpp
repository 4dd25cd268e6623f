#include "partrand/counting.hpp"

#include <stdexcept>
#include <string>

#include "partrand/errors.hpp"

namespace partrand {

const mpz_class CountTable::zero_ = 0;

const mpz_class& CountTable::p(long k) const {
    if (k < 0) return zero_;
    if (static_cast<std::size_t>(k) >= values_.size())
        throw std::out_of_range("count table limit " + std::to_string(limit()) +
                                " too small for p(" + std::to_string(k) + ")");
    return values_[static_cast<std::size_t>(k)];
}

void CountTable::require(long n) const {
    if (n < 0 || static_cast<std::size_t>(n) > limit())
        throw std::out_of_range("count table limit " + std::to_string(limit()) +
                                " too small for n=" + std::to_string(n));
}

CountTable CountTable::build(std::size_t limit, std::size_t cap) {
    if (limit > cap)
        throw resource_limit_error("count table limit " + std::to_string(limit) +
                                   " exceeds cap " + std::to_string(cap));
    std::vector<mpz_class> v(limit + 1);
    v[0] = 1;
    for (std::size_t n = 1; n <= limit; ++n) {
        mpz_class acc = 0;
        for (long k = 1;; ++k) {
            const long g1 = k * (3 * k - 1) / 2;
            const long g2 = k * (3 * k + 1) / 2;
            if (g1 > static_cast<long>(n)) break;
            const bool plus = (k % 2 == 1);
            const mpz_class& a = v[n - static_cast<std::size_t>(g1)];
            if (plus)
                acc += a;
            else
                acc -= a;
            if (g2 <= static_cast<long>(n)) {
                const mpz_class& b = v[n - static_cast<std::size_t>(g2)];
                if (plus)
                    acc += b;
                else
                    acc -= b;
            }
        }
        v[n] = acc;
    }
    return CountTable(std::move(v));
}

CountTable build_count_table(std::size_t limit, std::size_t cap) {
    return CountTable::build(limit, cap);
}

mpq_class prob_multiplicity(const CountTable& table, long n, long j, long m) {
    table.require(n);
    if (n < 1 || j < 1 || m < 0) throw std::invalid_argument("prob_multiplicity: need n>=1, j>=1, m>=0");
    mpz_class num = table.p(n - j * m) - table.p(n - j * (m + 1));
    mpq_class q(num, table.p(n));
    q.canonicalize();
    return q;
}

mpz_class count_no_part_k(const CountTable& table, long n, long k) {
    table.require(n);
    if (k < 1) throw std::invalid_argument("count_no_part_k: need k>=1");
    return table.p(n) - table.p(n - k);
}

} // namespace partrand
