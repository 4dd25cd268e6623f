#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace partrand {

// Exact values p(0..limit) of the partition function.
//
// Immutable after construction; safe to share across concurrent readers.
class CountTable {
public:
    std::size_t limit() const { return values_.size() - 1; }

    // p(k), with p(k) = 0 for k < 0 by convention.
    const mpz_class& p(long k) const;

    // Throws std::out_of_range if n exceeds the table limit.
    void require(long n) const;

    static CountTable build(std::size_t limit, std::size_t cap = 1000000);

private:
    explicit CountTable(std::vector<mpz_class> values) : values_(std::move(values)) {}

    std::vector<mpz_class> values_;
    static const mpz_class zero_;
};

// Euler's pentagonal-number recurrence; O(N^{3/2}) big-integer additions.
// Rejects limits above `cap` (resource_limit_error).
CountTable build_count_table(std::size_t limit, std::size_t cap = 1000000);

// Pr(alpha_j = m) for a uniform partition of n, as an exact reduced
// rational: (p(n-jm) - p(n-j(m+1))) / p(n). For m = 0 this is
// 1 - p(n-j)/p(n).
mpq_class prob_multiplicity(const CountTable& table, long n, long j, long m);

// Number of partitions of n with no part equal to k: p(n) - p(n-k).
mpz_class count_no_part_k(const CountTable& table, long n, long k);

} // namespace partrand
