#pragma once

#include <functional>
#include <vector>

#include <gmpxx.h>

#include "partrand/counting.hpp"
#include "partrand/partition.hpp"

namespace partrand {

inline constexpr long kDefaultEnumerationCap = 45;

// Visit every partition of n exactly once (parts in decreasing order of
// construction). Throws resource_limit_error beyond the cap.
void enumerate_partitions(long n, const std::function<void(const Partition&)>& visit,
                          long cap = kDefaultEnumerationCap);

// All p(n) partitions of n, in a deterministic order.
std::vector<Partition> all_partitions(long n, long cap = kDefaultEnumerationCap);

// Exact joint probabilities of (multiplicity, size) of the sampled part.
// Procedure 1: P(mu <= d, sigma <= s) = E(Z_{d,s}/Z_n).
mpq_class exact_joint_proc1(long n, double d, double s, long cap = kDefaultEnumerationCap);

// Procedure 2: P(mu = m, sigma <= s) = E(Y_{m,s}/Y_n).
mpq_class exact_joint_proc2(long n, long m, double s, long cap = kDefaultEnumerationCap);

// Procedure 3: P(mu = m, sigma <= s) = (m/n) sum_{j<=s} j Pr(alpha_j = m),
// from the count identity.
mpq_class exact_joint_proc3(const CountTable& table, long n, long m, double s);

// Procedure 3 by direct enumeration of the defining product measure;
// independent route, must equal exact_joint_proc3.
mpq_class exact_joint_proc3_enumerated(long n, long m, double s,
                                       long cap = kDefaultEnumerationCap);

// Dense grid of exact joint values. For procedures 2 and 3 rows are
// (m, s) -> P(mu = m, sigma <= s); for procedure 1, (d, s) -> P(mu <= d,
// sigma <= s).
struct JointTable {
    long n = 0;
    int procedure = 0;
    long max_first = 0;  // m (or d) runs 1..max_first
    long max_s = 0;      // s runs 1..max_s
    std::vector<mpq_class> entries;  // row-major, [(first-1)*max_s + (s-1)]

    const mpq_class& at(long first, long s) const {
        return entries[static_cast<std::size_t>((first - 1) * max_s + (s - 1))];
    }
};

JointTable build_joint_table(const CountTable& table, long n, int procedure,
                             long max_first, long max_s,
                             long cap = kDefaultEnumerationCap);

} // namespace partrand
