#pragma once

#include <string>

#include <gmpxx.h>

#include "partrand/counting.hpp"

namespace partrand {

// Exact finite-n expectation of a part statistic, optionally paired with
// its asymptotic approximation.
struct ExpectationReport {
    long n = 0;
    std::string quantity;  // "zn", "yn", "zds", "yms"
    double d = 0, s = 0;
    long m = 0;
    mpq_class exact;
    double asymptotic = 0;  // filled by the asymptotics module when requested
};

// E(Z_n): expected total number of parts; sum_{jm<=n} p(n-jm)/p(n).
mpq_class expect_Zn(const CountTable& table, long n);

// E(Y_n): expected number of distinct parts; sum_{k<=n} p(n-k)/p(n).
mpq_class expect_Yn(const CountTable& table, long n);

// E(Z_{d,s}): expected number of parts of size <= s with multiplicity <= d,
// counted with multiplicity. Real d, s are reduced via their integer parts.
mpq_class expect_Zds(const CountTable& table, long n, double d, double s);

// E(Y_{m,s}): expected number of distinct sizes <= s with multiplicity
// exactly m: (1/p(n)) sum_{k<=[s]} (p(n-mk) - p(n-(m+1)k)).
mpq_class expect_Yms(const CountTable& table, long n, long m, double s);

} // namespace partrand
