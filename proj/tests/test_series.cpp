#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "partrand/counting.hpp"
#include "partrand/oracle.hpp"
#include "partrand/rng.hpp"
#include "partrand/series.hpp"

using namespace partrand;

TEST_CASE("euler product coefficients are partition counts") {
    TruncatedSeries s = euler_product(5);
    const long expected[] = {1, 1, 2, 3, 5, 7};
    for (std::size_t i = 0; i <= 5; ++i) CHECK(s[i] == expected[i]);

    TruncatedSeries trivial = euler_product(0);
    CHECK(trivial[0] == 1);

    CountTable t = build_count_table(200);
    TruncatedSeries full = euler_product(200);
    for (long n = 0; n <= 200; ++n) CHECK(full[static_cast<std::size_t>(n)] == t.p(n));
}

TEST_CASE("multiplication is commutative and associative on retained degrees") {
    RngStream rng(123);
    for (int trial = 0; trial < 20; ++trial) {
        TruncatedSeries a(12), b(12), c(12);
        for (std::size_t i = 0; i <= 12; ++i) {
            a[i] = static_cast<long>(rng.below_u64(21)) - 10;
            b[i] = static_cast<long>(rng.below_u64(21)) - 10;
            c[i] = static_cast<long>(rng.below_u64(21)) - 10;
        }
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("geometric-series division inverts multiplication by 1-x^k") {
    TruncatedSeries s = euler_product(30);
    TruncatedSeries copy = s;
    copy.mul_one_minus_power(7);
    copy.div_one_minus_power(7);
    CHECK(copy == s);
}

TEST_CASE("lemma1 printed identity generates the hard-constrained ensemble") {
    CHECK(lemma1_coefficient(4, 4, 1, 4) == 3);
    CHECK(lemma1_coefficient(4, 4, 4, 4) == 12);
    CHECK(lemma1_coefficient(1, 1, 1, 1) == 1);

    // Sum of small-part counts over partitions whose parts <= s all have
    // multiplicity <= d.
    auto constrained = [](long n, long d, long s) {
        mpz_class total = 0;
        enumerate_partitions(n, [&](const Partition& p) {
            for (const auto& [j, a] : p.mult)
                if (j <= s && a > d) return;
            for (const auto& [j, a] : p.mult)
                if (j <= s) total += a;
        });
        return total;
    };
    for (long n = 1; n <= 20; ++n)
        for (long d = 1; d <= 4; ++d)
            for (long s : {1L, 2L, n / 2, n})
                if (s >= 1)
                    CHECK(lemma1_coefficient(static_cast<std::size_t>(n), n, d, s) ==
                          constrained(n, d, s));
}

TEST_CASE("lemma2 coefficient equals the direct count formula and enumeration") {
    CHECK(lemma2_coefficient(4, 4, 1, 4) == 4);
    CHECK(lemma2_coefficient(4, 4, 5, 4) == 0);
    CHECK(lemma2_coefficient(4, 4, 2, 4) == 2);

    CountTable t = build_count_table(30);
    for (long n = 1; n <= 25; ++n)
        for (long m = 1; m <= 5; ++m)
            for (long s : {1L, n / 2, n}) {
                if (s < 1) continue;
                const mpz_class coeff = lemma2_coefficient(static_cast<std::size_t>(n), n, m, s);
                CHECK(coeff == lemma2_direct(t, n, m, s));
                mpz_class enumerated = 0;
                enumerate_partitions(
                    n, [&](const Partition& p) { enumerated += stat_Yms(p, m, s); });
                CHECK(coeff == enumerated);
            }
}
