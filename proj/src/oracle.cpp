#include "partrand/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "partrand/errors.hpp"

namespace partrand {

namespace {

void rec(long remaining, long max_part, Partition& current,
         const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(current);
        return;
    }
    for (long j = std::min(max_part, remaining); j >= 1; --j) {
        current.mult[j] += 1;
        current.n += j;
        rec(remaining - j, j, current, visit);
        current.n -= j;
        if (--current.mult[j] == 0) current.mult.erase(j);
    }
}

} // namespace

void enumerate_partitions(long n, const std::function<void(const Partition&)>& visit, long cap) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: need n >= 0");
    if (n > cap)
        throw resource_limit_error("enumeration cap " + std::to_string(cap) +
                                   " exceeded by n=" + std::to_string(n));
    Partition current;
    rec(n, n, current, visit);
}

std::vector<Partition> all_partitions(long n, long cap) {
    std::vector<Partition> out;
    enumerate_partitions(n, [&](const Partition& p) { out.push_back(p); }, cap);
    return out;
}

mpq_class exact_joint_proc1(long n, double d, double s, long cap) {
    mpq_class acc = 0;
    long count = 0;
    enumerate_partitions(
        n,
        [&](const Partition& p) {
            ++count;
            acc += mpq_class(stat_Zds(p, d, s), stat_Zn(p));
        },
        cap);
    acc /= count;
    acc.canonicalize();
    return acc;
}

mpq_class exact_joint_proc2(long n, long m, double s, long cap) {
    mpq_class acc = 0;
    long count = 0;
    enumerate_partitions(
        n,
        [&](const Partition& p) {
            ++count;
            acc += mpq_class(stat_Yms(p, m, s), stat_Yn(p));
        },
        cap);
    acc /= count;
    acc.canonicalize();
    return acc;
}

mpq_class exact_joint_proc3(const CountTable& table, long n, long m, double s) {
    table.require(n);
    if (n < 1 || m < 1) throw std::invalid_argument("exact_joint_proc3: need n,m >= 1");
    const long si = s < 1 ? 0 : std::min(static_cast<long>(std::floor(s)), n);
    mpz_class num = 0;
    for (long j = 1; j <= si; ++j) num += j * (table.p(n - j * m) - table.p(n - j * (m + 1)));
    mpq_class q(m * num, n * table.p(n));
    q.canonicalize();
    return q;
}

mpq_class exact_joint_proc3_enumerated(long n, long m, double s, long cap) {
    mpq_class acc = 0;
    long count = 0;
    enumerate_partitions(
        n,
        [&](const Partition& p) {
            ++count;
            long weighted = 0;
            for (const auto& [j, a] : p.mult)
                if (static_cast<double>(j) <= s && a == m) weighted += j;
            acc += mpq_class(m * weighted, n);
        },
        cap);
    acc /= count;
    acc.canonicalize();
    return acc;
}

JointTable build_joint_table(const CountTable& table, long n, int procedure, long max_first,
                             long max_s, long cap) {
    if (procedure < 1 || procedure > 3) throw std::invalid_argument("procedure must be 1, 2 or 3");
    if (max_first < 1 || max_s < 1) throw std::invalid_argument("joint table grid must be nonempty");
    JointTable jt;
    jt.n = n;
    jt.procedure = procedure;
    jt.max_first = max_first;
    jt.max_s = max_s;
    jt.entries.assign(static_cast<std::size_t>(max_first * max_s), mpq_class(0));

    auto cell = [&](long first, long sz) -> mpq_class& {
        return jt.entries[static_cast<std::size_t>((first - 1) * max_s + (sz - 1))];
    };

    if (procedure == 3) {
        for (long m = 1; m <= max_first; ++m)
            for (long s = 1; s <= max_s; ++s) cell(m, s) = exact_joint_proc3(table, n, m, s);
        return jt;
    }

    // Accumulate per-partition point masses at (multiplicity, size), then
    // prefix-sum into the cumulative form.
    long count = 0;
    enumerate_partitions(
        n,
        [&](const Partition& p) {
            ++count;
            if (procedure == 1) {
                const long z = stat_Zn(p);
                for (const auto& [j, a] : p.mult)
                    if (a <= max_first && j <= max_s) cell(a, j) += mpq_class(a, z);
            } else {
                const long y = stat_Yn(p);
                for (const auto& [j, a] : p.mult)
                    if (a <= max_first && j <= max_s) cell(a, j) += mpq_class(1, y);
            }
        },
        cap);
    for (auto& e : jt.entries) {
        e /= count;
        e.canonicalize();
    }
    // Cumulative in s always; also in d for procedure 1.
    for (long f = 1; f <= max_first; ++f)
        for (long s = 2; s <= max_s; ++s) cell(f, s) += cell(f, s - 1);
    if (procedure == 1)
        for (long f = 2; f <= max_first; ++f)
            for (long s = 1; s <= max_s; ++s) cell(f, s) += cell(f - 1, s);
    return jt;
}

} // namespace partrand
