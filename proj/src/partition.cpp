#include "partrand/partition.hpp"

#include <cmath>

namespace partrand {

long stat_Zn(const Partition& p) {
    long z = 0;
    for (const auto& [j, a] : p.mult) {
        (void)j;
        z += a;
    }
    return z;
}

long stat_Yn(const Partition& p) { return static_cast<long>(p.mult.size()); }

long stat_Zds(const Partition& p, double d, double s) {
    long z = 0;
    for (const auto& [j, a] : p.mult)
        if (static_cast<double>(j) <= s && static_cast<double>(a) <= d) z += a;
    return z;
}

long stat_Yms(const Partition& p, long m, double s) {
    long y = 0;
    for (const auto& [j, a] : p.mult)
        if (static_cast<double>(j) <= s && a == m) ++y;
    return y;
}

} // namespace partrand
