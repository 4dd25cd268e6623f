#pragma once

#include <map>
#include <stdexcept>

namespace partrand {

// A partition of n stored as a sparse multiplicity map j -> alpha_j
// (positive entries only). Invariant: sum j*alpha_j == n.
struct Partition {
    long n = 0;
    std::map<long, long> mult;

    void add_part(long size, long count = 1) {
        if (size < 1 || count < 1) throw std::invalid_argument("add_part: need size,count >= 1");
        mult[size] += count;
        n += size * count;
    }

    long multiplicity(long size) const {
        auto it = mult.find(size);
        return it == mult.end() ? 0 : it->second;
    }

    bool valid() const {
        long sum = 0;
        for (const auto& [j, a] : mult) {
            if (j < 1 || j > n || a < 1) return false;
            sum += j * a;
        }
        return sum == n;
    }

    bool operator==(const Partition& o) const { return n == o.n && mult == o.mult; }
    bool operator<(const Partition& o) const { return n != o.n ? n < o.n : mult < o.mult; }
};

// Total number of parts.
long stat_Zn(const Partition& p);

// Number of distinct part sizes.
long stat_Yn(const Partition& p);

// Number of parts of size <= s with multiplicity <= d, with multiplicity.
long stat_Zds(const Partition& p, double d, double s);

// Number of distinct sizes <= s with multiplicity exactly m.
long stat_Yms(const Partition& p, long m, double s);

// Outcome of one part-sampling experiment.
struct PartDraw {
    int procedure = 0;  // 1, 2 or 3
    long mu = 0;        // multiplicity of the chosen size
    long sigma = 0;     // chosen size
};

} // namespace partrand
