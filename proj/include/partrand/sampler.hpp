#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "partrand/partition.hpp"
#include "partrand/rng.hpp"

namespace partrand {

// Exactly uniform sampler over the partitions of n, via the recursive
// "largest part <= k" decomposition. Builds the triangular table
// P(m, k) = #{partitions of m with parts <= k} once; sampling then walks
// down the largest part with count-proportional choices, so every
// partition has probability exactly 1/p(n).
class ExactPartitionSampler {
public:
    explicit ExactPartitionSampler(long n);

    long n() const { return n_; }

    // p(n) = P(n, n).
    const mpz_class& total() const;

    Partition sample(RngStream& rng) const;

private:
    // P(m, parts <= k); k clamped to m.
    const mpz_class& bounded(long m, long k) const;

    long n_;
    std::vector<std::vector<mpz_class>> table_;  // table_[m][k], 0 <= k <= m
};

// One accepted draw from the rejection sampler, with the number of trials
// it took (the measured acceptance rate is trials^{-1} on average).
struct FristedtDraw {
    Partition partition;
    std::uint64_t trials = 0;
};

// Fristedt's conditioning device: independent geometrics gamma_j with
// Pr(gamma_j = k) = (1-q^j) q^{jk}, q = e^{-c/sqrt(n)}, c = pi/sqrt(6),
// accepted when sum j*gamma_j = n. Accepted draws are exactly uniform.
// Throws resource_limit_error when max_trials rejections are exhausted.
FristedtDraw sample_uniform_fristedt(long n, RngStream& rng,
                                     std::uint64_t max_trials = 10000000);

// Part-draw procedures: 1 = uniform among all Z_n parts, 2 = uniform among
// the Y_n distinct sizes, 3 = size j with probability j*alpha_j/n.
PartDraw draw_part(const Partition& p, int procedure, RngStream& rng);

} // namespace partrand
