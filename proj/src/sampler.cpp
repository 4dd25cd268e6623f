#include "partrand/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "partrand/errors.hpp"

namespace partrand {

ExactPartitionSampler::ExactPartitionSampler(long n) : n_(n) {
    if (n < 1) throw std::invalid_argument("ExactPartitionSampler: need n >= 1");
    table_.resize(static_cast<std::size_t>(n) + 1);
    table_[0] = {mpz_class(1)};
    for (long m = 1; m <= n; ++m) {
        auto& row = table_[static_cast<std::size_t>(m)];
        row.resize(static_cast<std::size_t>(m) + 1);
        row[0] = 0;
        for (long k = 1; k <= m; ++k)
            row[static_cast<std::size_t>(k)] =
                row[static_cast<std::size_t>(k - 1)] + bounded(m - k, k);
    }
}

const mpz_class& ExactPartitionSampler::bounded(long m, long k) const {
    const auto& row = table_[static_cast<std::size_t>(m)];
    const long kk = std::min(k, m);
    return row[static_cast<std::size_t>(kk)];
}

const mpz_class& ExactPartitionSampler::total() const { return bounded(n_, n_); }

Partition ExactPartitionSampler::sample(RngStream& rng) const {
    Partition p;
    long m = n_;
    long k = n_;
    while (m > 0) {
        // Largest part is exactly j with weight P(m-j, <=j).
        mpz_class target = rng.below(bounded(m, k));
        long j = 1;
        for (;; ++j) {
            const mpz_class& w = bounded(m - j, j);
            if (target < w) break;
            target -= w;
        }
        p.add_part(j);
        m -= j;
        k = j;
    }
    return p;
}

FristedtDraw sample_uniform_fristedt(long n, RngStream& rng, std::uint64_t max_trials) {
    if (n < 1) throw std::invalid_argument("sample_uniform_fristedt: need n >= 1");
    const double c = M_PI / std::sqrt(6.0);
    const double log_q = -c / std::sqrt(static_cast<double>(n));
    // Direct geometric inversion while Pr(gamma_j > 0) = q^j is
    // non-negligible; adaptive thinning over the sparse tail beyond.
    const double tail_threshold = 0.02;
    long direct_max = static_cast<long>(std::floor(std::log(tail_threshold) / log_q));
    direct_max = std::clamp(direct_max, 1L, n);

    for (std::uint64_t trial = 1; trial <= max_trials; ++trial) {
        Partition p;
        long sum = 0;
        bool over = false;
        for (long j = 1; j <= direct_max && !over; ++j) {
            const long g = static_cast<long>(std::floor(std::log(rng.uniform_pos()) / (j * log_q)));
            if (g > 0) {
                p.add_part(j, g);
                sum += j * g;
                if (sum > n) over = true;
            }
        }
        // Tail: indices j with gamma_j > 0 occur independently with
        // probability q^j, decreasing in j. Propose from a dominating
        // geometric with success probability q^{pos+1} and thin with
        // acceptance q^{candidate - pos - 1}.
        long pos = direct_max;
        while (!over && pos < n) {
            const double log_p0 = (pos + 1) * log_q;
            const double p0 = std::exp(log_p0);
            // Next proposal index: pos + 1 + Geometric(p0) failures.
            const long gap =
                static_cast<long>(std::floor(std::log(rng.uniform_pos()) / std::log1p(-p0)));
            const long cand = pos + 1 + gap;
            if (cand > n) break;
            if (rng.uniform() < std::exp((cand - pos - 1) * log_q)) {
                // gamma_cand conditioned positive: 1 + Geometric(1-q^cand).
                const long g =
                    1 + static_cast<long>(std::floor(std::log(rng.uniform_pos()) / (cand * log_q)));
                p.add_part(cand, g);
                sum += cand * g;
                if (sum > n) over = true;
            }
            pos = cand;
        }
        if (!over && sum == n) return FristedtDraw{std::move(p), trial};
    }
    throw resource_limit_error("fristedt sampler: no acceptance within " +
                               std::to_string(max_trials) + " trials at n=" + std::to_string(n));
}

PartDraw draw_part(const Partition& p, int procedure, RngStream& rng) {
    if (p.mult.empty()) throw std::invalid_argument("draw_part: empty partition");
    switch (procedure) {
        case 1: {
            // Uniform among all parts counted with multiplicity.
            long target = static_cast<long>(rng.below_u64(static_cast<std::uint64_t>(stat_Zn(p))));
            for (const auto& [j, a] : p.mult) {
                if (target < a) return PartDraw{1, a, j};
                target -= a;
            }
            break;
        }
        case 2: {
            long target = static_cast<long>(rng.below_u64(static_cast<std::uint64_t>(stat_Yn(p))));
            for (const auto& [j, a] : p.mult) {
                if (target == 0) return PartDraw{2, a, j};
                --target;
            }
            break;
        }
        case 3: {
            // Size j with probability j*alpha_j/n (block area).
            long target = static_cast<long>(rng.below_u64(static_cast<std::uint64_t>(p.n)));
            for (const auto& [j, a] : p.mult) {
                if (target < j * a) return PartDraw{3, a, j};
                target -= j * a;
            }
            break;
        }
        default:
            throw std::invalid_argument("draw_part: procedure must be 1, 2 or 3");
    }
    throw std::logic_error("draw_part: weights did not cover the draw");
}

} // namespace partrand
