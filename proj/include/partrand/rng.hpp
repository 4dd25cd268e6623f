#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace partrand {

// Deterministic seeded pseudo-random stream. Identical seed gives an
// identical draw sequence; disjoint streams for replica r come from
// derive(r), which mixes the replica index into the base seed.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    RngStream derive(std::uint64_t replica) const { return RngStream(seed_ ^ replica); }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0,1).
    double uniform() { return std::generate_canonical<double, 53>(engine_); }

    // Uniform in (0,1]; safe argument for log().
    double uniform_pos() { return 1.0 - uniform(); }

    // Uniform integer in [0, bound), bound > 0.
    std::uint64_t below_u64(std::uint64_t bound) {
        std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
        return dist(engine_);
    }

    // Uniform big integer in [0, bound), bound > 0. Draws bit-length-matched
    // candidates and rejects those >= bound.
    mpz_class below(const mpz_class& bound) {
        const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
        const std::size_t words = (bits + 63) / 64;
        const unsigned top_bits = static_cast<unsigned>(bits - (words - 1) * 64);
        const std::uint64_t top_mask =
            top_bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
        mpz_class r;
        for (;;) {
            r = 0;
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t chunk = next_u64();
                if (w == 0) chunk &= top_mask;
                mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 64);
                mpz_class c;
                mpz_import(c.get_mpz_t(), 1, 1, sizeof(chunk), 0, 0, &chunk);
                r += c;
            }
            if (r < bound) return r;
        }
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace partrand
