#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace ranktest::rng {

/// splitmix64 step; used for seeding and for deriving sub-stream keys.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Hash-combines a seed with stream indices so that independent tasks
/// (permutation iterations, trials, rankings) get decorrelated streams
/// whose content does not depend on scheduling order.
inline std::uint64_t derive(std::uint64_t seed, std::uint64_t a) {
    std::uint64_t s = seed ^ 0x6a09e667f3bcc909ULL;
    (void)splitmix64(s);
    s ^= a + 0x9e3779b97f4a7c15ULL;
    return splitmix64(s);
}

inline std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return derive(derive(seed, a), b);
}

inline std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                            std::uint64_t c) {
    return derive(derive(seed, a, b), c);
}

/**
 * Seeded pseudorandom stream (xoshiro256++) with the integer and
 * distribution samplers the library needs. Self-contained on purpose:
 * std::* distributions are implementation-defined, and reports must be
 * byte-identical for a given seed independent of platform, standard
 * library, and thread count.
 */
class Stream {
public:
    explicit Stream(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Unbiased uniform integer in [0, bound) via rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("rng: bound must be positive");
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    bool bernoulli(double p) { return next_double() < p; }

    long long uniform_int(long long lo, long long hi) {
        if (hi < lo) throw std::invalid_argument("rng: empty integer range");
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    long long binomial(long long n, double p) {
        if (n < 0 || p < 0.0 || p > 1.0)
            throw std::invalid_argument("rng: bad binomial parameters");
        long long hits = 0;
        for (long long i = 0; i < n; ++i) hits += bernoulli(p);
        return hits;
    }

    long long poisson(double lambda) {
        if (lambda < 0.0) throw std::invalid_argument("rng: negative Poisson rate");
        // Split large rates so Knuth's product method never underflows.
        long long total = 0;
        while (lambda > 16.0) {
            total += poisson_knuth(16.0);
            lambda -= 16.0;
        }
        return total + poisson_knuth(lambda);
    }

    /// Geometric over {1, 2, ...}: number of trials until the first success.
    long long geometric_trials(double a) {
        if (a <= 0.0 || a > 1.0) throw std::invalid_argument("rng: bad geometric parameter");
        if (a == 1.0) return 1;
        const double u = next_double();  // 1-u in (0,1]
        const double z = std::floor(std::log1p(-u) / std::log1p(-a));
        return 1 + static_cast<long long>(z);
    }

    /// Standard normal via Marsaglia polar, spare cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_double() - 1.0;
            v = 2.0 * next_double() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

    /**
     * Number of successes when drawing `draws` items without replacement
     * from a population of `total` containing `successes` marked items.
     * Exact urn walk in integer arithmetic; roles of draws/successes are
     * exchangeable, so the walk runs over the smaller of the two.
     */
    long long hypergeometric(long long total, long long successes, long long draws) {
        if (total < 0 || successes < 0 || draws < 0 || successes > total || draws > total)
            throw std::invalid_argument("rng: bad hypergeometric parameters");
        long long n = draws, marked = successes;
        if (marked < n) std::swap(n, marked);
        long long remaining = total, left = marked, hits = 0;
        for (long long i = 0; i < n; ++i) {
            if (below(static_cast<std::uint64_t>(remaining)) <
                static_cast<std::uint64_t>(left)) {
                ++hits;
                --left;
            }
            --remaining;
        }
        return hits;
    }

    /// Fisher-Yates shuffle.
    template <typename It>
    void shuffle(It first, It last) {
        const auto n = static_cast<std::uint64_t>(last - first);
        for (std::uint64_t i = n; i > 1; --i) {
            const std::uint64_t j = below(i);
            using std::swap;
            swap(first[i - 1], first[j]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    long long poisson_knuth(double lambda) {
        const double limit = std::exp(-lambda);
        long long count = 0;
        double prod = next_double();
        while (prod > limit) {
            ++count;
            prod *= next_double();
        }
        return count;
    }

    std::uint64_t state_[4] = {};
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace ranktest::rng
