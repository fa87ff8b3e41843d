#pragma once

#include <cmath>
#include <cstdint>

namespace latsim {

inline std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Small deterministic generator. Streams are keyed by (seed, id0, id1, id2),
// so Monte-Carlo trials can be assigned to threads in any order and still
// produce identical results for a fixed seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) { warmup(); }

    Rng(std::uint64_t seed, std::uint64_t id0, std::uint64_t id1 = 0, std::uint64_t id2 = 0) {
        state_ = seed;
        state_ = splitmix64(state_) ^ (id0 * 0x9e3779b97f4a7c15ULL);
        state_ = splitmix64(state_) ^ (id1 * 0xc2b2ae3d27d4eb4fULL);
        state_ = splitmix64(state_) ^ (id2 * 0x165667b19e3779f9ULL);
        warmup();
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform integer in [lo, hi)
    long long uniform_int(long long lo, long long hi) {
        return lo + static_cast<long long>(next_u64() % static_cast<std::uint64_t>(hi - lo));
    }

    // standard normal, Box-Muller (libm-only so results do not depend on the
    // C++ runtime's distribution implementation)
    double gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.2831853071795864769 * uniform01();
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    void warmup() {
        (void)splitmix64(state_);
        (void)splitmix64(state_);
    }

    std::uint64_t state_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// floor division (quotient rounded toward -infinity)
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Euclidean remainder, in [0, b) for b > 0
inline long long euclid_mod(long long a, long long b) {
    long long r = a % b;
    if (r < 0) r += b;
    return r;
}

// nearest integer with ties rounded up: floor(x + 1/2)
inline long long round_half_up(double x) {
    return static_cast<long long>(std::floor(x + 0.5));
}

// round_half_up(num / den) computed exactly in integers, den > 0
inline long long round_half_up_ratio(long long num, long long den) {
    return floor_div(2 * num + den, 2 * den);
}

} // namespace latsim
