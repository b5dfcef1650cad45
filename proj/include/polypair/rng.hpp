#ifndef POLYPAIR_RNG_HPP
#define POLYPAIR_RNG_HPP

#include <cmath>
#include <cstdint>

namespace polypair {

/// Deterministic counter-derived random stream (xoshiro256++ core). Streams
/// are keyed by (seed, degree, trial_index) so every trial draws from its own
/// substream regardless of execution order or thread count.
class RngStream {
  public:
    explicit RngStream(std::uint64_t key) { seed_state(key); }

    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        return splitmix(a ^ (0x9E3779B97F4A7C15ULL + (b << 6) + (b >> 2)));
    }

    static RngStream for_trial(std::uint64_t seed, std::uint64_t degree, std::uint64_t trial_index) {
        return RngStream(mix(mix(seed, degree), trial_index));
    }

    std::uint64_t next_u64() {
        std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in the open interval (0, 1).
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform angle in [0, 2*pi).
    double uniform_angle() {
        return 2.0 * M_PI * (static_cast<double>(next_u64() >> 11) * 0x1.0p-53);
    }

  private:
    std::uint64_t s_[4];

    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix(std::uint64_t& x) {
        x += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t splitmix(std::uint64_t x) {
        std::uint64_t y = x;
        return splitmix(y);
    }

    void seed_state(std::uint64_t key) {
        std::uint64_t x = key;
        for (auto& s : s_) s = splitmix(x);
        // a zero state would be a fixed point of the generator
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }
};

}  // namespace polypair

#endif
