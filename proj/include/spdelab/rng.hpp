#pragma once

#include <cstdint>
#include <cmath>
#include <utility>

namespace spdelab {

// Counter-based generator (Philox-2x64, 10 rounds). Every draw is a pure
// function of (key, counter), so simulations can assign independent streams
// by (replicate, mode, step) and stay deterministic under any scheduling.
namespace philox {

inline constexpr std::uint64_t kMultiplier = 0xD2B74407B1CE6E93ULL;
inline constexpr std::uint64_t kWeyl = 0x9E3779B97F4A7C15ULL;

struct Block {
    std::uint64_t x0;
    std::uint64_t x1;
};

inline Block encrypt(std::uint64_t key, std::uint64_t c0, std::uint64_t c1) {
    std::uint64_t k = key;
    for (int round = 0; round < 10; ++round) {
        const unsigned __int128 prod =
            static_cast<unsigned __int128>(kMultiplier) * c0;
        const std::uint64_t hi = static_cast<std::uint64_t>(prod >> 64);
        const std::uint64_t lo = static_cast<std::uint64_t>(prod);
        c0 = hi ^ k ^ c1;
        c1 = lo;
        k += kWeyl;
    }
    return {c0, c1};
}

}  // namespace philox

// Maps a 64-bit word to a double in the open interval (0,1).
inline double to_unit_open(std::uint64_t z) {
    return static_cast<double>(z >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

struct UniformPair {
    double u1;
    double u2;
};

// Two independent uniforms in (0,1) for the given key/counter.
inline UniformPair uniform_pair(std::uint64_t key, std::uint64_t c0,
                                std::uint64_t c1) {
    const philox::Block b = philox::encrypt(key, c0, c1);
    return {to_unit_open(b.x0), to_unit_open(b.x1)};
}

inline std::uint64_t pack32(std::uint32_t hi, std::uint32_t lo) {
    return (static_cast<std::uint64_t>(hi) << 32) | lo;
}

// Sequential stream view over the counter space: fixed (key, stream id),
// consecutive draws advance the low counter word.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : key_(seed), c0_(stream_id) {}

    UniformPair next_pair() { return uniform_pair(key_, c0_, counter_++); }

    double uniform01() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const UniformPair p = next_pair();
        spare_ = p.u2;
        have_spare_ = true;
        return p.u1;
    }

    double exponential() { return -std::log(uniform01()); }

  private:
    std::uint64_t key_;
    std::uint64_t c0_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace spdelab
