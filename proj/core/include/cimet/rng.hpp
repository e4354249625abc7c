#pragma once

// SplitMix64: the named, seedable, splittable generator used for every
// randomized sweep. Fixed here (rather than std::mt19937 + distributions)
// so that seeded runs produce identical streams on every platform.

#include <cstdint>
#include <string_view>

namespace cimet {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform double in [0,1) with 53 random bits
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Derive an independent child stream named by a label; deterministic in
    // (parent seed, label). The parent's own stream is not advanced.
    SplitMix64 split(std::string_view label) const {
        std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a over the label
        for (unsigned char c : label) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        SplitMix64 child(state_ ^ h);
        child.next(); // decorrelate from the raw xor
        return child;
    }

  private:
    std::uint64_t state_;
};

} // namespace cimet
