#pragma once

#include <cstdint>
#include <cmath>
#include <random>

namespace gmclab {

// SplitMix64, used to whiten seeds and to derive per-replicate substreams.
inline uint64_t splitmix64(uint64_t& x) {
    uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Substream seed for replicate `index` of a master seed. Replicates get
// statistically independent streams regardless of how work is partitioned
// across threads.
inline uint64_t substream_seed(uint64_t master_seed, uint64_t index) {
    uint64_t x = master_seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    splitmix64(x);
    return splitmix64(x);
}

class RngStream {
public:
    explicit RngStream(uint64_t seed) : eng_(seed) {}

    double uniform() { return unif_(eng_); }           // (0,1)
    double normal() { return normal_(eng_); }          // N(0,1)
    double exponential(double rate) { return -std::log1p(-unif_(eng_)) / rate; }
    uint64_t bits() { return eng_(); }

private:
    std::mt19937_64 eng_;
    std::uniform_real_distribution<double> unif_{std::nextafter(0.0, 1.0), 1.0};
    std::normal_distribution<double> normal_{0.0, 1.0};
};

inline RngStream substream(uint64_t master_seed, uint64_t index) {
    return RngStream(substream_seed(master_seed, index));
}

} // namespace gmclab
