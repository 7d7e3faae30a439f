#pragma once

#include <cstdint>
#include <vector>

namespace rainbow {

// splitmix64; used directly as a generator and to derive independent
// sub-stream seeds (restart k of a search, row j of an experiment, ...).
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

inline uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    SplitMix64 s(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    s.next();
    return s.next();
}

// All randomness goes through this wrapper instead of <random> distributions,
// whose outputs are not pinned down by the standard. Runs must be bit-for-bit
// reproducible across toolchains.
class Rng {
public:
    explicit Rng(uint64_t seed) : s_(seed) {}

    uint64_t next() { return s_.next(); }

    // uniform in [0, n); n = 0 returns 0
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }

    int below_int(int n) { return static_cast<int>(below(static_cast<uint64_t>(n))); }

    // uniform in [0, 1)
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    SplitMix64 s_;
};

}  // namespace rainbow
