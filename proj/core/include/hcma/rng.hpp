#pragma once
#include <cstdint>
#include <random>
#include <string>

namespace hcma {

// Deterministic seeded RNG. The generator core is std::mt19937_64 (bit-exact
// by the standard); the value mappings are fixed here so the streams are
// reproducible independent of the standard library:
//   uniform():  one engine draw, (x >> 11) * 2^-53  ->  [0, 1)
//   normal():   Box-Muller on two uniform() draws, returns the cosine branch
//               first and caches the sine branch for the next call
//   uniform_int(lo, hi): rejection sampling on engine draws (unbiased)
// Tensor fills consume values in row-major element order, one per element.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal();
    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Uniform integer in [lo, hi], inclusive.
    int64_t uniform_int(int64_t lo, int64_t hi);

    // mt19937_64 text serialization plus the cached Box-Muller branch.
    std::string state() const;
    void restore(const std::string& s);

private:
    std::mt19937_64 engine_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

}  // namespace hcma
