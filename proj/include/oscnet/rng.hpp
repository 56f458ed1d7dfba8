#pragma once

#include <cstdint>
#include <random>

namespace oscnet {

// Per-realization seeds are derived from a master seed by folding in the
// realization index through the splitmix64 finalizer. Identical
// (master, index) pairs give identical streams on every platform.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Thin wrapper around mt19937_64 with hand-rolled uniform draws. The
// std::uniform_* distributions are implementation-defined, which would break
// the byte-identical-output contract across toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // uniform integer in [0, n), rejection sampled to avoid modulo bias
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    bool bernoulli(double p) { return uniform() < p; }

  private:
    std::mt19937_64 gen_;
};

}  // namespace oscnet
