#ifndef VGLAB_RNG_HPP
#define VGLAB_RNG_HPP

#include <cstdint>
#include <random>

namespace vglab {

/* Deterministic RNG. mt19937_64 output is pinned by the standard, and all
 * bounded draws go through our own rejection loop, so streams are identical
 * across platforms and compilers for a given seed. */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform integer in [lo, hi], inclusive; rejection sampling, no distribution objects
    long long int_in(long long lo, long long hi) {
        if (lo > hi) std::swap(lo, hi);
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<long long>(gen_()); // full 64-bit range
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v = gen_();
        while (v >= limit) v = gen_();
        return lo + static_cast<long long>(v % span);
    }

    // derived independent stream; label keeps sub-streams for different tasks apart
    Rng split(std::uint64_t label) {
        std::uint64_t x = gen_() ^ (0x9e3779b97f4a7c15ull * (label + 1));
        // splitmix64 finalizer
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ull;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebull;
        x ^= x >> 31;
        return Rng(x);
    }

  private:
    std::mt19937_64 gen_;
};

} // namespace vglab

#endif
