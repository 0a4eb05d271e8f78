#ifndef BINPACK_RNG_HPP
#define BINPACK_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

// Deterministic randomness helpers. Distributions are written out by hand so
// that identical seeds give identical streams on every platform and standard
// library; episode traces and golden files depend on this.

namespace binpack {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, n), unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % n;
    }

    // Uniform integer in [lo, hi], inclusive.
    int range(int lo, int hi) {
        return lo + int(below(std::uint64_t(hi) - std::uint64_t(lo) + 1));
    }

    // Uniform double in [0, 1).
    double uniform01() {
        return double(engine_() >> 11) * (1.0 / 9007199254740992.0);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = std::size_t(below(i));
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace binpack

#endif  // BINPACK_RNG_HPP
