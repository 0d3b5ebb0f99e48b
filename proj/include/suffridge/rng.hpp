#ifndef SUFFRIDGE_RNG_HPP
#define SUFFRIDGE_RNG_HPP

#include <cstdint>
#include <random>

namespace suffridge {

/// Seeded uniform doubles straight from mt19937_64 output. Standard-library
/// distributions are not pinned across implementations, so byte-identical
/// reruns use this instead.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace suffridge

#endif
