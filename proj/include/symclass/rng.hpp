#ifndef SYMCLASS_RNG_HPP
#define SYMCLASS_RNG_HPP

#include <cstdint>
#include <random>

#include "symclass/common.hpp"

namespace symclass {

/// Seeded generator with hand-rolled distributions, so that a given seed
/// produces the same stream on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi] inclusive.
    long uniform_int(long lo, long hi) {
        return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Complex unit_phase() {
        double t = 2.0 * M_PI * uniform();
        return {std::cos(t), std::sin(t)};
    }

    /// Standard complex Gaussian (Box-Muller), E|z|^2 = 1.
    Complex gaussian() {
        double u = uniform(), v = uniform();
        if (u <= 0.0) u = 0x1.0p-53;
        double r = std::sqrt(-std::log(u));
        return r * Complex{std::cos(2.0 * M_PI * v), std::sin(2.0 * M_PI * v)};
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace symclass

#endif
