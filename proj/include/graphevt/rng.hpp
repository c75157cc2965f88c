#pragma once

#include <cstdint>
#include <random>

namespace graphevt {

/// Seedable, splittable random stream.
///
/// The engine is std::mt19937_64, whose output sequence for a given seed is
/// fixed by the C++ standard. The conversions below are written out by hand
/// (the std distributions are implementation-defined), so a stream yields
/// the same values with every conforming toolchain:
///   uniform()   = (next() >> 11) * 2^-53
///   below(n)    = rejection sampling on next() against the largest multiple of n
///   normal()    = Box-Muller on two uniforms, cosine branch only
///   split(id)   = fresh stream seeded with splitmix64(seed ^ splitmix64(id))
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n); n must be > 0.
    std::uint64_t below(std::uint64_t n);

    double normal();

    Rng split(std::uint64_t stream_id) const;

    static std::uint64_t splitmix64(std::uint64_t x);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace graphevt
