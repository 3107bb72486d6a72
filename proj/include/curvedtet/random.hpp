#pragma once

#include <cstdint>

#include "curvedtet/rotor.hpp"

namespace curvedtet {

/// xoshiro256++ with splitmix64 seeding. Self-contained so that generated
/// streams are byte-stable across standard libraries; std::normal_distribution
/// is implementation-defined and would break reproducibility.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    /// Independent child stream; used to give each Monte Carlo chunk its own
    /// deterministic generator regardless of thread assignment.
    static Rng stream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64();
    double uniform();  // [0, 1)
    double gauss();    // standard normal (Box-Muller, pair-cached)

    Vec3 unit_vector();   // uniform on S^2
    Rotor haar_rotor();   // Haar-uniform on SU(2)

private:
    std::uint64_t s_[4];
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace curvedtet
