#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace cama {

/// Seeded generator with platform-independent output.
///
/// The engine is std::mt19937_64, whose sequence is fixed by the standard.
/// Standard distributions are implementation-defined, so every draw here is
/// derived from raw engine output.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform in [lo, hi], inclusive.
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi);

    /// Uniform in [0, 1) with 53 bits of resolution.
    double unit();

private:
    std::mt19937_64 engine_;
};

/// Draws `count` distinct indices, each draw proportional to the weights of
/// the items not yet taken. Returned in draw order.
std::vector<std::size_t> weighted_sample_without_replacement(std::span<const double> weights,
                                                              std::size_t count, Rng& rng);

}  // namespace cama
