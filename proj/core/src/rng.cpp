#include <cama/rng.hpp>

#include <cama/error.hpp>

#include <algorithm>
#include <string>

namespace cama {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw ConfigError("Rng::below requires a positive bound");
    // Reject the low partial block so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x >= threshold) return x % bound;
    }
}

std::uint64_t Rng::between(std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo) throw ConfigError("Rng::between requires lo <= hi");
    if (hi - lo == UINT64_MAX) return engine_();
    return lo + below(hi - lo + 1);
}

double Rng::unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::vector<std::size_t> weighted_sample_without_replacement(std::span<const double> weights,
                                                              std::size_t count, Rng& rng) {
    std::vector<double> remaining(weights.begin(), weights.end());
    const auto available = static_cast<std::size_t>(
        std::count_if(remaining.begin(), remaining.end(), [](double w) { return w > 0.0; }));
    if (count > available) {
        throw ConfigError("cannot draw " + std::to_string(count) + " distinct items from " +
                          std::to_string(available) + " with positive weight");
    }

    std::vector<std::size_t> drawn;
    drawn.reserve(count);
    for (std::size_t d = 0; d < count; ++d) {
        double total = 0.0;
        for (double w : remaining) total += w;
        const double target = rng.unit() * total;

        std::size_t pick = remaining.size();
        double cumulative = 0.0;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            if (remaining[i] <= 0.0) continue;
            pick = i;
            cumulative += remaining[i];
            if (target < cumulative) break;
        }
        // pick is the last positive item if rounding left target >= cumulative.
        drawn.push_back(pick);
        remaining[pick] = 0.0;
    }
    return drawn;
}

}  // namespace cama
