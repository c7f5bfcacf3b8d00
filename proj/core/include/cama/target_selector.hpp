#pragma once

#include <cama/corpus.hpp>
#include <cama/error.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace cama {

/// Exact non-negative ratio num/den with den > 0.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    [[nodiscard]] double value() const noexcept {
        return static_cast<double>(num) / static_cast<double>(den);
    }

    /// num/den > threshold, decided exactly against the binary value of the
    /// threshold (no rounding of the ratio).
    [[nodiscard]] bool exceeds(double threshold) const noexcept;

    /// Compares as unreduced fractions: 5/10 != 1/2.
    friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct CamaScores {
    /// Song pairs sharing at least one artist, over all C(k, 2) pairs.
    Ratio cama1;
    /// Occurrences of the most frequent artist, over playlist length k.
    Ratio cama2;
};

struct Thresholds {
    double cama1 = 0.4;
    double cama2 = 0.5;

    /// Throws ConfigError unless both lie in [0, 1].
    void validate() const;
};

/// Thrown by cama_scores for playlists with fewer than two songs.
class IneligibleListener : public ValidationError {
public:
    using ValidationError::ValidationError;
};

[[nodiscard]] CamaScores cama_scores(std::span<const SongId> playlist, const Corpus& corpus);
[[nodiscard]] CamaScores cama_scores(ListenerId listener, const Corpus& corpus);

/// Strict on both scores.
[[nodiscard]] bool is_target(const CamaScores& scores, const Thresholds& thresholds);

struct ListenerAssessment {
    ListenerId listener;
    std::optional<CamaScores> scores;  // empty when the playlist is too short
    bool selected = false;
};

/// One entry per listener in id order.
[[nodiscard]] std::vector<ListenerAssessment> assess_listeners(const Corpus& corpus,
                                                               const Thresholds& thresholds);

/// Listeners with at least two songs whose cama1 and cama2 both strictly
/// exceed the thresholds, ascending by id.
[[nodiscard]] std::vector<ListenerId> select_targets(const Corpus& corpus, const Thresholds& thresholds);

}  // namespace cama
