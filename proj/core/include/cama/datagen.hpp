#pragma once

#include <cama/corpus.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace cama {

struct IntRange {
    std::size_t min = 0;
    std::size_t max = 0;  // inclusive

    friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Recipe for a synthetic corpus. Defaults give 100 listeners with 11-19
/// songs each over a 50-song catalog where each song has 2-4 of 20 artists.
struct GenConfig {
    std::uint64_t seed = 42;
    std::size_t n_listeners = 100;
    std::size_t n_songs = 50;
    std::size_t n_artists = 20;
    IntRange playlist_len{11, 19};
    IntRange artists_per_song{2, 4};
    /// Spread of song popularity over rank. Unset means n_songs / 4.
    std::optional<double> popularity_sigma;
    /// Spread of artist popularity over rank. Unset means n_artists / 4.
    std::optional<double> artist_sigma;

    [[nodiscard]] double resolved_popularity_sigma() const;
    [[nodiscard]] double resolved_artist_sigma() const;

    /// Throws ConfigError.
    void validate() const;
};

/// Half-normal weights over rank: entry i is proportional to
/// exp(-i^2 / (2 sigma^2)), normalized to sum to 1.
///
/// Throws ConfigError if count is 0, sigma is not positive and finite, or a
/// weight underflows to zero.
std::vector<double> popularity_weights(std::size_t count, double sigma);

/// Deterministic in the config (including seed).
///
/// Each song draws its artist count uniformly from artists_per_song and its
/// artists without replacement by artist popularity; each listener draws a
/// playlist length uniformly from playlist_len and songs without replacement
/// by song popularity. Artist ids are renumbered by first appearance and
/// unused artists dropped, so the result survives a save/load round trip
/// unchanged.
Corpus generate(const GenConfig& config);

}  // namespace cama
