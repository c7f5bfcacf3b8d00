#include <cama/datagen.hpp>

#include <cama/error.hpp>
#include <cama/rng.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace cama {

double GenConfig::resolved_popularity_sigma() const {
    return popularity_sigma.value_or(static_cast<double>(n_songs) / 4.0);
}

double GenConfig::resolved_artist_sigma() const {
    return artist_sigma.value_or(static_cast<double>(n_artists) / 4.0);
}

void GenConfig::validate() const {
    if (n_listeners == 0) throw ConfigError("n_listeners must be positive");
    if (n_songs == 0) throw ConfigError("n_songs must be positive");
    if (n_artists == 0) throw ConfigError("n_artists must be positive");
    if (playlist_len.min < 1 || playlist_len.min > playlist_len.max || playlist_len.max > n_songs) {
        throw ConfigError("playlist length range [" + std::to_string(playlist_len.min) + ", " +
                          std::to_string(playlist_len.max) + "] must lie within [1, " +
                          std::to_string(n_songs) + "]");
    }
    if (artists_per_song.min < 1 || artists_per_song.min > artists_per_song.max ||
        artists_per_song.max > n_artists) {
        throw ConfigError("artists-per-song range [" + std::to_string(artists_per_song.min) + ", " +
                          std::to_string(artists_per_song.max) + "] must lie within [1, " +
                          std::to_string(n_artists) + "]");
    }
    for (double sigma : {resolved_popularity_sigma(), resolved_artist_sigma()}) {
        if (!(sigma > 0.0) || !std::isfinite(sigma)) {
            throw ConfigError("popularity sigma must be positive and finite");
        }
    }
}

std::vector<double> popularity_weights(std::size_t count, double sigma) {
    if (count == 0) throw ConfigError("popularity_weights requires count >= 1");
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw ConfigError("popularity_weights requires a positive finite sigma");
    }
    std::vector<double> weights(count);
    const double denom = 2.0 * sigma * sigma;
    double total = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const auto rank = static_cast<double>(i);
        weights[i] = std::exp(-(rank * rank) / denom);
        total += weights[i];
    }
    for (double& w : weights) {
        w /= total;
        if (!(w > 0.0)) {
            throw ConfigError("sigma " + std::to_string(sigma) + " is too small for " +
                              std::to_string(count) + " items: tail weights underflow");
        }
    }
    return weights;
}

Corpus generate(const GenConfig& config) {
    config.validate();
    Rng rng(config.seed);

    const auto artist_weights = popularity_weights(config.n_artists, config.resolved_artist_sigma());
    const auto song_weights = popularity_weights(config.n_songs, config.resolved_popularity_sigma());

    // Artists first, then playlists, from a single stream.
    std::vector<std::vector<std::size_t>> raw_artists(config.n_songs);
    for (auto& artists : raw_artists) {
        const auto k = rng.between(config.artists_per_song.min, config.artists_per_song.max);
        artists = weighted_sample_without_replacement(artist_weights, k, rng);
        std::sort(artists.begin(), artists.end());
    }

    std::vector<std::vector<SongId>> playlists(config.n_listeners);
    for (auto& playlist : playlists) {
        const auto k = rng.between(config.playlist_len.min, config.playlist_len.max);
        for (std::size_t s : weighted_sample_without_replacement(song_weights, k, rng)) {
            playlist.push_back(SongId::from_index(s));
        }
    }

    // Renumber artists by first appearance so the corpus equals its reload.
    std::vector<std::optional<ArtistId>> remap(config.n_artists);
    std::vector<std::string> artist_names;
    std::vector<std::vector<ArtistId>> song_artists(config.n_songs);
    for (std::size_t s = 0; s < config.n_songs; ++s) {
        for (std::size_t a : raw_artists[s]) {
            if (!remap[a]) {
                remap[a] = ArtistId::from_index(artist_names.size());
                artist_names.push_back("A" + std::to_string(a + 1));
            }
            song_artists[s].push_back(*remap[a]);
        }
    }

    std::vector<std::string> listener_names;
    for (std::size_t l = 0; l < config.n_listeners; ++l) listener_names.push_back("L" + std::to_string(l + 1));
    std::vector<std::string> song_names;
    for (std::size_t s = 0; s < config.n_songs; ++s) song_names.push_back("S" + std::to_string(s + 1));

    return Corpus(std::move(listener_names), std::move(playlists), std::move(song_names),
                  std::move(song_artists), std::move(artist_names));
}

}  // namespace cama
