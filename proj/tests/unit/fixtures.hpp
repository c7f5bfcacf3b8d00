#pragma once

// Hand-built corpora and small generators shared by the unit and acceptance
// suites.

#include <cama/corpus.hpp>
#include <cama/datagen.hpp>
#include <cama/rng.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace cama::testing {

inline Corpus corpus_from_text(const std::string& playlists, const std::string& songs) {
    std::istringstream p(playlists);
    std::istringstream s(songs);
    return read_corpus(p, s);
}

/// One listener, five songs: S1{A1,A3} S2{A1} S3{A1} S4{A2} S5{A2,A3}.
inline Corpus example_corpus() {
    return corpus_from_text(R"({"listener":"L1","songs":["S1","S2","S3","S4","S5"]})"
                            "\n",
                            R"({"song":"S1","artists":["A1","A3"]})"
                            "\n"
                            R"({"song":"S2","artists":["A1"]})"
                            "\n"
                            R"({"song":"S3","artists":["A1"]})"
                            "\n"
                            R"({"song":"S4","artists":["A2"]})"
                            "\n"
                            R"({"song":"S5","artists":["A2","A3"]})"
                            "\n");
}

/// Builds a corpus directly from dense ids; names are L<i>, S<i>, A<i>.
inline Corpus make_corpus(const std::vector<std::vector<std::size_t>>& playlists,
                          const std::vector<std::vector<std::size_t>>& song_artists,
                          std::size_t artist_count) {
    std::vector<std::string> listeners, songs, artists;
    std::vector<std::vector<SongId>> p;
    std::vector<std::vector<ArtistId>> a;
    for (std::size_t i = 0; i < playlists.size(); ++i) {
        listeners.push_back("L" + std::to_string(i + 1));
        p.emplace_back();
        for (auto s : playlists[i]) p.back().push_back(SongId::from_index(s));
    }
    for (std::size_t i = 0; i < song_artists.size(); ++i) {
        songs.push_back("S" + std::to_string(i + 1));
        a.emplace_back();
        for (auto x : song_artists[i]) a.back().push_back(ArtistId::from_index(x));
    }
    for (std::size_t i = 0; i < artist_count; ++i) artists.push_back("A" + std::to_string(i + 1));
    return Corpus(std::move(listeners), std::move(p), std::move(songs), std::move(a), std::move(artists));
}

/// Ten songs where song i and i+1 share an artist no other song has.
inline Corpus chain_corpus() {
    std::vector<std::vector<std::size_t>> artists(10);
    for (std::size_t i = 0; i < 9; ++i) {
        artists[i].push_back(i);
        artists[i + 1].push_back(i);
    }
    return make_corpus({{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}, artists, 9);
}

/// Fifty songs: the first 25 share artist 0, the rest each have their own.
inline Corpus split_corpus() {
    std::vector<std::vector<std::size_t>> artists(50);
    for (std::size_t i = 0; i < 25; ++i) artists[i] = {0};
    for (std::size_t i = 25; i < 50; ++i) artists[i] = {i - 24};
    std::vector<std::size_t> playlist(50);
    for (std::size_t i = 0; i < 50; ++i) playlist[i] = i;
    return make_corpus({playlist}, artists, 26);
}

inline GenConfig small_config(std::uint64_t seed, std::size_t listeners, std::size_t songs) {
    GenConfig config;
    config.seed = seed;
    config.n_listeners = listeners;
    config.n_songs = songs;
    return config;
}

/// Random corpus with listeners + songs <= max_nodes. Some songs may be in
/// no playlist and share no artist, giving isolated nodes.
inline Corpus random_corpus(Rng& rng, std::size_t max_nodes, std::size_t min_playlist = 1) {
    const auto n = static_cast<std::size_t>(rng.between(1, std::min<std::size_t>(12, max_nodes / 3)));
    const auto m = static_cast<std::size_t>(rng.between(std::max<std::size_t>(2, min_playlist), max_nodes - n));
    const auto a = static_cast<std::size_t>(rng.between(1, 10));

    std::vector<std::vector<std::size_t>> artists(m);
    for (auto& list : artists) {
        const auto k = static_cast<std::size_t>(rng.between(1, std::min<std::size_t>(3, a)));
        while (list.size() < k) {
            const auto x = static_cast<std::size_t>(rng.below(a));
            if (std::find(list.begin(), list.end(), x) == list.end()) list.push_back(x);
        }
    }
    std::vector<std::vector<std::size_t>> playlists(n);
    for (auto& list : playlists) {
        const auto k = static_cast<std::size_t>(rng.between(min_playlist, std::min<std::size_t>(m, 10)));
        while (list.size() < k) {
            const auto s = static_cast<std::size_t>(rng.below(m));
            if (std::find(list.begin(), list.end(), s) == list.end()) list.push_back(s);
        }
    }
    return make_corpus(playlists, artists, a);
}

}  // namespace cama::testing
