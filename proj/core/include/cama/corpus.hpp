#pragma once

#include <cama/ids.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cama {

/// Listener playlists and per-song artist lists, densely indexed.
///
/// Original string ids are kept so outputs can name entities the way the
/// input files did. A Corpus is immutable once built and may be shared
/// read-only between threads.
class Corpus {
public:
    /// Validates and takes ownership of already-indexed data.
    ///
    /// Throws ValidationError if a playlist references an unknown song or
    /// repeats a song, a song has no artists or repeats an artist, an artist
    /// id is out of range, names are not unique, or there are no listeners
    /// or no songs. Empty playlists are accepted here; the file format
    /// rejects them.
    Corpus(std::vector<std::string> listener_names,
           std::vector<std::vector<SongId>> playlists,
           std::vector<std::string> song_names,
           std::vector<std::vector<ArtistId>> song_artists,
           std::vector<std::string> artist_names);

    [[nodiscard]] std::size_t listener_count() const noexcept { return listener_names_.size(); }
    [[nodiscard]] std::size_t song_count() const noexcept { return song_names_.size(); }
    [[nodiscard]] std::size_t artist_count() const noexcept { return artist_names_.size(); }

    [[nodiscard]] std::span<const SongId> playlist(ListenerId listener) const;
    [[nodiscard]] std::span<const ArtistId> artists(SongId song) const;

    [[nodiscard]] const std::string& listener_name(ListenerId id) const;
    [[nodiscard]] const std::string& song_name(SongId id) const;
    [[nodiscard]] const std::string& artist_name(ArtistId id) const;

    [[nodiscard]] std::optional<ListenerId> find_listener(std::string_view name) const;
    [[nodiscard]] std::optional<SongId> find_song(std::string_view name) const;
    [[nodiscard]] std::optional<ArtistId> find_artist(std::string_view name) const;

    /// Total number of (listener, song) entries over all playlists.
    [[nodiscard]] std::size_t playlist_entry_count() const noexcept;

    /// Same catalog and listeners, different playlists. Used to derive
    /// training corpora.
    [[nodiscard]] Corpus with_playlists(std::vector<std::vector<SongId>> playlists) const;

    [[nodiscard]] const std::vector<std::vector<SongId>>& playlists() const noexcept { return playlists_; }
    [[nodiscard]] const std::vector<std::vector<ArtistId>>& song_artists() const noexcept { return song_artists_; }

    friend bool operator==(const Corpus& a, const Corpus& b);

private:
    std::vector<std::string> listener_names_;
    std::vector<std::vector<SongId>> playlists_;
    std::vector<std::string> song_names_;
    std::vector<std::vector<ArtistId>> song_artists_;
    std::vector<std::string> artist_names_;

    std::unordered_map<std::string, ListenerId> listener_index_;
    std::unordered_map<std::string, SongId> song_index_;
    std::unordered_map<std::string, ArtistId> artist_index_;
};

// JSON Lines persistence.
//
//   playlists: {"listener": "<id>", "songs": ["<song id>", ...]}
//   songs:     {"song": "<id>", "artists": ["<artist id>", ...]}
//
// Dense ids follow first appearance: songs and artists in songs-file order,
// listeners in playlists-file order. Unknown keys, empty arrays, duplicates,
// and CR line endings are rejected.

/// Throws ParseError (with the 1-based line number) or ValidationError.
Corpus read_corpus(std::istream& playlists, std::istream& songs,
                   std::string_view playlists_name = "playlists",
                   std::string_view songs_name = "songs");

Corpus load_corpus(const std::filesystem::path& playlists_path,
                   const std::filesystem::path& songs_path);

/// Writes records in id order with keys sorted, so equal corpora produce
/// byte-identical files. Throws ValidationError on an empty playlist.
void write_corpus(const Corpus& corpus, std::ostream& playlists, std::ostream& songs);

void save_corpus(const Corpus& corpus,
                 const std::filesystem::path& playlists_path,
                 const std::filesystem::path& songs_path);

}  // namespace cama
