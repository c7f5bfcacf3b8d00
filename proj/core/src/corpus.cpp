#include <cama/corpus.hpp>

#include <cama/error.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

namespace cama {

namespace {

template <typename Id>
std::unordered_map<std::string, Id> index_names(const std::vector<std::string>& names,
                                                 std::string_view kind) {
    std::unordered_map<std::string, Id> index;
    index.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!index.emplace(names[i], Id::from_index(i)).second) {
            throw ValidationError("duplicate " + std::string(kind) + " id '" + names[i] + "'");
        }
    }
    return index;
}

template <typename Id>
bool has_duplicates(std::vector<Id> ids) {
    std::sort(ids.begin(), ids.end());
    return std::adjacent_find(ids.begin(), ids.end()) != ids.end();
}

}  // namespace

Corpus::Corpus(std::vector<std::string> listener_names,
               std::vector<std::vector<SongId>> playlists,
               std::vector<std::string> song_names,
               std::vector<std::vector<ArtistId>> song_artists,
               std::vector<std::string> artist_names)
    : listener_names_(std::move(listener_names)),
      playlists_(std::move(playlists)),
      song_names_(std::move(song_names)),
      song_artists_(std::move(song_artists)),
      artist_names_(std::move(artist_names)) {
    if (listener_names_.empty()) throw ValidationError("corpus has no listeners");
    if (song_names_.empty()) throw ValidationError("corpus has no songs");
    if (playlists_.size() != listener_names_.size()) {
        throw ValidationError("playlist count does not match listener count");
    }
    if (song_artists_.size() != song_names_.size()) {
        throw ValidationError("artist-list count does not match song count");
    }

    listener_index_ = index_names<ListenerId>(listener_names_, "listener");
    song_index_ = index_names<SongId>(song_names_, "song");
    artist_index_ = index_names<ArtistId>(artist_names_, "artist");

    for (std::size_t s = 0; s < song_artists_.size(); ++s) {
        const auto& artists = song_artists_[s];
        if (artists.empty()) {
            throw ValidationError("song '" + song_names_[s] + "' has an empty artist list");
        }
        for (ArtistId a : artists) {
            if (a.index() >= artist_names_.size()) {
                throw ValidationError("song '" + song_names_[s] + "' references artist id " +
                                      std::to_string(a.value) + " out of range");
            }
        }
        if (has_duplicates(artists)) {
            throw ValidationError("song '" + song_names_[s] + "' lists an artist twice");
        }
    }

    for (std::size_t l = 0; l < playlists_.size(); ++l) {
        const auto& songs = playlists_[l];
        for (SongId s : songs) {
            if (s.index() >= song_names_.size()) {
                throw ValidationError("playlist of '" + listener_names_[l] +
                                      "' references song id " + std::to_string(s.value) +
                                      " out of range");
            }
        }
        if (has_duplicates(songs)) {
            throw ValidationError("playlist of '" + listener_names_[l] + "' repeats a song");
        }
    }
}

std::span<const SongId> Corpus::playlist(ListenerId listener) const {
    return playlists_.at(listener.index());
}

std::span<const ArtistId> Corpus::artists(SongId song) const {
    return song_artists_.at(song.index());
}

const std::string& Corpus::listener_name(ListenerId id) const { return listener_names_.at(id.index()); }
const std::string& Corpus::song_name(SongId id) const { return song_names_.at(id.index()); }
const std::string& Corpus::artist_name(ArtistId id) const { return artist_names_.at(id.index()); }

std::optional<ListenerId> Corpus::find_listener(std::string_view name) const {
    auto it = listener_index_.find(std::string(name));
    if (it == listener_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<SongId> Corpus::find_song(std::string_view name) const {
    auto it = song_index_.find(std::string(name));
    if (it == song_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<ArtistId> Corpus::find_artist(std::string_view name) const {
    auto it = artist_index_.find(std::string(name));
    if (it == artist_index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Corpus::playlist_entry_count() const noexcept {
    std::size_t total = 0;
    for (const auto& p : playlists_) total += p.size();
    return total;
}

Corpus Corpus::with_playlists(std::vector<std::vector<SongId>> playlists) const {
    return Corpus(listener_names_, std::move(playlists), song_names_, song_artists_, artist_names_);
}

bool operator==(const Corpus& a, const Corpus& b) {
    return a.listener_names_ == b.listener_names_ && a.playlists_ == b.playlists_ &&
           a.song_names_ == b.song_names_ && a.song_artists_ == b.song_artists_ &&
           a.artist_names_ == b.artist_names_;
}

namespace {

using nlohmann::json;

struct LineReader {
    std::istream& in;
    std::string name;
    std::size_t line_no = 0;
    std::string line;

    bool next() {
        if (!std::getline(in, line)) return false;
        ++line_no;
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(name, line_no, what); }

    json parse_record(std::string_view id_key, std::string_view list_key) {
        if (!line.empty() && line.back() == '\r') fail("CR line ending");
        json record;
        try {
            record = json::parse(line);
        } catch (const json::parse_error& e) {
            fail(std::string("malformed JSON: ") + e.what());
        }
        if (!record.is_object()) fail("record is not a JSON object");
        for (const auto& [key, value] : record.items()) {
            if (key != id_key && key != list_key) fail("unknown key '" + key + "'");
        }
        const std::string id_field(id_key);
        const std::string list_field(list_key);
        if (!record.contains(id_field) || !record.at(id_field).is_string()) {
            fail("missing string field '" + id_field + "'");
        }
        if (!record.contains(list_field) || !record.at(list_field).is_array()) {
            fail("missing array field '" + list_field + "'");
        }
        const auto& list = record.at(list_field);
        if (list.empty()) fail("'" + std::string(list_key) + "' is empty");
        for (const auto& item : list) {
            if (!item.is_string()) fail("'" + std::string(list_key) + "' holds a non-string entry");
        }
        return record;
    }
};

}  // namespace

Corpus read_corpus(std::istream& playlists, std::istream& songs,
                   std::string_view playlists_name, std::string_view songs_name) {
    std::vector<std::string> song_names;
    std::vector<std::vector<ArtistId>> song_artists;
    std::vector<std::string> artist_names;
    std::unordered_map<std::string, ArtistId> artist_index;
    std::unordered_map<std::string, SongId> song_index;

    LineReader song_reader{songs, std::string(songs_name), 0, {}};
    while (song_reader.next()) {
        json record = song_reader.parse_record("song", "artists");
        auto name = record["song"].get<std::string>();
        if (!song_index.emplace(name, SongId::from_index(song_names.size())).second) {
            song_reader.fail("duplicate song '" + name + "'");
        }
        std::vector<ArtistId> artists;
        for (const auto& a : record["artists"]) {
            auto artist = a.get<std::string>();
            auto [it, inserted] = artist_index.emplace(artist, ArtistId::from_index(artist_names.size()));
            if (inserted) artist_names.push_back(artist);
            if (std::find(artists.begin(), artists.end(), it->second) != artists.end()) {
                song_reader.fail("song '" + name + "' lists artist '" + artist + "' twice");
            }
            artists.push_back(it->second);
        }
        song_names.push_back(std::move(name));
        song_artists.push_back(std::move(artists));
    }
    if (songs.bad()) throw IoError("read failure on " + std::string(songs_name));

    std::vector<std::string> listener_names;
    std::vector<std::vector<SongId>> playlist_songs;
    std::unordered_map<std::string, ListenerId> listener_index;

    LineReader playlist_reader{playlists, std::string(playlists_name), 0, {}};
    while (playlist_reader.next()) {
        json record = playlist_reader.parse_record("listener", "songs");
        auto name = record["listener"].get<std::string>();
        if (!listener_index.emplace(name, ListenerId::from_index(listener_names.size())).second) {
            playlist_reader.fail("duplicate listener '" + name + "'");
        }
        std::vector<SongId> entries;
        for (const auto& s : record["songs"]) {
            auto song = s.get<std::string>();
            auto it = song_index.find(song);
            if (it == song_index.end()) {
                playlist_reader.fail("listener '" + name + "' references unknown song '" + song + "'");
            }
            if (std::find(entries.begin(), entries.end(), it->second) != entries.end()) {
                playlist_reader.fail("listener '" + name + "' lists song '" + song + "' twice");
            }
            entries.push_back(it->second);
        }
        listener_names.push_back(std::move(name));
        playlist_songs.push_back(std::move(entries));
    }
    if (playlists.bad()) throw IoError("read failure on " + std::string(playlists_name));

    return Corpus(std::move(listener_names), std::move(playlist_songs), std::move(song_names),
                  std::move(song_artists), std::move(artist_names));
}

Corpus load_corpus(const std::filesystem::path& playlists_path,
                   const std::filesystem::path& songs_path) {
    std::ifstream playlists(playlists_path, std::ios::binary);
    if (!playlists) throw IoError("cannot open " + playlists_path.string());
    std::ifstream songs(songs_path, std::ios::binary);
    if (!songs) throw IoError("cannot open " + songs_path.string());
    return read_corpus(playlists, songs, playlists_path.string(), songs_path.string());
}

void write_corpus(const Corpus& corpus, std::ostream& playlists, std::ostream& songs) {
    for (std::size_t l = 0; l < corpus.listener_count(); ++l) {
        if (corpus.playlist(ListenerId::from_index(l)).empty()) {
            throw ValidationError("listener '" + corpus.listener_name(ListenerId::from_index(l)) +
                                  "' has an empty playlist");
        }
    }

    for (std::size_t s = 0; s < corpus.song_count(); ++s) {
        const auto song = SongId::from_index(s);
        json artists = json::array();
        for (ArtistId a : corpus.artists(song)) artists.push_back(corpus.artist_name(a));
        songs << json{{"song", corpus.song_name(song)}, {"artists", std::move(artists)}}.dump()
              << '\n';
    }
    for (std::size_t l = 0; l < corpus.listener_count(); ++l) {
        const auto listener = ListenerId::from_index(l);
        json entries = json::array();
        for (SongId s : corpus.playlist(listener)) entries.push_back(corpus.song_name(s));
        playlists << json{{"listener", corpus.listener_name(listener)}, {"songs", std::move(entries)}}
                         .dump()
                  << '\n';
    }
}

void save_corpus(const Corpus& corpus,
                 const std::filesystem::path& playlists_path,
                 const std::filesystem::path& songs_path) {
    std::ofstream playlists(playlists_path, std::ios::binary | std::ios::trunc);
    if (!playlists) throw IoError("cannot write " + playlists_path.string());
    std::ofstream songs(songs_path, std::ios::binary | std::ios::trunc);
    if (!songs) throw IoError("cannot write " + songs_path.string());
    write_corpus(corpus, playlists, songs);
    playlists.flush();
    songs.flush();
    if (!playlists || !songs) throw IoError("write failure while saving corpus");
}

}  // namespace cama
