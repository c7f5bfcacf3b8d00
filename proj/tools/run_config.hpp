#pragma once

// Resolved option sets for each subcommand. The same structs are filled
// from a --config JSON file, overridden by flags, and echoed to the
// <subcommand>.config.json sidecar after a run.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cama::cli {

struct GlobalOptions {
    std::uint64_t seed = 42;
    std::string format = "csv";
};

struct CorpusPaths {
    std::string playlists;  // empty: <output-dir>/playlists.jsonl
    std::string songs;      // empty: <output-dir>/songs.jsonl
};

struct GenerateOptions {
    CorpusPaths paths;
    std::size_t n_listeners = 100;
    std::size_t n_songs = 50;
    std::size_t n_artists = 20;
    std::size_t playlist_min = 11;
    std::size_t playlist_max = 19;
    std::size_t artists_min = 2;
    std::size_t artists_max = 4;
    std::optional<double> popularity_sigma;
    std::optional<double> artist_sigma;
};

struct SelectOptions {
    CorpusPaths paths;
    double t1 = 0.4;
    double t2 = 0.5;
};

struct BuildGraphOptions {
    CorpusPaths paths;
    bool stats = false;
    std::string dump_tp;
};

struct WalkOptions {
    double alpha = 0.8;
    std::size_t max_steps = 50;
    double tol = 1e-10;
};

struct RecommendOptions {
    CorpusPaths paths;
    std::string listener;
    WalkOptions walk;
    std::size_t top_n = 5;
};

struct EvaluateOptions {
    CorpusPaths paths;
    WalkOptions walk;
    double t1 = 0.4;
    double t2 = 0.5;
    std::size_t top_n = 5;
};

struct SweepOptions {
    CorpusPaths paths;
    std::vector<double> alphas{0.2, 0.4, 0.6, 0.8};
    std::vector<double> t1s{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
    std::vector<double> t2s{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::vector<std::size_t> top_ns{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::optional<double> base_alpha;
    std::optional<double> base_t1;
    std::optional<double> base_t2;
    std::size_t max_steps = 50;
    double tol = 1e-10;
};

struct PlotsOptions {
    std::string report;  // empty: <output-dir>/sweep.csv
    std::string plots_dir;  // empty: <output-dir>/plots
};

using nlohmann::json;

template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& value) {
    j[key] = value ? json(*value) : json(nullptr);
}

template <typename T>
void get_optional(const json& j, const char* key, std::optional<T>& value) {
    if (!j.contains(key)) return;
    if (j.at(key).is_null()) {
        value.reset();
    } else {
        value = j.at(key).get<T>();
    }
}

template <typename T>
void get_field(const json& j, const char* key, T& value) {
    if (j.contains(key)) j.at(key).get_to(value);
}

inline void to_json(json& j, const CorpusPaths& p) {
    j["playlists"] = p.playlists;
    j["songs"] = p.songs;
}
inline void from_json(const json& j, CorpusPaths& p) {
    get_field(j, "playlists", p.playlists);
    get_field(j, "songs", p.songs);
}

inline void to_json(json& j, const WalkOptions& w) {
    j["alpha"] = w.alpha;
    j["max_steps"] = w.max_steps;
    j["tol"] = w.tol;
}
inline void from_json(const json& j, WalkOptions& w) {
    get_field(j, "alpha", w.alpha);
    get_field(j, "max_steps", w.max_steps);
    get_field(j, "tol", w.tol);
}

inline void to_json(json& j, const GenerateOptions& o) {
    to_json(j, o.paths);
    j["n_listeners"] = o.n_listeners;
    j["n_songs"] = o.n_songs;
    j["n_artists"] = o.n_artists;
    j["playlist_min"] = o.playlist_min;
    j["playlist_max"] = o.playlist_max;
    j["artists_min"] = o.artists_min;
    j["artists_max"] = o.artists_max;
    put_optional(j, "popularity_sigma", o.popularity_sigma);
    put_optional(j, "artist_sigma", o.artist_sigma);
}
inline void from_json(const json& j, GenerateOptions& o) {
    from_json(j, o.paths);
    get_field(j, "n_listeners", o.n_listeners);
    get_field(j, "n_songs", o.n_songs);
    get_field(j, "n_artists", o.n_artists);
    get_field(j, "playlist_min", o.playlist_min);
    get_field(j, "playlist_max", o.playlist_max);
    get_field(j, "artists_min", o.artists_min);
    get_field(j, "artists_max", o.artists_max);
    get_optional(j, "popularity_sigma", o.popularity_sigma);
    get_optional(j, "artist_sigma", o.artist_sigma);
}

inline void to_json(json& j, const SelectOptions& o) {
    to_json(j, o.paths);
    j["t1"] = o.t1;
    j["t2"] = o.t2;
}
inline void from_json(const json& j, SelectOptions& o) {
    from_json(j, o.paths);
    get_field(j, "t1", o.t1);
    get_field(j, "t2", o.t2);
}

inline void to_json(json& j, const BuildGraphOptions& o) {
    to_json(j, o.paths);
    j["stats"] = o.stats;
    j["dump_tp"] = o.dump_tp;
}
inline void from_json(const json& j, BuildGraphOptions& o) {
    from_json(j, o.paths);
    get_field(j, "stats", o.stats);
    get_field(j, "dump_tp", o.dump_tp);
}

inline void to_json(json& j, const RecommendOptions& o) {
    to_json(j, o.paths);
    j["listener"] = o.listener;
    to_json(j, o.walk);
    j["top_n"] = o.top_n;
}
inline void from_json(const json& j, RecommendOptions& o) {
    from_json(j, o.paths);
    get_field(j, "listener", o.listener);
    from_json(j, o.walk);
    get_field(j, "top_n", o.top_n);
}

inline void to_json(json& j, const EvaluateOptions& o) {
    to_json(j, o.paths);
    to_json(j, o.walk);
    j["t1"] = o.t1;
    j["t2"] = o.t2;
    j["top_n"] = o.top_n;
}
inline void from_json(const json& j, EvaluateOptions& o) {
    from_json(j, o.paths);
    from_json(j, o.walk);
    get_field(j, "t1", o.t1);
    get_field(j, "t2", o.t2);
    get_field(j, "top_n", o.top_n);
}

inline void to_json(json& j, const SweepOptions& o) {
    to_json(j, o.paths);
    j["alphas"] = o.alphas;
    j["t1s"] = o.t1s;
    j["t2s"] = o.t2s;
    j["top_ns"] = o.top_ns;
    put_optional(j, "base_alpha", o.base_alpha);
    put_optional(j, "base_t1", o.base_t1);
    put_optional(j, "base_t2", o.base_t2);
    j["max_steps"] = o.max_steps;
    j["tol"] = o.tol;
}
inline void from_json(const json& j, SweepOptions& o) {
    from_json(j, o.paths);
    get_field(j, "alphas", o.alphas);
    get_field(j, "t1s", o.t1s);
    get_field(j, "t2s", o.t2s);
    get_field(j, "top_ns", o.top_ns);
    get_optional(j, "base_alpha", o.base_alpha);
    get_optional(j, "base_t1", o.base_t1);
    get_optional(j, "base_t2", o.base_t2);
    get_field(j, "max_steps", o.max_steps);
    get_field(j, "tol", o.tol);
}

inline void to_json(json& j, const PlotsOptions& o) {
    j["report"] = o.report;
    j["plots_dir"] = o.plots_dir;
}
inline void from_json(const json& j, PlotsOptions& o) {
    get_field(j, "report", o.report);
    get_field(j, "plots_dir", o.plots_dir);
}

}  // namespace cama::cli
