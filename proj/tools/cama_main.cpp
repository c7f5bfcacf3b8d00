// cama: command-line front end.
//
//   cama generate        write a synthetic corpus
//   cama select-targets  cama1/cama2 per listener and the selection flag
//   cama build-graph     graph statistics, optional transition-matrix dump
//   cama recommend       top-N songs for one listener
//   cama evaluate        one holdout evaluation row
//   cama sweep           one-at-a-time sweeps over alpha, t1 and t2
//   cama plots           metric-vs-N series from a sweep report
//
// Exit codes: 0 success, 1 invalid data or parameters, 2 usage error.
// Every run writes <output-dir>/<subcommand>.config.json with the resolved
// options; passing it back through --config reproduces the run.

#include "run_config.hpp"

#include <cama/corpus.hpp>
#include <cama/datagen.hpp>
#include <cama/error.hpp>
#include <cama/evaluator.hpp>
#include <cama/format.hpp>
#include <cama/graph.hpp>
#include <cama/report.hpp>
#include <cama/rwr.hpp>
#include <cama/target_selector.hpp>
#include <cama/transition.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

namespace fs = std::filesystem;

namespace cama::cli {
namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    GlobalOptions global;
    std::string output_dir = ".";
    std::string config_path;
    GenerateOptions generate;
    SelectOptions select;
    BuildGraphOptions build_graph;
    RecommendOptions recommend;
    EvaluateOptions evaluate;
    SweepOptions sweep;
    PlotsOptions plots;
};

json options_json(const Options& o, const std::string& subcommand) {
    json j;
    if (subcommand == "generate") j = o.generate;
    if (subcommand == "select-targets") j = o.select;
    if (subcommand == "build-graph") j = o.build_graph;
    if (subcommand == "recommend") j = o.recommend;
    if (subcommand == "evaluate") j = o.evaluate;
    if (subcommand == "sweep") j = o.sweep;
    if (subcommand == "plots") j = o.plots;
    return j;
}

void apply_config(Options& o, const std::string& subcommand, const json& j) {
    if (subcommand == "generate") o.generate = j.get<GenerateOptions>();
    if (subcommand == "select-targets") o.select = j.get<SelectOptions>();
    if (subcommand == "build-graph") o.build_graph = j.get<BuildGraphOptions>();
    if (subcommand == "recommend") o.recommend = j.get<RecommendOptions>();
    if (subcommand == "evaluate") o.evaluate = j.get<EvaluateOptions>();
    if (subcommand == "sweep") o.sweep = j.get<SweepOptions>();
    if (subcommand == "plots") o.plots = j.get<PlotsOptions>();
}

std::string find_config_flag(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) return argv[i + 1];
        if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
    }
    return {};
}

/// Loads a sidecar into `o` and returns the subcommand it was written for.
std::string load_config(Options& o, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError("config " + path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("subcommand") || !j["subcommand"].is_string()) {
        throw UsageError("config " + path + " lacks a \"subcommand\" string");
    }
    const auto subcommand = j["subcommand"].get<std::string>();
    auto known = options_json(Options{}, subcommand);
    if (known.is_null()) throw UsageError("config " + path + " names unknown subcommand " + subcommand);
    known["subcommand"] = nullptr;
    known["seed"] = nullptr;
    known["format"] = nullptr;
    for (const auto& [key, value] : j.items()) {
        if (!known.contains(key)) throw UsageError("config " + path + ": unknown key '" + key + "'");
    }
    try {
        if (j.contains("seed")) j.at("seed").get_to(o.global.seed);
        if (j.contains("format")) j.at("format").get_to(o.global.format);
        apply_config(o, subcommand, j);
    } catch (const json::exception& e) {
        throw UsageError("config " + path + ": " + e.what());
    }
    return subcommand;
}

fs::path resolve(const std::string& given, const fs::path& output_dir, const char* fallback) {
    return given.empty() ? output_dir / fallback : fs::path(given);
}

Corpus read_input(const CorpusPaths& paths, const fs::path& output_dir) {
    return load_corpus(resolve(paths.playlists, output_dir, "playlists.jsonl"),
                       resolve(paths.songs, output_dir, "songs.jsonl"));
}

WalkConfig walk_config(const WalkOptions& w) {
    return WalkConfig{w.alpha, w.max_steps, w.tol};
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

bool json_format(const Options& o) { return o.global.format == "json"; }

void add_paths(CLI::App* sub, CorpusPaths& paths) {
    sub->add_option("--playlists", paths.playlists, "Playlists JSON Lines file (default <output-dir>/playlists.jsonl)");
    sub->add_option("--songs", paths.songs, "Songs JSON Lines file (default <output-dir>/songs.jsonl)");
}

void add_walk(CLI::App* sub, WalkOptions& walk) {
    sub->add_option("--alpha", walk.alpha, "Walk probability (restart is 1 - alpha)");
    sub->add_option("--max-steps", walk.max_steps, "Iteration cap");
    sub->add_option("--tol", walk.tol, "L1 early-exit tolerance (0 disables)");
}

void run_generate(Options& o, const fs::path& out_dir) {
    auto& g = o.generate;
    GenConfig config;
    config.seed = o.global.seed;
    config.n_listeners = g.n_listeners;
    config.n_songs = g.n_songs;
    config.n_artists = g.n_artists;
    config.playlist_len = {g.playlist_min, g.playlist_max};
    config.artists_per_song = {g.artists_min, g.artists_max};
    config.popularity_sigma = g.popularity_sigma;
    config.artist_sigma = g.artist_sigma;
    config.validate();
    g.popularity_sigma = config.resolved_popularity_sigma();
    g.artist_sigma = config.resolved_artist_sigma();

    const auto corpus = generate(config);
    save_corpus(corpus, resolve(g.paths.playlists, out_dir, "playlists.jsonl"),
                resolve(g.paths.songs, out_dir, "songs.jsonl"));
    std::cout << "seed,listeners,songs,artists,playlist_entries\n"
              << config.seed << ',' << corpus.listener_count() << ',' << corpus.song_count() << ','
              << corpus.artist_count() << ',' << corpus.playlist_entry_count() << '\n';
}

void run_select(const Options& o, const fs::path& out_dir) {
    const auto corpus = read_input(o.select.paths, out_dir);
    const auto assessments = assess_listeners(corpus, Thresholds{o.select.t1, o.select.t2});
    if (!json_format(o)) std::cout << "listener,cama1,cama2,selected\n";
    for (const auto& a : assessments) {
        const auto& name = corpus.listener_name(a.listener);
        if (json_format(o)) {
            nlohmann::ordered_json j;
            j["listener"] = name;
            j["cama1"] = a.scores ? json(a.scores->cama1.value()) : json(nullptr);
            j["cama2"] = a.scores ? json(a.scores->cama2.value()) : json(nullptr);
            j["selected"] = a.selected;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << name << ',' << (a.scores ? format_double(a.scores->cama1.value()) : "NA") << ','
                      << (a.scores ? format_double(a.scores->cama2.value()) : "NA") << ','
                      << (a.selected ? "true" : "false") << '\n';
        }
    }
}

void run_build_graph(const Options& o, const fs::path& out_dir) {
    const auto corpus = read_input(o.build_graph.paths, out_dir);
    const auto graph = build_graph(corpus);
    const auto histogram = degree_histogram(graph);

    if (json_format(o)) {
        nlohmann::ordered_json j;
        j["nodes"] = graph.node_count();
        j["listeners"] = graph.listener_count();
        j["songs"] = graph.song_count();
        j["listener_song_edges"] = graph.listener_song_edge_count();
        j["song_song_edges"] = graph.song_song_edge_count();
        if (o.build_graph.stats) {
            auto& hist = j["degree_histogram"] = json::array();
            for (const auto& [degree, bucket] : histogram) {
                hist.push_back({{"degree", degree}, {"listener_nodes", bucket.listeners}, {"song_nodes", bucket.songs}});
            }
        }
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "nodes,listeners,songs,listener_song_edges,song_song_edges\n"
                  << graph.node_count() << ',' << graph.listener_count() << ',' << graph.song_count() << ','
                  << graph.listener_song_edge_count() << ',' << graph.song_song_edge_count() << '\n';
        if (o.build_graph.stats) {
            std::cout << "\ndegree,listener_nodes,song_nodes\n";
            for (const auto& [degree, bucket] : histogram) {
                std::cout << degree << ',' << bucket.listeners << ',' << bucket.songs << '\n';
            }
        }
    }

    if (!o.build_graph.dump_tp.empty()) {
        const auto tp = build_transition(graph);
        auto out = open_output(o.build_graph.dump_tp);
        write_transition_csv(out, tp);
    }
}

void run_recommend(const Options& o, const fs::path& out_dir) {
    const auto& r = o.recommend;
    const auto corpus = read_input(r.paths, out_dir);
    const auto listener = corpus.find_listener(r.listener);
    if (!listener) throw ValidationError("unknown listener '" + r.listener + "'");
    const auto graph = build_graph(corpus);
    const auto tp = build_transition(graph);
    const auto recs = recommend(corpus, graph, tp, *listener, walk_config(r.walk), r.top_n);

    if (!json_format(o)) std::cout << "rank,song,score\n";
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& song = corpus.song_name(recs[i].song);
        if (json_format(o)) {
            nlohmann::ordered_json j;
            j["rank"] = i + 1;
            j["song"] = song;
            j["score"] = recs[i].score;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << i + 1 << ',' << song << ',' << format_double(recs[i].score) << '\n';
        }
    }
}

void write_rows(const Options& o, const fs::path& out_dir, const std::string& stem,
                std::span<const EvalRow> rows) {
    const auto path = out_dir / (stem + (json_format(o) ? ".jsonl" : ".csv"));
    auto out = open_output(path);
    if (json_format(o)) {
        write_report_jsonl(out, rows);
    } else {
        write_report_csv(out, rows);
    }
    std::cerr << "wrote " << path.string() << '\n';
}

void run_evaluate(const Options& o, const fs::path& out_dir) {
    const auto& e = o.evaluate;
    const auto corpus = read_input(e.paths, out_dir);
    const auto row = evaluate(corpus, Thresholds{e.t1, e.t2}, walk_config(e.walk), e.top_n, o.global.seed);
    write_rows(o, out_dir, "evaluate", std::span<const EvalRow>(&row, 1));
}

void run_sweep(Options& o, const fs::path& out_dir) {
    auto& s = o.sweep;
    const auto corpus = read_input(s.paths, out_dir);
    SweepSpec spec;
    spec.alphas = s.alphas;
    spec.t1s = s.t1s;
    spec.t2s = s.t2s;
    spec.top_ns = s.top_ns;
    spec.base_alpha = s.base_alpha;
    spec.base_t1 = s.base_t1;
    spec.base_t2 = s.base_t2;
    spec.walk.maximum_step = s.max_steps;
    spec.walk.convergence_tol = s.tol;
    spec.validate();
    const auto base = spec.base_point();
    s.base_alpha = base.alpha;
    s.base_t1 = base.t1;
    s.base_t2 = base.t2;

    const auto rows = sweep(corpus, spec, o.global.seed);
    write_rows(o, out_dir, "sweep", rows);
}

void run_plots(const Options& o, const fs::path& out_dir) {
    const auto report_path = resolve(o.plots.report, out_dir, "sweep.csv");
    std::ifstream in(report_path, std::ios::binary);
    if (!in) throw IoError("cannot open " + report_path.string());
    const auto rows = read_report_csv(in, report_path.string());

    const auto plots_dir = resolve(o.plots.plots_dir, out_dir, "plots");
    fs::create_directories(plots_dir);
    for (const auto& table : plot_tables(rows)) {
        auto out = open_output(plots_dir / table.file_name());
        write_plot_csv(out, table);
    }
    std::cerr << "wrote 9 series to " << plots_dir.string() << '\n';
}

void write_sidecar(const Options& o, const std::string& subcommand, const fs::path& out_dir) {
    nlohmann::ordered_json j;
    j["subcommand"] = subcommand;
    j["seed"] = o.global.seed;
    j["format"] = o.global.format;
    const auto options = options_json(o, subcommand);
    for (const auto& [key, value] : options.items()) j[key] = value;
    auto out = open_output(out_dir / (subcommand + ".config.json"));
    out << j.dump(2) << '\n';
}

int run(int argc, char** argv) {
    Options o;
    std::string config_subcommand;
    if (const auto config = find_config_flag(argc, argv); !config.empty()) {
        config_subcommand = load_config(o, config);
    }

    CLI::App app{"Common-artist listener selection and random-walk song recommendation"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--seed", o.global.seed, "RNG seed for generation and splitting");
    app.add_option("--output-dir", o.output_dir, "Directory for output files and the config sidecar");
    app.add_option("--format", o.global.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--config", o.config_path, "JSON config sidecar from an earlier run");

    auto* gen = app.add_subcommand("generate", "Write a seeded synthetic corpus");
    add_paths(gen, o.generate.paths);
    gen->add_option("--n-listeners", o.generate.n_listeners);
    gen->add_option("--n-songs", o.generate.n_songs);
    gen->add_option("--n-artists", o.generate.n_artists);
    gen->add_option("--playlist-min", o.generate.playlist_min);
    gen->add_option("--playlist-max", o.generate.playlist_max);
    gen->add_option("--artists-min", o.generate.artists_min);
    gen->add_option("--artists-max", o.generate.artists_max);
    gen->add_option_function<double>(
        "--popularity-sigma", [&](const double& v) { o.generate.popularity_sigma = v; },
        "Song popularity spread over rank (default n-songs/4)");
    gen->add_option_function<double>(
        "--artist-sigma", [&](const double& v) { o.generate.artist_sigma = v; },
        "Artist popularity spread over rank (default n-artists/4)");

    auto* sel = app.add_subcommand("select-targets", "Print cama1, cama2 and selection per listener");
    add_paths(sel, o.select.paths);
    sel->add_option("--t1", o.select.t1, "cama1 threshold (strict)");
    sel->add_option("--t2", o.select.t2, "cama2 threshold (strict)");

    auto* bg = app.add_subcommand("build-graph", "Print graph statistics");
    add_paths(bg, o.build_graph.paths);
    bg->add_flag("--stats", o.build_graph.stats, "Include the degree histogram");
    bg->add_option("--dump-tp", o.build_graph.dump_tp, "Write transition matrix triples to this CSV");

    auto* rec = app.add_subcommand("recommend", "Rank unheard songs for one listener");
    add_paths(rec, o.recommend.paths);
    rec->add_option("--listener", o.recommend.listener, "Listener id as written in the playlists file")->required();
    add_walk(rec, o.recommend.walk);
    rec->add_option("--top-n", o.recommend.top_n);

    auto* ev = app.add_subcommand("evaluate", "Holdout evaluation at one configuration");
    add_paths(ev, o.evaluate.paths);
    add_walk(ev, o.evaluate.walk);
    ev->add_option("--t1", o.evaluate.t1);
    ev->add_option("--t2", o.evaluate.t2);
    ev->add_option("--top-n", o.evaluate.top_n);

    auto* sw = app.add_subcommand("sweep", "Vary alpha, t1 and t2 one at a time around a base point");
    add_paths(sw, o.sweep.paths);
    sw->add_option("--alphas", o.sweep.alphas)->delimiter(',');
    sw->add_option("--t1s", o.sweep.t1s)->delimiter(',');
    sw->add_option("--t2s", o.sweep.t2s)->delimiter(',');
    sw->add_option("--top-ns", o.sweep.top_ns)->delimiter(',');
    sw->add_option_function<double>("--base-alpha", [&](const double& v) { o.sweep.base_alpha = v; });
    sw->add_option_function<double>("--base-t1", [&](const double& v) { o.sweep.base_t1 = v; });
    sw->add_option_function<double>("--base-t2", [&](const double& v) { o.sweep.base_t2 = v; });
    sw->add_option("--max-steps", o.sweep.max_steps);
    sw->add_option("--tol", o.sweep.tol);

    auto* pl = app.add_subcommand("plots", "Write metric-vs-N series from a sweep report");
    pl->add_option("--report", o.plots.report, "Sweep CSV (default <output-dir>/sweep.csv)");
    pl->add_option("--plots-dir", o.plots.plots_dir, "Destination (default <output-dir>/plots)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto* chosen = app.get_subcommands().front();
    const std::string subcommand = chosen->get_name();
    if (!config_subcommand.empty() && config_subcommand != subcommand) {
        throw UsageError("config was written for '" + config_subcommand + "', not '" + subcommand + "'");
    }
    if (o.global.format != "csv" && o.global.format != "json") {
        throw UsageError("format must be csv or json");
    }

    const fs::path out_dir = o.output_dir;
    fs::create_directories(out_dir);

    if (subcommand == "generate") run_generate(o, out_dir);
    if (subcommand == "select-targets") run_select(o, out_dir);
    if (subcommand == "build-graph") run_build_graph(o, out_dir);
    if (subcommand == "recommend") run_recommend(o, out_dir);
    if (subcommand == "evaluate") run_evaluate(o, out_dir);
    if (subcommand == "sweep") run_sweep(o, out_dir);
    if (subcommand == "plots") run_plots(o, out_dir);

    write_sidecar(o, subcommand, out_dir);
    return 0;
}

}  // namespace
}  // namespace cama::cli

int main(int argc, char** argv) {
    try {
        return cama::cli::run(argc, argv);
    } catch (const cama::cli::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
