#include <cama/evaluator.hpp>

#include <cama/error.hpp>
#include <cama/rng.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

namespace cama {

std::size_t test_size_for(std::size_t playlist_len) {
    const auto fifth = static_cast<std::size_t>(std::lround(static_cast<double>(playlist_len) / 5.0));
    return std::max<std::size_t>(2, fifth);
}

SplitCorpus split(const Corpus& corpus, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<SongId>> train(corpus.listener_count());
    std::vector<std::vector<SongId>> test(corpus.listener_count());

    for (std::size_t l = 0; l < corpus.listener_count(); ++l) {
        const auto listener = ListenerId::from_index(l);
        const auto playlist = corpus.playlist(listener);
        const std::size_t k = playlist.size();
        if (k < 3) {
            throw ValidationError("listener '" + corpus.listener_name(listener) + "' has " +
                                  std::to_string(k) + " songs; splitting needs at least 3");
        }
        const std::size_t held_out = test_size_for(k);

        // Partial Fisher-Yates over positions picks a uniform subset.
        std::vector<std::size_t> positions(k);
        for (std::size_t i = 0; i < k; ++i) positions[i] = i;
        for (std::size_t i = 0; i < held_out; ++i) {
            const auto j = static_cast<std::size_t>(rng.between(i, k - 1));
            std::swap(positions[i], positions[j]);
        }
        std::vector<bool> is_test(k, false);
        for (std::size_t i = 0; i < held_out; ++i) is_test[positions[i]] = true;

        for (std::size_t i = 0; i < k; ++i) (is_test[i] ? test[l] : train[l]).push_back(playlist[i]);
    }
    return SplitCorpus{corpus.with_playlists(std::move(train)), std::move(test)};
}

bool has_test_edges(const HeteroGraph& graph, const SplitCorpus& split) {
    for (std::size_t l = 0; l < split.test.size(); ++l) {
        for (SongId s : split.test[l]) {
            if (graph.has_edge(graph.listener_node(ListenerId::from_index(l)), graph.song_node(s))) {
                return true;
            }
        }
    }
    return false;
}

ListenerMetrics score_listener(std::span<const SongId> recommended, std::span<const SongId> test,
                               std::size_t top_n) {
    if (top_n == 0) throw ConfigError("top_n must be positive");
    if (test.empty()) throw ValidationError("test set is empty");
    std::size_t hits = 0;
    for (SongId s : recommended) {
        if (std::find(test.begin(), test.end(), s) != test.end()) ++hits;
    }
    ListenerMetrics m;
    m.precision = static_cast<double>(hits) / static_cast<double>(top_n);
    m.recall = static_cast<double>(hits) / static_cast<double>(test.size());
    if (m.precision + m.recall > 0.0) m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
    return m;
}

Evaluation::Evaluation(SplitCorpus split, const WalkConfig& walk)
    : split_(std::move(split)),
      walk_(walk),
      graph_(build_graph(split_.train)),
      tp_(build_transition(graph_)) {
    walk_.validate();
    train_scores_.reserve(split_.train.listener_count());
    for (std::size_t l = 0; l < split_.train.listener_count(); ++l) {
        const auto playlist = split_.train.playlist(ListenerId::from_index(l));
        if (playlist.size() >= 2) {
            train_scores_.emplace_back(cama_scores(playlist, split_.train));
        } else {
            train_scores_.emplace_back(std::nullopt);
        }
    }
}

std::vector<ListenerId> Evaluation::targets(const Thresholds& thresholds) const {
    thresholds.validate();
    std::vector<ListenerId> out;
    for (std::size_t l = 0; l < train_scores_.size(); ++l) {
        if (train_scores_[l] && is_target(*train_scores_[l], thresholds)) {
            out.push_back(ListenerId::from_index(l));
        }
    }
    return out;
}

const std::vector<SongId>& Evaluation::ranking(ListenerId listener, double alpha) {
    auto& per_listener = rankings_[alpha];
    if (per_listener.empty()) per_listener.resize(split_.train.listener_count());
    auto& slot = per_listener.at(listener.index());
    if (!slot) {
        WalkConfig config = walk_;
        config.alpha = alpha;
        const auto scores = rwr_rank(tp_, graph_.listener_node(listener), config);
        std::vector<SongId> ranked;
        for (const auto& rec : top_unheard(scores, split_.train.playlist(listener), graph_.song_count())) {
            ranked.push_back(rec.song);
        }
        slot = std::move(ranked);
    }
    return *slot;
}

EvalRow Evaluation::run(const Thresholds& thresholds, double alpha, std::size_t top_n, std::string label) {
    if (top_n == 0) throw ConfigError("top_n must be positive");
    WalkConfig check = walk_;
    check.alpha = alpha;
    check.validate();

    EvalRow row;
    row.label = std::move(label);
    row.alpha = alpha;
    row.t1 = thresholds.cama1;
    row.t2 = thresholds.cama2;
    row.top_n = top_n;

    const auto selected = targets(thresholds);
    row.n_targets = selected.size();
    if (selected.empty()) return row;

    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    for (ListenerId l : selected) {
        const auto& ranked = ranking(l, alpha);
        const auto recs = std::span<const SongId>(ranked).first(std::min(top_n, ranked.size()));
        if (audit_) audit_(l, recs);
        const auto m = score_listener(recs, split_.test.at(l.index()), top_n);
        precision += m.precision;
        recall += m.recall;
        f1 += m.f1;
    }
    const auto count = static_cast<double>(selected.size());
    row.precision = precision / count;
    row.recall = recall / count;
    row.f1 = f1 / count;
    return row;
}

EvalRow evaluate(const Corpus& corpus, const Thresholds& thresholds, const WalkConfig& walk,
                 std::size_t top_n, std::uint64_t seed) {
    Evaluation evaluation(split(corpus, seed), walk);
    return evaluation.run(thresholds, walk.alpha, top_n);
}

namespace {

double pick_base(const std::optional<double>& explicit_value, const std::vector<double>& grid,
                 double fallback) {
    if (explicit_value) return *explicit_value;
    if (std::find(grid.begin(), grid.end(), fallback) != grid.end()) return fallback;
    return grid.front();
}

}  // namespace

SweepSpec::Point SweepSpec::base_point() const {
    const Thresholds defaults;
    return Point{pick_base(base_alpha, alphas, WalkConfig{}.alpha), pick_base(base_t1, t1s, defaults.cama1),
                 pick_base(base_t2, t2s, defaults.cama2)};
}

void SweepSpec::validate() const {
    if (alphas.empty() || t1s.empty() || t2s.empty() || top_ns.empty()) {
        throw ConfigError("sweep grids must be non-empty");
    }
    walk.validate();
    const auto base = base_point();
    for (double a : alphas) {
        WalkConfig probe = walk;
        probe.alpha = a;
        probe.validate();
    }
    WalkConfig probe = walk;
    probe.alpha = base.alpha;
    probe.validate();
    for (double t : t1s) Thresholds{t, base.t2}.validate();
    for (double t : t2s) Thresholds{base.t1, t}.validate();
    Thresholds{base.t1, base.t2}.validate();
    for (std::size_t n : top_ns) {
        if (n == 0) throw ConfigError("top_n values must be positive");
    }
}

std::vector<EvalRow> sweep(Evaluation& evaluation, const SweepSpec& spec) {
    spec.validate();
    const auto base = spec.base_point();

    std::vector<EvalRow> rows;
    std::set<std::tuple<double, double, double, std::size_t>> seen;
    auto emit = [&](double alpha, double t1, double t2, const char* varied) {
        const bool is_base = alpha == base.alpha && t1 == base.t1 && t2 == base.t2;
        for (std::size_t n : spec.top_ns) {
            if (!seen.emplace(alpha, t1, t2, n).second) continue;
            rows.push_back(evaluation.run(Thresholds{t1, t2}, alpha, n, is_base ? "base" : varied));
        }
    };
    for (double a : spec.alphas) emit(a, base.t1, base.t2, "alpha");
    for (double t : spec.t1s) emit(base.alpha, t, base.t2, "t1");
    for (double t : spec.t2s) emit(base.alpha, base.t1, t, "t2");
    return rows;
}

std::vector<EvalRow> sweep(const Corpus& corpus, const SweepSpec& spec, std::uint64_t seed) {
    spec.validate();
    Evaluation evaluation(split(corpus, seed), spec.walk);
    return sweep(evaluation, spec);
}

}  // namespace cama
