#pragma once

#include <cama/corpus.hpp>
#include <cama/graph.hpp>
#include <cama/rwr.hpp>
#include <cama/target_selector.hpp>
#include <cama/transition.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cama {

/// Per-listener holdout. train keeps the remaining songs in their original
/// order; test[l] holds listener l's held-out songs.
struct SplitCorpus {
    Corpus train;
    std::vector<std::vector<SongId>> test;
};

/// max(2, round(k / 5)): a 4:1 split that always holds out at least two.
[[nodiscard]] std::size_t test_size_for(std::size_t playlist_len);

/// Deterministic in seed. Throws ValidationError if any playlist has fewer
/// than three songs.
[[nodiscard]] SplitCorpus split(const Corpus& corpus, std::uint64_t seed);

/// True if the graph links any listener to one of its held-out songs.
[[nodiscard]] bool has_test_edges(const HeteroGraph& graph, const SplitCorpus& split);

struct ListenerMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// precision = hits / top_n, recall = hits / |test|, f1 their harmonic mean
/// (0 when both are 0).
[[nodiscard]] ListenerMetrics score_listener(std::span<const SongId> recommended,
                                             std::span<const SongId> test, std::size_t top_n);

/// One evaluated configuration. Metrics are macro averages over target
/// listeners and are absent when there are no targets.
struct EvalRow {
    std::string label;  // "base" or the name of the parameter varied from it
    double alpha = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
    std::size_t top_n = 0;
    std::size_t n_targets = 0;
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> f1;

    friend bool operator==(const EvalRow&, const EvalRow&) = default;
};

/// Called with every recommendation list the evaluation produces.
using RecommendationAudit = std::function<void(ListenerId, std::span<const SongId>)>;

/// A fixed split with its training graph and transition matrix. Walk results
/// are cached per (alpha, listener), so rows sharing alpha reuse them.
class Evaluation {
public:
    /// walk.alpha is ignored; alpha is chosen per row.
    Evaluation(SplitCorpus split, const WalkConfig& walk);

    [[nodiscard]] const SplitCorpus& split() const noexcept { return split_; }
    [[nodiscard]] const HeteroGraph& graph() const noexcept { return graph_; }
    [[nodiscard]] const TransitionMatrix& transition() const noexcept { return tp_; }

    /// Targets are selected on the training playlists.
    [[nodiscard]] std::vector<ListenerId> targets(const Thresholds& thresholds) const;

    /// Unheard training songs for the listener, best first.
    const std::vector<SongId>& ranking(ListenerId listener, double alpha);

    EvalRow run(const Thresholds& thresholds, double alpha, std::size_t top_n, std::string label = "base");

    void set_audit(RecommendationAudit audit) { audit_ = std::move(audit); }

private:
    SplitCorpus split_;
    WalkConfig walk_;
    HeteroGraph graph_;
    TransitionMatrix tp_;
    std::vector<std::optional<CamaScores>> train_scores_;
    std::map<double, std::vector<std::optional<std::vector<SongId>>>> rankings_;
    RecommendationAudit audit_;
};

/// split -> select targets on train -> build graph on train -> recommend ->
/// macro-averaged precision, recall and F1.
[[nodiscard]] EvalRow evaluate(const Corpus& corpus, const Thresholds& thresholds,
                               const WalkConfig& walk, std::size_t top_n, std::uint64_t seed);

/// Grids for one-at-a-time sweeps around a base point.
///
/// Each parameter is varied over its list while the other two stay at the
/// base point, for every N. A base value left unset is the default
/// (alpha 0.8, t1 0.4, t2 0.5) if the list contains it, else the first list
/// element. Rows repeated across series appear once.
struct SweepSpec {
    std::vector<double> alphas{0.2, 0.4, 0.6, 0.8};
    std::vector<double> t1s{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
    std::vector<double> t2s{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::vector<std::size_t> top_ns{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::optional<double> base_alpha;
    std::optional<double> base_t1;
    std::optional<double> base_t2;
    /// maximum_step and convergence_tol for every walk.
    WalkConfig walk;

    struct Point {
        double alpha;
        double t1;
        double t2;
    };
    [[nodiscard]] Point base_point() const;

    /// Throws ConfigError on empty lists or out-of-range values.
    void validate() const;
};

/// Rows in order: alpha series, t1 series, t2 series; within a series by
/// list order then N.
[[nodiscard]] std::vector<EvalRow> sweep(Evaluation& evaluation, const SweepSpec& spec);
[[nodiscard]] std::vector<EvalRow> sweep(const Corpus& corpus, const SweepSpec& spec, std::uint64_t seed);

}  // namespace cama
