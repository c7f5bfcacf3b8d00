#include <cama/rwr.hpp>

#include <cama/error.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cama {

void WalkConfig::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");
    if (maximum_step < 1) throw ConfigError("maximum_step must be at least 1");
    if (!(convergence_tol >= 0.0)) throw ConfigError("convergence_tol must be non-negative");
}

double ScoreVector::total() const {
    return std::accumulate(scores.begin(), scores.end(), 0.0);
}

ScoreVector rwr_rank(const TransitionMatrix& tp, NodeIndex source, const WalkConfig& config,
                     const StepObserver& observer) {
    config.validate();
    if (source >= tp.dimension()) {
        throw ConfigError("source node " + std::to_string(source) + " out of range");
    }
    if (source >= tp.listener_count()) {
        throw ConfigError("source node " + std::to_string(source) + " is a song, not a listener");
    }

    const std::size_t dim = tp.dimension();
    ScoreVector result{std::vector<double>(dim, 0.0), tp.listener_count(), 0};
    auto& scores = result.scores;
    scores[source] = 1.0;

    std::vector<double> next(dim);
    for (std::size_t step = 1; step <= config.maximum_step; ++step) {
        std::fill(next.begin(), next.end(), 0.0);
        for (NodeIndex x = 0; x < dim; ++x) {
            const double mass = scores[x];
            if (mass == 0.0) continue;
            const auto cols = tp.row_columns(x);
            const auto vals = tp.row_values(x);
            const double outgoing = config.alpha * mass;
            for (std::size_t k = 0; k < cols.size(); ++k) next[cols[k]] += outgoing * vals[k];
        }
        next[source] += 1.0 - config.alpha;

        double change = 0.0;
        for (NodeIndex v = 0; v < dim; ++v) change += std::abs(next[v] - scores[v]);
        scores.swap(next);
        result.steps = step;
        if (observer) observer(step, scores);
        if (config.convergence_tol > 0.0 && change < config.convergence_tol) break;
    }
    return result;
}

ScoreVector rwr_oracle(const TransitionMatrix& tp, NodeIndex source, double alpha) {
    const std::size_t dim = tp.dimension();
    if (dim > kOracleMaxDimension) {
        throw ConfigError("oracle limited to " + std::to_string(kOracleMaxDimension) +
                          " nodes, matrix has " + std::to_string(dim));
    }
    if (source >= dim) throw ConfigError("source node " + std::to_string(source) + " out of range");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");

    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n);
    for (NodeIndex x = 0; x < dim; ++x) {
        const auto cols = tp.row_columns(x);
        const auto vals = tp.row_values(x);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            system(static_cast<Eigen::Index>(cols[k]), static_cast<Eigen::Index>(x)) -= alpha * vals[k];
        }
    }
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs(static_cast<Eigen::Index>(source)) = 1.0 - alpha;

    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
    if (!(lu.rcond() > 1e-13)) throw ConfigError("walk system is singular");
    const Eigen::VectorXd solution = lu.solve(rhs);

    ScoreVector result{std::vector<double>(solution.data(), solution.data() + n),
                       std::min(tp.listener_count(), dim), 0};
    return result;
}

std::vector<Recommendation> top_unheard(const ScoreVector& scores, std::span<const SongId> playlist,
                                        std::size_t top_n) {
    if (top_n == 0) throw ConfigError("top_n must be positive");
    const auto songs = scores.songs();
    std::vector<bool> heard(songs.size(), false);
    for (SongId s : playlist) {
        if (s.index() < heard.size()) heard[s.index()] = true;
    }

    std::vector<Recommendation> candidates;
    for (std::size_t s = 0; s < songs.size(); ++s) {
        if (!heard[s]) candidates.push_back({SongId::from_index(s), songs[s]});
    }
    const auto keep = std::min(top_n, candidates.size());
    std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(keep),
                      candidates.end(), [](const Recommendation& a, const Recommendation& b) {
                          if (a.score != b.score) return a.score > b.score;
                          return a.song < b.song;
                      });
    candidates.resize(keep);
    return candidates;
}

std::vector<Recommendation> recommend(const Corpus& corpus, const HeteroGraph& graph,
                                      const TransitionMatrix& tp, ListenerId listener,
                                      const WalkConfig& config, std::size_t top_n) {
    if (listener.index() >= corpus.listener_count()) {
        throw ValidationError("listener id " + std::to_string(listener.value) + " out of range");
    }
    if (graph.listener_count() != corpus.listener_count() || graph.song_count() != corpus.song_count() ||
        tp.dimension() != graph.node_count() || tp.listener_count() != graph.listener_count()) {
        throw ValidationError("corpus, graph and transition matrix disagree on node counts");
    }
    const auto scores = rwr_rank(tp, graph.listener_node(listener), config);
    return top_unheard(scores, corpus.playlist(listener), top_n);
}

}  // namespace cama
