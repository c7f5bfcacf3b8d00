#pragma once

#include <cama/corpus.hpp>
#include <cama/graph.hpp>
#include <cama/transition.hpp>

#include <functional>
#include <span>
#include <vector>

namespace cama {

struct WalkConfig {
    /// Probability of following an edge; 1 - alpha restarts at the source.
    double alpha = 0.8;
    std::size_t maximum_step = 50;
    /// Stop once the L1 change between steps drops below this. 0 disables.
    double convergence_tol = 1e-10;

    /// Throws ConfigError.
    void validate() const;
};

/// Per-node ranking scores. Listener nodes come first, then songs.
struct ScoreVector {
    std::vector<double> scores;
    std::size_t listener_count = 0;
    /// Propagation steps actually performed.
    std::size_t steps = 0;

    [[nodiscard]] std::span<const double> songs() const {
        return std::span<const double>(scores).subspan(listener_count);
    }
    [[nodiscard]] double total() const;
};

/// Called after each step with the 1-based step number and current scores.
using StepObserver = std::function<void(std::size_t, std::span<const double>)>;

/// Random walk with restart from a listener node.
///
/// Starts from unit mass at the source. Each step builds a fresh vector:
/// every node x sends alpha * score(x) * P(x, y) to each out-neighbor y, and
/// the source then receives 1 - alpha. The update is synchronous. Mass that
/// reaches a node with an empty row is dropped.
///
/// Throws ConfigError for a bad config, or a source that is out of range or
/// is a song node.
[[nodiscard]] ScoreVector rwr_rank(const TransitionMatrix& tp, NodeIndex source,
                                   const WalkConfig& config, const StepObserver& observer = {});

/// Largest dimension rwr_oracle accepts.
inline constexpr std::size_t kOracleMaxDimension = 500;

/// Fixed point of the walk by dense LU solve of
/// (I - alpha P^T) s = (1 - alpha) e_source.
///
/// Independent of rwr_rank; used to verify it. Throws ConfigError when the
/// dimension exceeds kOracleMaxDimension or the system is singular.
[[nodiscard]] ScoreVector rwr_oracle(const TransitionMatrix& tp, NodeIndex source, double alpha);

struct Recommendation {
    SongId song;
    double score;
};

/// Songs not in the playlist ranked by score descending, ties broken by
/// ascending song id; at most top_n of them.
[[nodiscard]] std::vector<Recommendation> top_unheard(const ScoreVector& scores,
                                                      std::span<const SongId> playlist,
                                                      std::size_t top_n);

/// Walks from the listener over the graph described by tp and returns the
/// best top_n songs outside the listener's playlist in `corpus`.
[[nodiscard]] std::vector<Recommendation> recommend(const Corpus& corpus, const HeteroGraph& graph,
                                                    const TransitionMatrix& tp, ListenerId listener,
                                                    const WalkConfig& config, std::size_t top_n);

}  // namespace cama
