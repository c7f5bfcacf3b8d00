#pragma once

#include <cama/graph.hpp>

#include <iosfwd>
#include <span>
#include <vector>

namespace cama {

/// Row-stochastic transition probabilities over listener+song nodes, stored
/// row-major in compressed sparse row form with ascending columns.
///
/// Block layout follows the node indexing: the listener->listener block is
/// structurally empty, listener rows spread over their songs, and song rows
/// spread over listeners and related songs with one shared denominator.
/// Rows of isolated nodes are empty.
class TransitionMatrix {
public:
    /// Checks CSR shape only (offsets monotone, columns in range and
    /// ascending within a row). Probabilities are taken as given.
    TransitionMatrix(std::size_t listener_count, std::size_t dimension,
                     std::vector<std::size_t> row_offsets,
                     std::vector<NodeIndex> columns,
                     std::vector<double> probabilities);

    [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
    [[nodiscard]] std::size_t listener_count() const noexcept { return listeners_; }
    [[nodiscard]] std::size_t nonzero_count() const noexcept { return columns_.size(); }

    [[nodiscard]] std::span<const NodeIndex> row_columns(NodeIndex row) const;
    [[nodiscard]] std::span<const double> row_values(NodeIndex row) const;

    /// Entry lookup, 0 where no entry is stored.
    [[nodiscard]] double at(NodeIndex row, NodeIndex column) const;

private:
    std::size_t listeners_;
    std::size_t dimension_;
    std::vector<std::size_t> offsets_;
    std::vector<NodeIndex> columns_;
    std::vector<double> values_;
};

[[nodiscard]] TransitionMatrix build_transition(const HeteroGraph& graph);

struct RowDeviation {
    NodeIndex row;
    double sum;
};

/// Rows whose sum is neither 0 nor 1 within tolerance.
[[nodiscard]] std::vector<RowDeviation> row_stochastic_check(const TransitionMatrix& tp,
                                                             double tolerance = 1e-12);

/// "row,col,prob" header then one line per stored entry in (row, col) order.
void write_transition_csv(std::ostream& out, const TransitionMatrix& tp);

}  // namespace cama
