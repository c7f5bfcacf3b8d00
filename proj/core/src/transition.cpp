#include <cama/transition.hpp>

#include <cama/error.hpp>
#include <cama/format.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace cama {

TransitionMatrix::TransitionMatrix(std::size_t listener_count, std::size_t dimension,
                                   std::vector<std::size_t> row_offsets,
                                   std::vector<NodeIndex> columns,
                                   std::vector<double> probabilities)
    : listeners_(listener_count),
      dimension_(dimension),
      offsets_(std::move(row_offsets)),
      columns_(std::move(columns)),
      values_(std::move(probabilities)) {
    if (listeners_ > dimension_) throw ValidationError("listener count exceeds matrix dimension");
    if (offsets_.size() != dimension_ + 1 || offsets_.front() != 0 || offsets_.back() != columns_.size() ||
        columns_.size() != values_.size()) {
        throw ValidationError("inconsistent CSR arrays");
    }
    for (std::size_t r = 0; r < dimension_; ++r) {
        if (offsets_[r] > offsets_[r + 1]) throw ValidationError("row offsets are not monotone");
        for (std::size_t k = offsets_[r]; k < offsets_[r + 1]; ++k) {
            if (columns_[k] >= dimension_) throw ValidationError("column index out of range");
            if (k > offsets_[r] && columns_[k] <= columns_[k - 1]) {
                throw ValidationError("columns within a row must be strictly ascending");
            }
        }
    }
}

std::span<const NodeIndex> TransitionMatrix::row_columns(NodeIndex row) const {
    if (row >= dimension_) throw ValidationError("row " + std::to_string(row) + " out of range");
    return std::span<const NodeIndex>(columns_).subspan(offsets_[row], offsets_[row + 1] - offsets_[row]);
}

std::span<const double> TransitionMatrix::row_values(NodeIndex row) const {
    if (row >= dimension_) throw ValidationError("row " + std::to_string(row) + " out of range");
    return std::span<const double>(values_).subspan(offsets_[row], offsets_[row + 1] - offsets_[row]);
}

double TransitionMatrix::at(NodeIndex row, NodeIndex column) const {
    const auto cols = row_columns(row);
    const auto it = std::lower_bound(cols.begin(), cols.end(), column);
    if (it == cols.end() || *it != column) return 0.0;
    return row_values(row)[static_cast<std::size_t>(it - cols.begin())];
}

TransitionMatrix build_transition(const HeteroGraph& graph) {
    // Edge weights are the 0/1 adjacency indicator; the formulas below are
    // written for general weights.
    constexpr auto weight = [](NodeIndex, NodeIndex) { return 1.0; };

    const std::size_t dim = graph.node_count();
    std::vector<std::size_t> offsets{0};
    std::vector<NodeIndex> columns;
    std::vector<double> values;
    offsets.reserve(dim + 1);

    for (NodeIndex i = 0; i < dim; ++i) {
        const auto adj = graph.neighbors(i);
        // Listener rows: only listener->song weights. Song rows: listener and
        // song weights share one denominator.
        double denominator = 0.0;
        for (NodeIndex j : adj) denominator += weight(i, j);
        for (NodeIndex j : adj) {
            columns.push_back(j);
            values.push_back(weight(i, j) / denominator);
        }
        offsets.push_back(columns.size());
    }
    return TransitionMatrix(graph.listener_count(), dim, std::move(offsets), std::move(columns),
                            std::move(values));
}

std::vector<RowDeviation> row_stochastic_check(const TransitionMatrix& tp, double tolerance) {
    std::vector<RowDeviation> report;
    for (NodeIndex r = 0; r < tp.dimension(); ++r) {
        double sum = 0.0;
        for (double p : tp.row_values(r)) sum += p;
        if (std::abs(sum) > tolerance && std::abs(sum - 1.0) > tolerance) report.push_back({r, sum});
    }
    return report;
}

void write_transition_csv(std::ostream& out, const TransitionMatrix& tp) {
    out << "row,col,prob\n";
    for (NodeIndex r = 0; r < tp.dimension(); ++r) {
        const auto cols = tp.row_columns(r);
        const auto vals = tp.row_values(r);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            out << r << ',' << cols[k] << ',' << format_double(vals[k]) << '\n';
        }
    }
}

}  // namespace cama
