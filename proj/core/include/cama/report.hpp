#pragma once

#include <cama/evaluator.hpp>

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cama {

// Report columns, in order:
//   label,alpha,t1,t2,top_n,n_targets,macro_precision,macro_recall,macro_f1
// Metrics are per-listener values averaged over target listeners (macro_f1
// is the mean of per-listener F1). Absent metrics are written as NA in CSV
// and null in JSON.

void write_report_csv(std::ostream& out, std::span<const EvalRow> rows);

/// One JSON object per line with the same keys as the CSV columns.
void write_report_jsonl(std::ostream& out, std::span<const EvalRow> rows);

/// Reads what write_report_csv writes. Throws ParseError.
[[nodiscard]] std::vector<EvalRow> read_report_csv(std::istream& in, const std::string& name = "report");

/// Metric against N, one column per value of the swept parameter, holding
/// the other two parameters at the base point.
struct PlotTable {
    std::string metric;     // precision | recall | f1
    std::string parameter;  // alpha | t1 | t2
    std::vector<double> values;
    std::vector<std::size_t> top_ns;
    std::vector<std::vector<std::optional<double>>> cells;  // [top_n][value]

    [[nodiscard]] std::string file_name() const { return metric + "_by_" + parameter + ".csv"; }
};

/// Nine tables (3 metrics x 3 parameters) from a sweep report. The base
/// point is taken from the rows labelled "base"; throws ValidationError if
/// there are none.
[[nodiscard]] std::vector<PlotTable> plot_tables(std::span<const EvalRow> rows);

void write_plot_csv(std::ostream& out, const PlotTable& table);

}  // namespace cama
