#include <cama/report.hpp>

#include <cama/error.hpp>
#include <cama/format.hpp>

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace cama {

namespace {

constexpr const char* kHeader =
    "label,alpha,t1,t2,top_n,n_targets,macro_precision,macro_recall,macro_f1";

std::string format_metric(const std::optional<double>& value) {
    return value ? format_double(*value) : "NA";
}

nlohmann::json metric_json(const std::optional<double>& value) {
    return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream stream(line);
    std::string field;
    while (std::getline(stream, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

template <typename T>
bool parse_number(const std::string& text, T& out) {
    const auto* end = text.data() + text.size();
    const auto result = std::from_chars(text.data(), end, out);
    return result.ec == std::errc{} && result.ptr == end;
}

}  // namespace

void write_report_csv(std::ostream& out, std::span<const EvalRow> rows) {
    out << kHeader << '\n';
    for (const auto& r : rows) {
        out << r.label << ',' << format_double(r.alpha) << ',' << format_double(r.t1) << ','
            << format_double(r.t2) << ',' << r.top_n << ',' << r.n_targets << ','
            << format_metric(r.precision) << ',' << format_metric(r.recall) << ',' << format_metric(r.f1)
            << '\n';
    }
}

void write_report_jsonl(std::ostream& out, std::span<const EvalRow> rows) {
    for (const auto& r : rows) {
        nlohmann::ordered_json obj;
        obj["label"] = r.label;
        obj["alpha"] = r.alpha;
        obj["t1"] = r.t1;
        obj["t2"] = r.t2;
        obj["top_n"] = r.top_n;
        obj["n_targets"] = r.n_targets;
        obj["macro_precision"] = metric_json(r.precision);
        obj["macro_recall"] = metric_json(r.recall);
        obj["macro_f1"] = metric_json(r.f1);
        out << obj.dump() << '\n';
    }
}

std::vector<EvalRow> read_report_csv(std::istream& in, const std::string& name) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line) || line != kHeader) throw ParseError(name, line_no, "unexpected header");

    std::vector<EvalRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        const auto fields = split_fields(line);
        if (fields.size() != 9) throw ParseError(name, line_no, "expected 9 fields");
        EvalRow r;
        r.label = fields[0];
        bool ok = parse_number(fields[1], r.alpha) && parse_number(fields[2], r.t1) &&
                  parse_number(fields[3], r.t2) && parse_number(fields[4], r.top_n) &&
                  parse_number(fields[5], r.n_targets);
        std::optional<double>* metrics[] = {&r.precision, &r.recall, &r.f1};
        for (std::size_t i = 0; i < 3 && ok; ++i) {
            if (fields[6 + i] == "NA") continue;
            double v = 0.0;
            ok = parse_number(fields[6 + i], v);
            *metrics[i] = v;
        }
        if (!ok) throw ParseError(name, line_no, "malformed number");
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<PlotTable> plot_tables(std::span<const EvalRow> rows) {
    const auto base_it = std::find_if(rows.begin(), rows.end(), [](const EvalRow& r) { return r.label == "base"; });
    if (base_it == rows.end()) throw ValidationError("sweep report has no base row");
    const double base_alpha = base_it->alpha;
    const double base_t1 = base_it->t1;
    const double base_t2 = base_it->t2;

    std::vector<std::size_t> top_ns;
    for (const auto& r : rows) top_ns.push_back(r.top_n);
    std::sort(top_ns.begin(), top_ns.end());
    top_ns.erase(std::unique(top_ns.begin(), top_ns.end()), top_ns.end());

    struct Axis {
        const char* name;
        double EvalRow::*field;
    };
    const Axis axes[] = {{"alpha", &EvalRow::alpha}, {"t1", &EvalRow::t1}, {"t2", &EvalRow::t2}};
    struct Metric {
        const char* name;
        std::optional<double> EvalRow::*field;
    };
    const Metric metrics[] = {{"precision", &EvalRow::precision}, {"recall", &EvalRow::recall}, {"f1", &EvalRow::f1}};

    auto on_axis = [&](const EvalRow& r, const Axis& axis) {
        // The other two parameters sit at the base point.
        const bool alpha_ok = axis.field == &EvalRow::alpha || r.alpha == base_alpha;
        const bool t1_ok = axis.field == &EvalRow::t1 || r.t1 == base_t1;
        const bool t2_ok = axis.field == &EvalRow::t2 || r.t2 == base_t2;
        return alpha_ok && t1_ok && t2_ok;
    };

    std::vector<PlotTable> tables;
    for (const auto& metric : metrics) {
        for (const auto& axis : axes) {
            PlotTable table{metric.name, axis.name, {}, top_ns, {}};
            for (const auto& r : rows) {
                if (on_axis(r, axis)) table.values.push_back(r.*(axis.field));
            }
            std::sort(table.values.begin(), table.values.end());
            table.values.erase(std::unique(table.values.begin(), table.values.end()), table.values.end());

            table.cells.assign(top_ns.size(), std::vector<std::optional<double>>(table.values.size()));
            for (const auto& r : rows) {
                if (!on_axis(r, axis)) continue;
                const auto n = static_cast<std::size_t>(
                    std::lower_bound(top_ns.begin(), top_ns.end(), r.top_n) - top_ns.begin());
                const auto v = static_cast<std::size_t>(
                    std::lower_bound(table.values.begin(), table.values.end(), r.*(axis.field)) -
                    table.values.begin());
                table.cells[n][v] = r.*(metric.field);
            }
            tables.push_back(std::move(table));
        }
    }
    return tables;
}

void write_plot_csv(std::ostream& out, const PlotTable& table) {
    out << "top_n";
    for (double v : table.values) out << ',' << table.parameter << '=' << format_double(v);
    out << '\n';
    for (std::size_t n = 0; n < table.top_ns.size(); ++n) {
        out << table.top_ns[n];
        for (const auto& cell : table.cells[n]) out << ',' << format_metric(cell);
        out << '\n';
    }
}

}  // namespace cama
