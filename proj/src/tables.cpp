#include "aocc/tables.hpp"

#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>

#include "aocc/io_formats.hpp"

namespace aocc {

void write_curve_csv(const AoccResult& result, Timestamp duration_us, std::ostream& out) {
    out << "# aocc-ccc v1 duration_us=" << duration_us
        << " aocc_sum=" << format_double(result.aocc_sum)
        << " aocc_trapezoid=" << format_double(result.aocc_trapezoid) << "\n";
    out << "dt_us,c_avg\n";
    for (const auto& pt : result.curve.points) {
        out << pt.dt << "," << format_double(pt.c_avg) << "\n";
    }
}

ContrastCurve read_curve_csv(std::istream& in) {
    NumericTable table = read_numeric_csv(in);
    const int dt = table.column("dt_us");
    const int c = table.column("c_avg");
    if (dt < 0 || c < 0) throw ParseError(0, "curve table needs dt_us and c_avg columns");
    ContrastCurve curve;
    for (const auto& row : table.rows) {
        curve.points.push_back({Timestamp(row[std::size_t(dt)]), row[std::size_t(c)]});
    }
    return curve;
}

void write_sweep_csv(const SweepResult& sweep, const std::string& param_name,
                     Timestamp duration_us, std::ostream& out) {
    out << "# aocc-sweep v1 param=" << param_name << " duration_us=" << duration_us;
    if (!sweep.entries.empty()) {
        out << " argmax=" << format_double(sweep.entries[sweep.argmax].parameter);
    }
    out << "\n";
    out << "param,aocc_sum,aocc_trapezoid\n";
    for (const auto& e : sweep.entries) {
        out << format_double(e.parameter) << "," << format_double(e.result.aocc_sum) << ","
            << format_double(e.result.aocc_trapezoid) << "\n";
    }
}

void write_roc_csv(const RocCurve& curve, std::ostream& out) {
    out << "# aocc-roc v1\n";
    out << "threshold,fpr,tpr\n";
    for (const auto& p : curve.points) {
        if (p.threshold != p.threshold) continue;  // anchors
        out << format_double(p.threshold) << "," << format_double(p.fpr) << ","
            << format_double(p.tpr) << "\n";
    }
    out << "# auc=" << format_double(curve.auc) << "\n";
}

void write_eval_csv(const EvalRow& row, std::ostream& out) {
    out << "# aocc-eval v1";
    if (row.esr) out << " esr_m=" << format_double(row.esr->m);
    out << "\n";
    std::vector<std::string> header;
    std::vector<std::string> values;
    if (row.labeled) {
        const auto& r = *row.labeled;
        header.insert(header.end(), {"tp", "tn", "fp", "fn", "nerr", "verr", "snr_db", "acc", "tpr", "fpr"});
        values.insert(values.end(),
                      {std::to_string(r.counts.tp), std::to_string(r.counts.tn),
                       std::to_string(r.counts.fp), std::to_string(r.counts.fn),
                       format_double(r.nerr), format_double(r.verr), format_double(r.snr_db),
                       format_double(r.acc), format_double(r.tpr), format_double(r.fpr)});
    }
    if (row.esr) {
        header.insert(header.end(), {"ntss", "ln", "esr", "m"});
        values.insert(values.end(), {format_double(row.esr->ntss), format_double(row.esr->ln),
                                     format_double(row.esr->esr), format_double(row.esr->m)});
    }
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << "\n";
}

int NumericTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return int(i);
    }
    return -1;
}

NumericTable read_numeric_csv(std::istream& in) {
    NumericTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(f);
        if (table.columns.empty()) {
            table.columns = fields;
            continue;
        }
        if (fields.size() != table.columns.size()) {
            throw ParseError(lineno, "expected " + std::to_string(table.columns.size()) + " fields");
        }
        std::vector<double> row;
        for (const auto& field : fields) {
            if (field == "nan") { row.push_back(std::numeric_limits<double>::quiet_NaN()); continue; }
            if (field == "inf") { row.push_back(std::numeric_limits<double>::infinity()); continue; }
            if (field == "-inf") { row.push_back(-std::numeric_limits<double>::infinity()); continue; }
            double v = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (ec != std::errc() || ptr != field.data() + field.size()) {
                throw ParseError(lineno, "bad number '" + field + "'");
            }
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    if (table.columns.empty()) throw ParseError(lineno, "missing header line");
    return table;
}

}  // namespace aocc
