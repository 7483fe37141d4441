#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "aocc/ccc_aocc.hpp"
#include "aocc/esr_metric.hpp"
#include "aocc/labeled_metrics.hpp"

namespace aocc {

// CSV tables emitted by the command-line tool. Each starts with a
// `# aocc-<kind> v1 ...` comment naming the schema, then a header row.

/// `dt_us,c_avg`; the comment line carries the stream duration and both areas.
void write_curve_csv(const AoccResult& result, Timestamp duration_us, std::ostream& out);
ContrastCurve read_curve_csv(std::istream& in);

/// `param,aocc_sum,aocc_trapezoid`; the comment line names the argmax parameter.
void write_sweep_csv(const SweepResult& sweep, const std::string& param_name,
                     Timestamp duration_us, std::ostream& out);

/// `threshold,fpr,tpr` for the threshold points, then a trailing `# auc=...` line.
void write_roc_csv(const RocCurve& curve, std::ostream& out);

struct EvalRow {
    const MetricsReport* labeled = nullptr;
    const EsrResult* esr = nullptr;
};

/// One row with `tp,tn,fp,fn,nerr,verr,snr_db,acc,tpr,fpr` and/or `ntss,ln,esr,m`.
void write_eval_csv(const EvalRow& row, std::ostream& out);

/// Generic numeric table: header names plus rows. Comment lines are skipped.
struct NumericTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    /// Index of `name`, or -1.
    int column(const std::string& name) const;
};

NumericTable read_numeric_csv(std::istream& in);

}  // namespace aocc
