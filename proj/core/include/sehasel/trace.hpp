#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sehasel {

/// Time-indexed record of one simulation run. Column set and order are fixed.
struct SimTrace {
    struct Row {
        double t;
        double u_i;
        double u_o;
        double mag_cmd;
        double x_b;
        double x_a;
        double target;
        double load_force;
        double disturbance;
    };

    double record_dt = 1e-3;
    std::vector<Row> rows;

    /// Header exactly as written to CSV.
    static const char* header();
};

/// Comma-separated, header row, 9 significant digits, LF line endings.
void write_trace_csv(std::ostream& out, const SimTrace& trace);
std::string trace_to_csv(const SimTrace& trace);
void save_trace_csv(const std::string& path, const SimTrace& trace);

/// One named column read back from a trace CSV. Missing (empty) fields are
/// filled by linear interpolation across up to 3 consecutive gaps.
struct CsvColumn {
    double dt = 0.0;
    std::vector<double> values;
};

/// Reads `column` from a harness trace CSV, or the second column of a simple
/// two-column `t,value` file when column is empty.
CsvColumn read_csv_column(const std::string& path, const std::string& column = "");

}  // namespace sehasel
