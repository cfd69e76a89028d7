#include "sehasel/trace.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "sehasel/errors.hpp"

namespace sehasel {

const char* SimTrace::header() {
    return "t,u_i,u_o,mag_cmd,x_b,x_a,target,load_force,disturbance";
}

void write_trace_csv(std::ostream& out, const SimTrace& trace) {
    out << SimTrace::header() << "\n";
    char buf[256];
    for (const auto& r : trace.rows) {
        std::snprintf(buf, sizeof(buf),
                      "%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g\n", r.t, r.u_i,
                      r.u_o, r.mag_cmd, r.x_b, r.x_a, r.target, r.load_force,
                      r.disturbance);
        out << buf;
    }
}

std::string trace_to_csv(const SimTrace& trace) {
    std::ostringstream out;
    write_trace_csv(out, trace);
    return out.str();
}

void save_trace_csv(const std::string& path, const SimTrace& trace) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("trace: cannot open '" + path + "' for writing");
    write_trace_csv(out, trace);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

}  // namespace

CsvColumn read_csv_column(const std::string& path, const std::string& column) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("csv: cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("csv: empty file");
    const auto header = split_csv_line(strip_cr(line));
    if (header.size() < 2) throw ValidationError("csv: need at least t plus one column");
    if (header[0] != "t") throw ValidationError("csv: first column must be 't'");

    std::size_t col = 1;
    if (!column.empty()) {
        bool found = false;
        for (std::size_t i = 1; i < header.size(); ++i) {
            if (header[i] == column) {
                col = i;
                found = true;
                break;
            }
        }
        if (!found) throw ValidationError("csv: no column named '" + column + "'");
    }

    std::vector<double> t;
    std::vector<double> v;       // NaN marks a missing field
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw ValidationError("csv: row has wrong field count");
        t.push_back(std::strtod(fields[0].c_str(), nullptr));
        if (fields[col].empty()) {
            v.push_back(std::nan(""));
        } else {
            char* end = nullptr;
            const double x = std::strtod(fields[col].c_str(), &end);
            if (end == fields[col].c_str())
                throw ValidationError("csv: malformed number '" + fields[col] + "'");
            v.push_back(x);
        }
    }
    if (v.size() < 2) throw ValidationError("csv: need at least 2 data rows");

    // Fill gaps of up to 3 consecutive missing samples by linear interpolation.
    for (std::size_t i = 0; i < v.size();) {
        if (!std::isnan(v[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < v.size() && std::isnan(v[j])) ++j;
        const std::size_t gap = j - i;
        if (gap > 3 || i == 0 || j == v.size())
            throw ValidationError("csv: more than 3 consecutive missing samples "
                                  "(or missing at the edges)");
        const double v0 = v[i - 1], v1 = v[j];
        for (std::size_t k = i; k < j; ++k)
            v[k] = v0 + (v1 - v0) * double(k - i + 1) / double(gap + 1);
        i = j;
    }

    CsvColumn out;
    out.dt = t.size() > 1 ? t[1] - t[0] : 0.0;
    out.values = std::move(v);
    return out;
}

}  // namespace sehasel
