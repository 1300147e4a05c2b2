#include "nsdecay/series_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "nsdecay/errors.hpp"

namespace nsdecay {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

SeriesWriter::SeriesWriter(const std::string& path, const std::vector<std::string>& columns,
                           const std::map<std::string, std::string>& meta)
    : out_(path, std::ios::trunc), width_(columns.size()) {
    if (!out_) throw Error("cannot write '" + path + "'");
    out_ << "# schema_version=" << kSchemaVersion << '\n';
    for (const auto& [k, v] : meta) out_ << "# " << k << '=' << v << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
    out_ << '\n';
    out_.flush();
}

void SeriesWriter::write_row(const std::vector<double>& row) {
    if (row.size() != width_) throw SchemaError("row width does not match the header");
    for (std::size_t i = 0; i < row.size(); ++i) out_ << (i ? "," : "") << format_number(row[i]);
    out_ << '\n';
    out_.flush();
    ++rows_;
}

bool SeriesTable::has(const std::string& name) const {
    return std::find(columns.begin(), columns.end(), name) != columns.end();
}

std::vector<double> SeriesTable::column(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw SchemaError("column '" + name + "' not in series");
    const auto idx = static_cast<std::size_t>(it - columns.begin());
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[idx]);
    return out;
}

SeriesTable read_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open series '" + path + "'");
    SeriesTable t;
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto body = line.substr(line.find_first_not_of("# "));
            const auto eq = body.find('=');
            if (eq != std::string::npos) t.meta[body.substr(0, eq)] = body.substr(eq + 1);
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!header) {
            t.columns = cells;
            header = true;
            continue;
        }
        if (cells.size() != t.columns.size()) throw SchemaError("ragged row in '" + path + "'");
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) {
            try {
                row.push_back(std::stod(c));
            } catch (const std::exception&) {
                throw SchemaError("non-numeric cell '" + c + "' in '" + path + "'");
            }
        }
        t.rows.push_back(std::move(row));
    }
    const auto v = t.meta.find("schema_version");
    if (v == t.meta.end()) throw SchemaError("'" + path + "' has no schema_version line");
    if (v->second != std::to_string(kSchemaVersion))
        throw SchemaError("'" + path + "' has schema_version " + v->second + ", expected " + std::to_string(kSchemaVersion));
    if (!header) throw SchemaError("'" + path + "' has no header row");
    return t;
}

void write_series(const std::string& path, const std::vector<std::string>& columns,
                  const std::vector<std::vector<double>>& rows, const std::map<std::string, std::string>& meta) {
    SeriesWriter w(path, columns, meta);
    for (const auto& r : rows) w.write_row(r);
}

}  // namespace nsdecay
