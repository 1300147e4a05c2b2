#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "nsdecay/diagnostics.hpp"

// Series CSV layout:
//   # schema_version=1
//   # <key>=<value>        (zero or more metadata lines)
//   col0,col1,...
//   v0,v1,...              (%.17g)

namespace nsdecay {

/// Formats a double with 17 significant digits ("nan", "inf" for non-finite).
std::string format_number(double x);

/// Streaming CSV writer; every row is flushed so a crash keeps all previous rows.
class SeriesWriter {
public:
    SeriesWriter(const std::string& path, const std::vector<std::string>& columns,
                 const std::map<std::string, std::string>& meta = {});
    void write_row(const std::vector<double>& row);
    void write(const DiagRecord& rec) { write_row(rec.values); }
    std::size_t rows() const noexcept { return rows_; }

private:
    std::ofstream out_;
    std::size_t width_;
    std::size_t rows_ = 0;
};

struct SeriesTable {
    std::map<std::string, std::string> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    bool has(const std::string& name) const;
    /// Throws SchemaError if the column is absent.
    std::vector<double> column(const std::string& name) const;
};

/// Reads a series CSV. Throws SchemaError on a missing file, missing or
/// mismatched schema_version, or ragged rows.
SeriesTable read_series(const std::string& path);

void write_series(const std::string& path, const std::vector<std::string>& columns,
                  const std::vector<std::vector<double>>& rows, const std::map<std::string, std::string>& meta = {});

}  // namespace nsdecay
