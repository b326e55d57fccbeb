#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace aztec {

// Comma-separated table; '#' comment header, doubles with 17 significant digits.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> columns) : cols_(std::move(columns)) {}

    void comment(const std::string& line) { comments_.push_back(line); }
    void row(const std::vector<double>& values);  // throws ConfigError on width mismatch

    size_t rows() const { return rows_.size(); }
    const std::vector<std::string>& columns() const { return cols_; }
    const std::vector<std::vector<double>>& data() const { return rows_; }

    void write(std::ostream& os) const;
    void save(const std::string& path) const;  // IoError with the path on failure

private:
    std::vector<std::string> cols_, comments_;
    std::vector<std::vector<double>> rows_;
};

std::string format_double(double v);

}  // namespace aztec
