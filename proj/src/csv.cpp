#include "aztec/csv.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "aztec/common.hpp"

namespace aztec {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

void CsvTable::row(const std::vector<double>& values) {
    if (values.size() != cols_.size())
        throw ConfigError("csv row has " + std::to_string(values.size()) + " values, expected " +
                          std::to_string(cols_.size()));
    rows_.push_back(values);
}

void CsvTable::write(std::ostream& os) const {
    for (const auto& c : comments_) os << "# " << c << '\n';
    for (size_t i = 0; i < cols_.size(); ++i) os << (i ? "," : "") << cols_[i];
    os << '\n';
    for (const auto& r : rows_) {
        for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << format_double(r[i]);
        os << '\n';
    }
}

void CsvTable::save(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open " + path + " for writing");
    write(f);
    if (!f) throw IoError("write failed: " + path);
}

}  // namespace aztec
