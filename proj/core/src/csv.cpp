#include "langevin/csv.hpp"

#include <cstdio>
#include <fstream>
#include "langevin/errors.hpp"

namespace langevin {

std::string CsvReport::format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void CsvReport::add_metadata(const std::string& line) {
  metadata_.push_back(line);
}

void CsvReport::set_header(const std::vector<std::string>& columns) {
  header_ = columns;
}

CsvReport::Row& CsvReport::Row::add(const std::string& v) {
  cells_.push_back(v);
  return *this;
}
CsvReport::Row& CsvReport::Row::add(double v) {
  cells_.push_back(format_double(v));
  return *this;
}
CsvReport::Row& CsvReport::Row::add(long v) {
  cells_.push_back(std::to_string(v));
  return *this;
}
CsvReport::Row& CsvReport::Row::add(std::size_t v) {
  cells_.push_back(std::to_string(v));
  return *this;
}

void CsvReport::Row::commit() {
  if (!owner_->header_.empty() && cells_.size() != owner_->header_.size())
    throw Error("CsvReport: row width does not match header");
  owner_->rows_.push_back(std::move(cells_));
  cells_.clear();
}

std::string CsvReport::to_string() const {
  std::string out;
  for (const auto& m : metadata_) {
    out += "# ";
    out += m;
    out += '\n';
  }
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (i) out += ',';
    out += header_[i];
  }
  if (!header_.empty()) out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

void CsvReport::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("CsvReport: cannot open '" + path + "'");
  out << to_string();
}

}  // namespace langevin
