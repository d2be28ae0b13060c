#pragma once

#include <string>
#include <vector>

namespace langevin {

// Deterministic CSV assembly: '#'-prefixed metadata lines, one header row,
// data rows with numbers at 17 significant digits, '\n' newlines.
class CsvReport {
 public:
  void add_metadata(const std::string& line);          // without '#'
  void set_header(const std::vector<std::string>& columns);

  class Row {
   public:
    explicit Row(CsvReport* owner) : owner_(owner) {}
    Row& add(const std::string& v);
    Row& add(double v);
    Row& add(long v);
    Row& add(std::size_t v);
    void commit();

   private:
    CsvReport* owner_;
    std::vector<std::string> cells_;
  };

  Row row() { return Row(this); }

  std::string to_string() const;
  void write(const std::string& path) const;

  std::size_t n_rows() const { return rows_.size(); }

  static std::string format_double(double v);  // %.17g

 private:
  friend class Row;
  std::vector<std::string> metadata_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace langevin
