#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "langevin/errors.hpp"

namespace langevin {

// Flat key-value configuration file:
//   key = value            one binding per line
//   # comment              blank lines ignored
// Keys may repeat (used for probe rows); scalar getters reject duplicates.
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text, const std::string& origin = "<string>");

  bool has(const std::string& key) const;

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  long get_long(const std::string& key) const;
  long get_long(const std::string& key, long fallback) const;
  std::uint64_t get_seed(const std::string& key, std::uint64_t fallback) const;

  // Comma-separated lists; "lo:hi:count" expands to a uniform grid.
  std::vector<double> get_double_list(const std::string& key) const;
  std::vector<long> get_long_list(const std::string& key) const;
  std::vector<std::string> get_string_list(const std::string& key) const;

  // All values bound to a repeated key, in file order.
  std::vector<std::string> get_all(const std::string& key) const;

  // Raw lines as read (for verbatim metadata echo).
  const std::vector<std::string>& raw_lines() const { return raw_lines_; }

  // Override or add a binding (CLI flags --seed / --out).
  void set(const std::string& key, const std::string& value);

 private:
  std::string origin_;
  std::vector<std::pair<std::string, std::string>> entries_;
  std::vector<std::string> raw_lines_;

  const std::string* find_unique(const std::string& key) const;
};

}  // namespace langevin
