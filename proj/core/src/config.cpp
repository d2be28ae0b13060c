#include "langevin/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace langevin {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "': not a number: '" + v + "'");
  }
}

long to_long(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long l = std::stol(v, &pos, 10);
    if (pos != v.size()) throw std::invalid_argument(v);
    return l;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "': not an integer: '" + v + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

}  // namespace

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str(), path);
}

Config Config::parse_string(const std::string& text, const std::string& origin) {
  Config cfg;
  cfg.origin_ = origin;
  std::istringstream is(text);
  std::string line;
  long lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    cfg.raw_lines_.push_back(line);
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      std::ostringstream os;
      os << "config: " << origin << ":" << lineno << ": expected 'key = value'";
      throw ConfigError(os.str());
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty()) {
      std::ostringstream os;
      os << "config: " << origin << ":" << lineno << ": empty key";
      throw ConfigError(os.str());
    }
    cfg.entries_.emplace_back(key, value);
  }
  return cfg;
}

bool Config::has(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return true;
  return false;
}

const std::string* Config::find_unique(const std::string& key) const {
  const std::string* found = nullptr;
  for (const auto& [k, v] : entries_)
    if (k == key) {
      if (found) throw ConfigError("config: key '" + key + "' bound twice");
      found = &v;
    }
  return found;
}

std::string Config::get_string(const std::string& key) const {
  const std::string* v = find_unique(key);
  if (!v) throw ConfigError("config: missing required key '" + key + "'");
  return *v;
}

std::string Config::get_string(const std::string& key,
                               const std::string& fallback) const {
  const std::string* v = find_unique(key);
  return v ? *v : fallback;
}

double Config::get_double(const std::string& key) const {
  return to_double(key, get_string(key));
}

double Config::get_double(const std::string& key, double fallback) const {
  const std::string* v = find_unique(key);
  return v ? to_double(key, *v) : fallback;
}

long Config::get_long(const std::string& key) const {
  return to_long(key, get_string(key));
}

long Config::get_long(const std::string& key, long fallback) const {
  const std::string* v = find_unique(key);
  return v ? to_long(key, *v) : fallback;
}

std::uint64_t Config::get_seed(const std::string& key,
                               std::uint64_t fallback) const {
  const std::string* v = find_unique(key);
  if (!v) return fallback;
  try {
    return std::stoull(*v);
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "': not a seed: '" + *v + "'");
  }
}

std::vector<double> Config::get_double_list(const std::string& key) const {
  const std::string raw = get_string(key);
  std::vector<double> out;
  if (trim(raw).empty()) return out;
  for (const std::string& item : split(raw, ',')) {
    // "lo:hi:count" expands to a uniform grid, endpoints included.
    const auto c1 = item.find(':');
    if (c1 != std::string::npos) {
      const auto parts = split(item, ':');
      if (parts.size() != 3)
        throw ConfigError("config: key '" + key + "': bad range '" + item + "'");
      const double lo = to_double(key, parts[0]);
      const double hi = to_double(key, parts[1]);
      const long count = to_long(key, parts[2]);
      if (count < 1)
        throw ConfigError("config: key '" + key + "': range count < 1");
      for (long i = 0; i < count; ++i)
        out.push_back(count == 1 ? lo
                                 : lo + (hi - lo) * static_cast<double>(i) /
                                            static_cast<double>(count - 1));
    } else {
      out.push_back(to_double(key, item));
    }
  }
  return out;
}

std::vector<long> Config::get_long_list(const std::string& key) const {
  std::vector<long> out;
  const std::string raw = get_string(key);
  if (trim(raw).empty()) return out;
  for (const std::string& item : split(raw, ','))
    out.push_back(to_long(key, item));
  return out;
}

std::vector<std::string> Config::get_string_list(const std::string& key) const {
  std::vector<std::string> out;
  const std::string raw = get_string(key);
  if (trim(raw).empty()) return out;
  for (const std::string& item : split(raw, ',')) out.push_back(item);
  return out;
}

std::vector<std::string> Config::get_all(const std::string& key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries_)
    if (k == key) out.push_back(v);
  return out;
}

void Config::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries_)
    if (k == key) {
      v = value;
      return;
    }
  entries_.emplace_back(key, value);
  raw_lines_.push_back(key + " = " + value);
}

}  // namespace langevin
