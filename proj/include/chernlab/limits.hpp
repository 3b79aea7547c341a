#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "chernlab/errors.hpp"

namespace chernlab {

/// Resource ceilings. Defaults can be overridden through CHERNLAB_CEILING,
/// a comma separated list such as "prec=96,group=20000".
struct Limits {
  int fgl_prec = 64;
  std::int64_t group_order = 10000;
  std::int64_t omega_elements = 10000;
  std::int64_t gb_pairs = 200000;
  int divisor_degree = 9;
  std::int64_t tuples = 20000000;
  std::int64_t search_nodes = 50000000;

  static Limits from_env() {
    Limits l;
    const char* env = std::getenv("CHERNLAB_CEILING");
    if (env == nullptr) return l;
    std::string s(env);
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t end = s.find(',', pos);
      if (end == std::string::npos) end = s.size();
      std::string item = s.substr(pos, end - pos);
      pos = end + 1;
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("CHERNLAB_CEILING entry without '=': " + item);
      std::string key = item.substr(0, eq);
      long long val = 0;
      try {
        val = std::stoll(item.substr(eq + 1));
      } catch (...) {
        throw UsageError("CHERNLAB_CEILING value is not an integer: " + item);
      }
      if (key == "prec") l.fgl_prec = static_cast<int>(val);
      else if (key == "group") l.group_order = val;
      else if (key == "omega") l.omega_elements = val;
      else if (key == "pairs") l.gb_pairs = val;
      else if (key == "degree") l.divisor_degree = static_cast<int>(val);
      else if (key == "tuples") l.tuples = val;
      else if (key == "nodes") l.search_nodes = val;
      else throw UsageError("unknown CHERNLAB_CEILING key: " + key);
    }
    return l;
  }
};

inline const Limits& limits() {
  static const Limits l = Limits::from_env();
  return l;
}

}  // namespace chernlab
