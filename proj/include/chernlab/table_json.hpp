#pragma once

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chernlab/character_table.hpp"
#include "chernlab/errors.hpp"
#include "chernlab/field.hpp"

namespace chernlab {

using json = nlohmann::json;

inline constexpr const char* kSchemaTag = "chernlab/1";

/// Optional class fusion carried next to a table: this table's classes
/// mapped into the classes of the named group.
struct TableFusion {
  std::string into;
  std::vector<int> map;
};

struct IngestedTable {
  CharacterTable table;
  std::optional<TableFusion> fusion;
};

namespace detail {

inline std::vector<int> primes_below(int e) {
  std::vector<int> out;
  for (int q = 2; q < e; ++q)
    if (is_prime(q)) out.push_back(q);
  return out;
}

class SchemaReader {
 public:
  [[noreturn]] static void fail(const std::string& path, const std::string& why) {
    throw SchemaError((path.empty() ? std::string("$") : path) + ": " + why);
  }
  static void only_keys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
    if (!j.is_object()) fail(path, "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
      if (!allowed.count(it.key())) fail(path + "." + it.key(), "unknown field");
  }
  static const json& need(const json& j, const std::string& path, const std::string& key) {
    if (!j.contains(key)) fail(path + "." + key, "missing field");
    return j.at(key);
  }
  static long long integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long long>();
  }
  static std::string string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }
  static const json& array(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
  }
};

}  // namespace detail

/// JSON for a table: classes carry the power maps of every prime below
/// the exponent; values are [conductor, b_0, b_1, ...] meaning
/// sum b_i zeta_conductor^i.
inline json table_to_json(const CharacterTable& t, const std::optional<TableFusion>& fusion = std::nullopt) {
  json j;
  j["schema"] = kSchemaTag;
  j["name"] = t.name;
  j["order"] = t.order;
  j["exponent"] = t.exponent;
  json cls = json::array();
  auto primes = detail::primes_below(t.exponent);
  for (int c = 0; c < t.num_classes(); ++c) {
    json cj;
    cj["size"] = t.classes[c].size;
    cj["elt_order"] = t.classes[c].elt_order;
    json pw = json::object();
    for (int q : primes) pw[std::to_string(q)] = t.power(c, q);
    cj["power"] = pw;
    cls.push_back(cj);
  }
  j["classes"] = cls;
  const Cyclotomic& Z = t.Z();
  json irr = json::array();
  for (int i = 0; i < t.num_irr(); ++i) {
    json ij;
    ij["dim"] = t.dim(i);
    json vals = json::array();
    for (auto& v : t.chi[i]) {
      json vj = json::array();
      if (Z.is_integer(v)) {
        vj.push_back(1);
        vj.push_back(v[0]);
      } else {
        vj.push_back(t.exponent);
        int last = Z.phi() - 1;
        while (last > 0 && v[last] == 0) --last;
        for (int k = 0; k <= last; ++k) vj.push_back(v[k]);
      }
      vals.push_back(vj);
    }
    ij["values"] = vals;
    irr.push_back(ij);
  }
  j["irreducibles"] = irr;
  if (fusion) j["fusion"] = {{"into", fusion->into}, {"map", fusion->map}};
  return j;
}

/// Parses and validates a table. Shape problems raise SchemaError with the
/// offending field path; failures of the character-table axioms raise
/// ValidationError.
inline IngestedTable table_from_json(const json& j) {
  using R = detail::SchemaReader;
  R::only_keys(j, "", {"schema", "name", "order", "exponent", "classes", "irreducibles", "fusion"});
  if (j.contains("schema") && R::string(j.at("schema"), ".schema") != kSchemaTag)
    R::fail(".schema", "unsupported schema tag");
  IngestedTable out;
  CharacterTable& t = out.table;
  t.name = R::string(R::need(j, "", "name"), ".name");
  t.order = R::integer(R::need(j, "", "order"), ".order");
  long long e = R::integer(R::need(j, "", "exponent"), ".exponent");
  if (t.order < 1) R::fail(".order", "must be positive");
  if (e < 1 || e > 100000) R::fail(".exponent", "out of range");
  t.exponent = static_cast<int>(e);
  const json& cls = R::array(R::need(j, "", "classes"), ".classes");
  int h = static_cast<int>(cls.size());
  if (h == 0) R::fail(".classes", "empty");
  std::vector<std::vector<int>> prime_map(t.exponent + 1);
  auto primes = detail::primes_below(t.exponent);
  t.classes.resize(h);
  for (int c = 0; c < h; ++c) {
    std::string path = ".classes[" + std::to_string(c) + "]";
    const json& cj = cls[c];
    R::only_keys(cj, path, {"size", "elt_order", "power"});
    t.classes[c].size = R::integer(R::need(cj, path, "size"), path + ".size");
    long long o = R::integer(R::need(cj, path, "elt_order"), path + ".elt_order");
    if (o < 1) R::fail(path + ".elt_order", "must be positive");
    t.classes[c].elt_order = static_cast<int>(o);
    const json& pw = R::need(cj, path, "power");
    if (!pw.is_object()) R::fail(path + ".power", "expected an object");
    for (auto it = pw.begin(); it != pw.end(); ++it) {
      int q = 0;
      try {
        q = std::stoi(it.key());
      } catch (...) {
        R::fail(path + ".power." + it.key(), "key must be an integer");
      }
      if (q < 2 || q >= t.exponent || !detail::is_prime(q)) R::fail(path + ".power." + it.key(), "key must be a prime below the exponent");
      long long idx = R::integer(it.value(), path + ".power." + it.key());
      if (idx < 0 || idx >= h) R::fail(path + ".power." + it.key(), "class index out of range");
      if (prime_map[q].empty()) prime_map[q].assign(h, -1);
      prime_map[q][c] = static_cast<int>(idx);
    }
  }
  for (int q : primes)
    for (int c = 0; c < h; ++c)
      if (prime_map[q].empty() || prime_map[q][c] < 0)
        R::fail(".classes[" + std::to_string(c) + "].power." + std::to_string(q), "missing power map");
  for (int c = 0; c < h; ++c) {
    auto& pv = t.classes[c].power;
    pv.assign(t.exponent, 0);
    for (int k = 1; k < t.exponent; ++k) {
      int cur = c, kk = k;
      for (int q = 2; q <= kk; ++q)
        while (kk % q == 0) {
          cur = prime_map[q][cur];
          kk /= q;
        }
      pv[k] = cur;
    }
  }
  const Cyclotomic& Z = t.Z();
  const json& irr = R::array(R::need(j, "", "irreducibles"), ".irreducibles");
  for (int i = 0; i < static_cast<int>(irr.size()); ++i) {
    std::string path = ".irreducibles[" + std::to_string(i) + "]";
    const json& ij = irr[i];
    R::only_keys(ij, path, {"dim", "values"});
    long long dim = R::integer(R::need(ij, path, "dim"), path + ".dim");
    const json& vals = R::array(R::need(ij, path, "values"), path + ".values");
    if (static_cast<int>(vals.size()) != h) R::fail(path + ".values", "needs one value per class");
    std::vector<CycVal> row;
    for (int c = 0; c < h; ++c) {
      std::string vp = path + ".values[" + std::to_string(c) + "]";
      const json& vj = R::array(vals[c], vp);
      if (vj.size() < 2) R::fail(vp, "expected [conductor, coefficients...]");
      long long cond = R::integer(vj[0], vp + "[0]");
      if (cond < 1 || t.exponent % cond) R::fail(vp + "[0]", "conductor must divide the exponent");
      std::vector<long long> b;
      for (std::size_t k = 1; k < vj.size(); ++k) b.push_back(R::integer(vj[k], vp + "[" + std::to_string(k) + "]"));
      row.push_back(Z.embed(static_cast<int>(cond), b));
    }
    if (row[0] != Z.from_int(dim)) R::fail(path + ".dim", "does not match the value on the identity class");
    t.chi.push_back(row);
  }
  if (j.contains("fusion")) {
    const json& fj = j.at("fusion");
    R::only_keys(fj, ".fusion", {"into", "map"});
    TableFusion f;
    f.into = R::string(R::need(fj, ".fusion", "into"), ".fusion.into");
    const json& mp = R::array(R::need(fj, ".fusion", "map"), ".fusion.map");
    for (std::size_t k = 0; k < mp.size(); ++k)
      f.map.push_back(static_cast<int>(R::integer(mp[k], ".fusion.map[" + std::to_string(k) + "]")));
    out.fusion = f;
  }
  try {
    t.validate();
  } catch (const NotACharacterTable& err) {
    throw ValidationError(err.message());
  }
  return out;
}

inline IngestedTable ingest_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open table file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("table file is not valid JSON: ") + e.what());
  }
  return table_from_json(j);
}

}  // namespace chernlab
