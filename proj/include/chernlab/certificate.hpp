#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "chernlab/errors.hpp"
#include "chernlab/groebner.hpp"
#include "chernlab/table_json.hpp"

namespace chernlab {

struct Clause {
  std::string name;
  bool pass = false;
  json witness;
};

/// Pipeline result: passes iff every clause passes. Keys are emitted in
/// sorted order so the serialization is deterministic.
struct Certificate {
  std::string pipeline;
  json params = json::object();
  std::vector<Clause> clauses;

  Clause& add(std::string name, bool pass, json witness = json::object()) {
    clauses.push_back({std::move(name), pass, std::move(witness)});
    return clauses.back();
  }
  bool pass() const {
    for (auto& c : clauses)
      if (!c.pass) return false;
    return true;
  }
  const Clause* first_failure() const {
    for (auto& c : clauses)
      if (!c.pass) return &c;
    return nullptr;
  }
  /// Throws CertificateMismatch naming the first failed clause.
  void require() const {
    if (auto* c = first_failure()) throw CertificateMismatch(pipeline + ": clause '" + c->name + "' failed");
  }

  json to_json() const {
    json j;
    j["schema"] = kSchemaTag;
    j["pipeline"] = pipeline;
    j["params"] = params;
    j["status"] = pass() ? "pass" : "fail";
    json cs = json::array();
    for (auto& c : clauses) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    j["clauses"] = cs;
    return j;
  }
  std::string dump() const { return to_json().dump(2) + "\n"; }

  std::string text() const {
    std::string s = pipeline + ": " + (pass() ? "pass" : "FAIL") + "\n";
    for (auto& c : clauses) s += std::string("  [") + (c.pass ? "ok" : "FAIL") + "] " + c.name + "\n";
    return s;
  }

  static Certificate from_json(const json& j) {
    using R = detail::SchemaReader;
    R::only_keys(j, "", {"schema", "pipeline", "params", "status", "clauses"});
    if (R::string(R::need(j, "", "schema"), ".schema") != kSchemaTag) R::fail(".schema", "unsupported schema tag");
    Certificate c;
    c.pipeline = R::string(R::need(j, "", "pipeline"), ".pipeline");
    c.params = R::need(j, "", "params");
    const json& cs = R::array(R::need(j, "", "clauses"), ".clauses");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      std::string path = ".clauses[" + std::to_string(i) + "]";
      R::only_keys(cs[i], path, {"name", "pass", "witness"});
      const json& p = R::need(cs[i], path, "pass");
      if (!p.is_boolean()) R::fail(path + ".pass", "expected a boolean");
      c.add(R::string(R::need(cs[i], path, "name"), path + ".name"), p.get<bool>(), R::need(cs[i], path, "witness"));
    }
    std::string status = R::string(R::need(j, "", "status"), ".status");
    if (status != (c.pass() ? "pass" : "fail")) R::fail(".status", "does not match the clauses");
    return c;
  }
  static Certificate parse(const std::string& text) {
    try {
      return from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
    }
  }
};

/// Equality of a computed element with an expected expression in Q.
inline bool expect_poly(Certificate& cert, const std::string& name, const QuotientRing& Q, const Poly& got,
                        const std::string& expected) {
  Poly want = Q.parse(expected);
  Poly have = Q.reduce(got);
  bool ok = have == want;
  cert.add(name, ok, {{"expected", want.to_string()}, {"got", have.to_string()}});
  return ok;
}

}  // namespace chernlab
