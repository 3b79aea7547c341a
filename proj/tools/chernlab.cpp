#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chernlab/pipelines.hpp"
#include "chernlab/table_json.hpp"

using namespace chernlab;

namespace {

struct Opts {
  int p = 2, n = 2, v = 0, d = 2, prec = 32;
  long long series = 0;
  bool has_series = false;
  std::string group, table, variant = "omega", order = "lex", out, format = "json";
  std::string field, vars, ideal;
  bool format_given = false;
  std::uint64_t seed = 1;
};

void write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream o(tmp, std::ios::binary);
    if (!o) throw UsageError("cannot write " + tmp.string());
    o << text;
    if (!o.flush()) throw UsageError("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

int emit(const Certificate& c, const Opts& o) {
  write_out(o.format == "text" ? c.text() : c.dump(), o.out);
  if (!c.pass()) {
    std::cerr << "CertificateMismatch: " << c.pipeline << ": clause '" << c.first_failure()->name << "' failed\n";
    return 1;
  }
  return 0;
}

void emit_json(const json& j, const Opts& o) { write_out(j.dump(2) + "\n", o.out); }

std::string text_of(const json& j, int indent = 0) {
  std::string pad(indent, ' '), s;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_object()) s += pad + it.key() + ":\n" + text_of(*it, indent + 2);
    else if (it->is_array()) {
      s += pad + it.key() + ":\n";
      for (auto& x : *it) s += pad + "  " + (x.is_string() ? x.get<std::string>() : x.dump()) + "\n";
    } else s += pad + it.key() + ": " + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
  }
  return s;
}

void emit_report(const json& j, const Opts& o) {
  if (o.format == "text") write_out(text_of(j), o.out);
  else emit_json(j, o);
}

struct Resolved {
  std::optional<GroupModel> model;
  std::optional<CharacterTable> table;
  std::string name;
};

Resolved resolve(const Opts& o, bool need_table) {
  Resolved r;
  if (o.group.empty() && o.table.empty()) throw UsageError("--group or --table is required");
  if (!o.table.empty()) {
    r.table = ingest_table(o.table).table;
    r.name = r.table->name;
  }
  if (!o.group.empty()) {
    r.name = canonical_group_name(o.group);
    r.model = builtin_model(o.group);
    if (!r.table) {
      try {
        r.table = builtin_table(o.group);
      } catch (const UnknownGroup&) {
        if (need_table) throw;
      }
    }
  }
  if (need_table && !r.table) throw UsageError("a character table is needed");
  return r;
}

FieldPtr field_of(const Opts& o) {
  if (o.field.empty() || o.field == "prime") return Field::prime(o.p);
  if (o.field == "F4") return Field::f4();
  if (o.field == "F9") return Field::f9();
  if (o.field.size() > 1 && o.field[0] == 'F') {
    int q = std::stoi(o.field.substr(1));
    if (detail::is_prime(q)) return Field::prime(q);
  }
  throw UsageError("unsupported field '" + o.field + "' (use F<p>, F4 or F9)");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else cur += ch;
  }
  if (!cur.empty()) out.push_back(cur);
  for (auto& x : out) {
    auto a = x.find_first_not_of(' '), b = x.find_last_not_of(' ');
    x = a == std::string::npos ? "" : x.substr(a, b - a + 1);
  }
  return out;
}

json poly_json(const std::vector<Poly>& ps) {
  json j = json::array();
  for (auto& p : ps) j.push_back(p.to_string());
  return j;
}

json monomial_json(const QuotientRing& Q) {
  json j = json::array();
  for (auto& m : Q.standard()) j.push_back(Poly::monomial(Q.ring(), m, 1).to_string());
  return j;
}

std::string tuple_label(const GroupModel& G, const Tuple& u) {
  std::string s = "(";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) s += ", ";
    s += G.labels.empty() ? std::to_string(u[i]) : G.labels[u[i]];
  }
  return s + ")";
}

json divisor_json(const OmegaChElem& f) {
  json j = json::array();
  for (auto& D : f) j.push_back(D.to_string());
  return j;
}

json class_map_json(const ClassMap& m) { return json(std::vector<int>(m.begin(), m.end())); }

// subcommands

int cmd_fgl(const Opts& o) {
  auto f = honda_fgl(o.p, o.n, o.prec);
  if (o.has_series) {
    auto R = PolyRing::make(f->field(), {"x"});
    std::string s = f->series_poly(o.series, R).to_string();
    if (o.format_given && o.format == "json")
      emit_json({{"schema", kSchemaTag}, {"law", f->name()}, {"prec", o.prec}, {"k", o.series}, {"series", s}}, o);
    else write_out(s + "\n", o.out);
    return 0;
  }
  return emit(fgl_certificate(o.p, o.n, o.prec), o);
}

int cmd_groebner(const Opts& o) {
  if (o.vars.empty() || o.ideal.empty()) throw UsageError("groebner needs --vars and --ideal");
  auto names = split_list(o.vars);
  MonomialOrder ord = PolyRing::parse_order(o.order, names);
  auto R = PolyRing::make(field_of(o), names, ord);
  std::vector<Poly> gens;
  for (auto& g : split_list(o.ideal)) gens.push_back(parse_poly(R, g));
  QuotientRing Q(R, gens, false);
  json j = {{"schema", kSchemaTag}, {"field", R->field()->name()}, {"vars", names}, {"order", o.order},
            {"basis", poly_json(Q.basis())}, {"is_groebner_basis", is_groebner_basis(Q.basis())}};
  if (Q.basis().size() == 1 && Q.basis()[0] == Poly::constant(R, 1)) {
    j["dimension"] = 0;
  } else {
    j["dimension"] = Q.dim();
    j["standard"] = monomial_json(Q);
    auto soc = socle(Q);
    j["socle"] = poly_json(soc);
    j["gorenstein"] = soc.size() == 1;
  }
  emit_report(j, o);
  return 0;
}

int cmd_omega(const Opts& o) {
  const std::string& var = o.variant;
  if (var != "omega" && var != "ch" && var != "prime" && var != "dprime")
    throw UsageError("--variant must be omega, ch, prime or dprime");
  Resolved g = resolve(o, var == "ch");
  json j = {{"schema", kSchemaTag}, {"group", g.name}, {"p", o.p}, {"n", o.n}, {"variant", var}};
  if (var == "ch") {
    RepRing R(*g.table);
    int vG = 0;
    for (long long e = g.table->exponent; e % o.p == 0; e /= o.p) ++vG;
    int v = o.v ? o.v : std::max(1, vG);
    auto ch = enumerate_omega_ch(R, o.p, o.n, v);
    j["v"] = v;
    j["count"] = ch.size();
    json reps = json::array(), xi = json::array();
    for (auto& f : ch) {
      reps.push_back(divisor_json(f));
      try {
        xi.push_back(class_map_json(xi_class_map(f, *g.table)));
      } catch (const NoMatchingClass&) {
        xi.push_back(nullptr);
      }
    }
    j["representatives"] = reps;
    j["maps"] = {{"xi", xi}};
    emit_report(j, o);
    return 0;
  }
  if (!g.model) throw UsageError("this variant needs a group model (--group)");
  const GroupModel& G = *g.model;
  if (var == "omega") {
    auto om = enumerate_omega(G, o.p, o.n);
    int v = o.v ? o.v : std::max(1, om.w);
    j["v"] = v;
    j["count"] = om.reps.size();
    json reps = json::array(), kap = json::array(), xi = json::array();
    for (auto& u : om.reps) reps.push_back(tuple_label(G, u));
    if (g.table && !G.table_class.empty()) {
      for (auto& u : om.reps) {
        auto k = kappa(G, *g.table, u, o.p, v);
        kap.push_back(divisor_json(k));
        try {
          xi.push_back(class_map_json(xi_class_map(k, *g.table)));
        } catch (const NoMatchingClass&) {
          xi.push_back(nullptr);
        }
      }
      j["maps"] = {{"kappa", kap}, {"xi", xi}};
    } else {
      j["maps"] = json::object();
    }
    j["representatives"] = reps;
    j["orbit_sizes"] = om.orbit;
    emit_report(j, o);
    return 0;
  }
  auto V = enumerate_omega_variants(G, o.p, o.n, var == "prime" ? OmegaVariant::pointwise : OmegaVariant::doubleprime);
  if (var == "prime") {
    j["count"] = V.prime.size();
    json reps = json::array();
    for (auto& s : V.prime) reps.push_back(class_map_json(s));
    j["representatives"] = reps;
    j["maps"] = {{"from_omega", V.omega_to_prime}};
  } else {
    j["count"] = V.dprime_count.get_str();
    json reps = json::array();
    for (auto& s : V.dprime) reps.push_back(class_map_json(s));
    j["listed"] = V.dprime_listed;
    j["representatives"] = reps;
    j["maps"] = {{"from_prime", V.prime_to_dprime}};
  }
  emit_report(j, o);
  return 0;
}

int cmd_chern(const Opts& o) {
  Resolved g = resolve(o, true);
  auto R = repring_from_table(*g.table);
  auto f = honda_fgl(o.p, o.n, o.prec);
  int vG = 0;
  for (long long e = g.table->exponent; e % o.p == 0; e /= o.p) ++vG;
  int v = o.v ? o.v : std::max(1, vG);
  Presentation P = build_presentation(R, f, v);
  json elim = json::object();
  for (std::size_t i = 0; i < P.eliminated_names.size(); ++i) elim[P.eliminated_names[i]] = P.eliminated_values[i].to_string();
  json rels = json::array();
  for (std::size_t i = 0; i < P.relations.size(); ++i) rels.push_back({{"from", P.labels[i]}, {"poly", P.relations[i].to_string()}});
  json j = {{"schema", kSchemaTag},
            {"group", g.name},
            {"p", o.p},
            {"n", o.n},
            {"v", v},
            {"generators", P.names},
            {"weights", P.weights},
            {"truncation", P.truncation},
            {"weight_bound", P.B},
            {"certified", P.certified},
            {"relations", rels},
            {"eliminated", elim},
            {"remaining", P.Q->ring()->names()},
            {"basis", poly_json(P.Q->basis())},
            {"standard", monomial_json(*P.Q)},
            {"dimension", P.dim()}};
  int N = single_generator_exponent(*P.Q);
  if (N > 0) j["single_generator"] = {{"variable", P.Q->ring()->names().back()}, {"exponent", N}};
  emit_report(j, o);
  return P.certified ? 0 : 1;
}

int cmd_xspec(const Opts& o) { return emit(xspec_certificate(o.p, o.d, o.n), o); }

int cmd_table_check(const Opts& o) {
  if (o.table.empty()) {
    if (o.group.empty()) throw UsageError("table-check needs --table, or --group to export a builtin table");
    write_out(table_to_json(builtin_table(o.group)).dump(2) + "\n", o.out);
    return 0;
  }
  Certificate c;
  c.pipeline = "table-check";
  c.params = {{"table", std::filesystem::path(o.table).filename().string()}};
  auto in = ingest_table(o.table);
  const CharacterTable& t = in.table;
  c.add("schema and orthogonality", true, {{"name", t.name}, {"order", t.order}, {"classes", t.num_classes()}});
  json j = table_to_json(t, in.fusion);
  c.add("round trip", table_to_json(table_from_json(j).table, in.fusion) == j);
  RepRing R(t);
  c.add("structure constants are non-negative integers", true, {{"irreducibles", R.h()}});
  if (!o.group.empty()) {
    auto ref = builtin_table(o.group);
    bool same = table_to_json(ref) == table_to_json(t);
    c.add("identical to builtin " + canonical_group_name(o.group), same);
  }
  if (in.fusion) {
    auto G = builtin_table(in.fusion->into);
    check_fusion(G, t, in.fusion->map);
    RepRing RG(G);
    auto K = restriction_kernel(RG, R, in.fusion->map);
    json gens = json::array();
    for (auto& g : K.generators) gens.push_back(g.c);
    c.add("fusion into " + in.fusion->into + " is consistent", true,
          {{"kernel", gens}, {"quotient_rank", K.quotient_rank}});
  }
  return emit(c, o);
}

int cmd_all(const Opts& o) {
  std::vector<std::function<Certificate()>> jobs = {
      [] { return fgl_certificate(2, 2, 32); },
      [] { return fgl_certificate(3, 2, 32); },
      [] { return sigma3_pipeline(); },
      [] { return sigma4_pipeline(); },
      [] { return sigma4_census(2); },
      [] { return sdiv_checks(); },
      [] { return lambda_rho_certificate(); },
      [] { return xspec_certificate(3, 2, 2); },
      [] { return nonpositive_divisor_witness(2); },
      [] { return sigma6_collision(); },
      [s = o.seed] { return property_sweep(s); },
      [] { return abelian_oracle("C2"); },
      [] { return abelian_oracle("C4"); },
      [] { return abelian_oracle("C2xC2"); },
  };
  std::vector<std::future<Certificate>> fut;
  for (auto& jb : jobs) fut.push_back(std::async(std::launch::async, jb));
  Certificate all;
  all.pipeline = "all";
  all.params = {{"seed", o.seed}};
  for (auto& f : fut) {
    Certificate c;
    try {
      c = f.get();
    } catch (const Error& e) {
      c.pipeline = "error";
      c.add(e.what(), false);
    }
    all.add(c.pipeline, c.pass(), c.to_json());
  }
  if (o.format == "text") {
    std::string s;
    for (auto& cl : all.clauses) s += Certificate::from_json(cl.witness).text();
    s += std::string("all: ") + (all.pass() ? "pass" : "FAIL") + "\n";
    write_out(s, o.out);
    return all.pass() ? 0 : 1;
  }
  return emit(all, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chernlab: Chern approximations, formal group laws and generalized characters"};
  app.require_subcommand(1);
  Opts o;
  auto common = [&](CLI::App* s) {
    s->add_option("--out", o.out, "output file (default stdout)");
    s->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}))->each([&](const std::string&) {
      o.format_given = true;
    });
  };
  auto height = [&](CLI::App* s) {
    s->add_option("--p", o.p, "prime")->check(CLI::Range(2, 97));
    s->add_option("--n", o.n, "height")->check(CLI::Range(1, 8));
  };
  auto grp = [&](CLI::App* s) {
    s->add_option("--group", o.group, "builtin group name");
    s->add_option("--table", o.table, "character table JSON file");
  };

  auto* fgl = app.add_subcommand("fgl", "Honda formal group law: [k]-series or certificate");
  height(fgl);
  common(fgl);
  fgl->add_option("--prec", o.prec, "truncation degree")->check(CLI::Range(2, 4096));
  fgl->add_option("--series", o.series, "print [k](x)")->each([&](const std::string&) { o.has_series = true; });

  auto* gb = app.add_subcommand("groebner", "Groebner basis, standard monomials and socle of an ideal");
  common(gb);
  gb->add_option("--p", o.p, "prime field F_p")->check(CLI::Range(2, 97));
  gb->add_option("--field", o.field, "F<p>, F4 or F9");
  gb->add_option("--vars", o.vars, "comma separated variable names, highest first")->required();
  gb->add_option("--ideal", o.ideal, "comma separated generators")->required();
  gb->add_option("--order", o.order, "lex, grlex, or lex:x>y>... with an explicit precedence");

  auto* om = app.add_subcommand("omega", "Omega, Omega', Omega'' and Omega_Ch enumerations");
  height(om);
  common(om);
  grp(om);
  om->add_option("--v", o.v, "torsion level (default: from the group exponent)");
  om->add_option("--variant", o.variant, "omega, ch, prime or dprime");

  auto* ch = app.add_subcommand("chern", "presentation of the Chern approximation ring");
  height(ch);
  common(ch);
  grp(ch);
  ch->add_option("--v", o.v, "torsion level");
  ch->add_option("--prec", o.prec, "formal group law precision");

  auto* s4 = app.add_subcommand("sigma4", "Sigma_4 certificate");
  common(s4);
  auto* sd = app.add_subcommand("sdiv", "special divisor certificate");
  common(sd);
  auto* wt = app.add_subcommand("witness", "non-positive divisor witness");
  common(wt);
  wt->add_option("--n", o.n, "height")->check(CLI::Range(2, 4));

  auto* xs = app.add_subcommand("xspec", "extraspecial group census");
  height(xs);
  common(xs);
  xs->add_option("--d", o.d, "half dimension of V")->check(CLI::Range(1, 3));

  auto* tc = app.add_subcommand("table-check", "validate a character table file, or export a builtin one");
  common(tc);
  grp(tc);

  auto* all = app.add_subcommand("all", "run every acceptance pipeline");
  common(all);
  all->add_option("--seed", o.seed, "seed of the property sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "UsageError: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*fgl) return cmd_fgl(o);
    if (*gb) return cmd_groebner(o);
    if (*om) return cmd_omega(o);
    if (*ch) return cmd_chern(o);
    if (*s4) return emit(sigma4_pipeline(), o);
    if (*sd) return emit(sdiv_checks(), o);
    if (*wt) return emit(nonpositive_divisor_witness(o.n), o);
    if (*xs) return cmd_xspec(o);
    if (*tc) return cmd_table_check(o);
    if (*all) return cmd_all(o);
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const CertificateMismatch& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
