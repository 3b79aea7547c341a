#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "chernlab/groups.hpp"
#include "chernlab/table_json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + CHERNLAB_BIN + std::string(" ") + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("chernlab_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

const json* clause(const json& cert, const std::string& name) {
  for (auto& c : cert["clauses"])
    if (c["name"] == name) return &c;
  return nullptr;
}

}  // namespace

TEST(Cli, SigmaFourToFile) {
  auto path = scratch("sigma4.json");
  auto r = run("sigma4 --out " + path.string());
  EXPECT_EQ(r.code, 0);
  auto j = json::parse(slurp(path));
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["schema"], "chernlab/1");
  auto* c = clause(j, "(g) 17 standard monomials");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ((*c)["witness"]["dimension"], 17);
}

TEST(Cli, FglSeries) {
  auto r = run("fgl --p 2 --n 2 --prec 4 --series 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x\n");
  r = run("fgl --p 2 --n 2 --prec 32 --series -1");
  EXPECT_EQ(r.out, "x^22 + x^16 + x^10 + x^4 + x\n");
}

TEST(Cli, FglCertificate) {
  auto r = run("fgl --p 3 --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["status"], "pass");
}

TEST(Cli, OmegaVariants) {
  auto r = run("omega --group sigma3 --p 3 --n 2 --variant ch");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["count"], 5);
  r = run("omega --group sigma4 --p 2 --n 2");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["count"], 17);
  EXPECT_EQ(j["maps"]["kappa"].size(), 17u);
  r = run("omega --group sigma4 --p 2 --n 2 --variant prime");
  EXPECT_EQ(json::parse(r.out)["count"], 17);
}

TEST(Cli, Groebner) {
  auto r = run("groebner --p 3 --vars x,y --ideal 'x^2 + y,y^2' --order lex");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["dimension"], 4);
  EXPECT_TRUE(j["is_groebner_basis"].get<bool>());
  EXPECT_EQ(j["basis"].size(), 2u);
}

TEST(Cli, ChernPresentation) {
  auto r = run("chern --group sigma3 --p 3 --n 2");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["dimension"], 5);
  EXPECT_TRUE(j["certified"].get<bool>());
}

TEST(Cli, OtherPipelines) {
  for (auto args : {"sdiv", "witness --n 2", "xspec --p 3 --d 1 --n 1"}) {
    auto r = run(args);
    EXPECT_EQ(r.code, 0) << args;
    EXPECT_EQ(json::parse(r.out)["status"], "pass") << args;
  }
}

TEST(Cli, TextFormat) {
  auto r = run("sdiv --format text");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("sdiv: pass", 0), 0u);
}

TEST(Cli, TableRoundTrip) {
  auto path = scratch("sigma4_table.json");
  auto r = run("table-check --group sigma4 --out " + path.string());
  ASSERT_EQ(r.code, 0);
  auto got = chernlab::ingest_table(path.string());
  EXPECT_EQ(chernlab::table_to_json(got.table), chernlab::table_to_json(chernlab::sigma4_table()));
  r = run("table-check --group sigma4 --table " + path.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(clause(json::parse(r.out), "identical to builtin sigma4"), nullptr);
}

TEST(Cli, CorruptedTableIsRejected) {
  auto j = chernlab::table_to_json(chernlab::sigma4_table());
  j["irreducibles"][3]["values"][1] = json::array({1, 2});
  auto path = scratch("corrupt.json");
  std::ofstream(path) << j.dump(2);
  auto r = run("table-check --table " + path.string());
  EXPECT_NE(r.code, 0);
  EXPECT_THROW(chernlab::ingest_table(path.string()), chernlab::ValidationError);
}

TEST(Cli, UserD8Table) {
  std::string table = std::string(CHERNLAB_SAMPLES) + "/d8_table.json";
  auto r = run("table-check --table " + table);
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  auto* c = clause(j, "fusion into sigma4 is consistent");
  ASSERT_NE(c, nullptr);
  EXPECT_TRUE((*c)["pass"].get<bool>());
  r = run("omega --table " + table + " --p 2 --n 1 --variant ch");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["count"], 5);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("fgl --p").code, 2);
  EXPECT_EQ(run("omega --group sigma4 --p 2 --n 2 --variant bogus").code, 2);
  EXPECT_EQ(run("sigma4", "CHERNLAB_CEILING=bogus=1").code, 2);
  EXPECT_EQ(run("omega --group sigma4 --p 2 --n 2", "CHERNLAB_CEILING=group=10").code, 3);
}

TEST(Cli, Deterministic) {
  auto a = run("sigma4"), b = run("sigma4");
  EXPECT_EQ(a.out, b.out);
  auto c = run("omega --group D8 --p 2 --n 2 --variant ch"), d = run("omega --group D8 --p 2 --n 2 --variant ch");
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, All) {
  auto path = scratch("all.json");
  auto r = run("all --out " + path.string());
  EXPECT_EQ(r.code, 0);
  auto j = json::parse(slurp(path));
  EXPECT_EQ(j["status"], "pass");
  EXPECT_GE(j["clauses"].size(), 12u);
}
