#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "commands.hpp"

#include <json.hpp>

#include <map>

using namespace spw::cli;

namespace {

const Table& find(const Outcome& o, const std::string& name) {
  for (const auto& t : o.tables)
    if (t.name == name) return t;
  throw std::runtime_error("no table " + name);
}

std::size_t col(const Table& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    if (t.columns[i] == name) return i;
  throw std::runtime_error("no column " + name);
}

}  // namespace

TEST_CASE("forms census at q = 3, n = 3") {
  RunConfig cfg;
  cfg.q = 3;
  cfg.n = 3;
  Outcome o = run_forms(cfg);
  CHECK(o.exit_code() == kOk);
  const Table& t = find(o, "forms");
  CHECK(t.rows.size() == 7);
  long long sum = 0;
  for (const auto& r : t.rows) {
    sum += std::stoll(r[col(t, "brute_count")]);
    CHECK(r[col(t, "match")] == "true");
  }
  CHECK(sum == 729);
}

TEST_CASE("rank table at q = 3, n = 2") {
  RunConfig cfg;
  Outcome o = run_rank_table(cfg);
  CHECK(o.failures.empty());
  const Table& t = find(o, "rank_table");
  std::map<std::string, int> ranks;
  for (const auto& r : t.rows) ++ranks[r[col(t, "rank")]];
  CHECK(ranks["0"] == 1);
  CHECK(ranks["1"] == 4);
}

TEST_CASE("eta without a table") {
  RunConfig cfg;
  cfg.n = 3;
  cfg.k = 2;
  cfg.beta_type = "minus";
  Outcome o = run_eta(cfg);
  CHECK(o.exit_code() == kOk);
  const Table& t = find(o, "eta");
  CHECK(t.rows.size() == 4);
  for (const auto& r : t.rows) CHECK(r[col(t, "mult_top")] == r[col(t, "dim_tau")]);
}

TEST_CASE("config validation") {
  RunConfig cfg;
  cfg.q = 4;
  CHECK_THROWS(validate("forms", cfg));
  CHECK(run("forms", cfg) == kUsage);
  cfg.q = 3;
  cfg.k = 4;
  CHECK_THROWS(validate("eta", cfg));
  CHECK_NOTHROW(validate("forms", cfg));
  cfg.k = 1;
  cfg.central_char_a = 3;
  CHECK_THROWS(validate("weil", cfg));
  CHECK_THROWS(dispatch("nope", RunConfig{}));
}

TEST_CASE("renderings") {
  Table t{"demo", {"a", "b"}, {}};
  t.add({"1", "x,y"});
  CHECK_THROWS(t.add({"1"}));
  Header h{{"seed", "0"}};
  CHECK(to_csv(t, h) == "# schema: spw.demo.v1\n# seed: 0\na,b\n1,\"x,y\"\n");
  auto j = nlohmann::json::parse(to_json(t, h));
  CHECK(j["schema"] == "spw.demo.v1");
  CHECK(j["rows"][0]["b"] == "x,y");
}

TEST_CASE("weil report is deterministic for a seed") {
  RunConfig cfg;
  cfg.n = 1;
  cfg.q = 5;
  cfg.samples = 20;
  cfg.seed = 11;
  Outcome a = run_weil(cfg), b = run_weil(cfg);
  CHECK(a.exit_code() == kOk);
  REQUIRE(a.tables.size() == b.tables.size());
  const Header h = report_header("weil", cfg);
  for (std::size_t i = 0; i < a.tables.size(); ++i) CHECK(to_csv(a.tables[i], h) == to_csv(b.tables[i], h));
}
