#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "padic_hg/scan.hpp"

using namespace padic_hg;

namespace {

std::string csv_of(const ScanConfig& cfg) {
  std::ostringstream os;
  write_csv(os, run_scan(cfg));
  return os.str();
}

}  // namespace

TEST_CASE("t and n specifications") {
  const auto all = TSpec::parse("all");
  CHECK(all.residues(7, Family::G) == std::vector<u64>{0, 1, 2, 3, 4, 5, 6});
  CHECK(all.residues(7, Family::Gtilde) == std::vector<u64>{1, 2, 3, 4, 5, 6});
  const auto list = TSpec::parse("-1, 1/2, 7");
  CHECK(list.residues(7, Family::G) == std::vector<u64>{0, 4, 6});
  CHECK(list.residues(7, Family::Gtilde) == std::vector<u64>{4, 6});
  CHECK(TSpec::parse("1/7").residues(7, Family::G).empty());
  CHECK_THROWS(TSpec::parse("1,,2"));

  CHECK(NSpec::parse("3..6").resolve(11) == std::vector<int>{3, 4, 5, 6});
  CHECK(NSpec::parse("4,p-1").resolve(7) == std::vector<int>{4, 6});
  CHECK(NSpec::parse("p-1").resolve(13) == std::vector<int>{12});
  CHECK_THROWS(NSpec::parse("2"));
  CHECK_THROWS(NSpec::parse("x"));
}

TEST_CASE("config validation") {
  ScanConfig cfg;
  cfg.method = EvalMethod::oracle;
  cfg.pmax = 200;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.method = EvalMethod::definition;
  cfg.pmax = 2000;
  cfg.precision = 3;
  CHECK_THROWS_AS(cfg.validate(), capacity_error);
  cfg.pmax = 50;
  CHECK_NOTHROW(cfg.validate());
  cfg.pmin = 60;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("CSV layout") {
  ScanConfig cfg;
  cfg.family = Family::Gtilde;
  cfg.n = NSpec::parse("4");
  cfg.t = TSpec::parse("1");
  cfg.pmin = 7;
  cfg.pmax = 7;
  cfg.method = EvalMethod::both;
  CHECK(csv_of(cfg) == "p,n,family,t,value_num,value_den,is_zero,method,agrees\n7,4,Gt,1,1,7,0,both,AGREE\n");
}

TEST_CASE("rows follow (p, n, t) order and are identical across worker counts") {
  ScanConfig cfg;
  cfg.n = NSpec::parse("3..5");
  cfg.pmax = 60;
  cfg.method = EvalMethod::both;
  cfg.workers = 1;
  const auto one = csv_of(cfg);
  for (unsigned w : {2u, 3u, 8u}) {
    cfg.workers = w;
    REQUIRE(csv_of(cfg) == one);
  }
  const auto res = run_scan(cfg);
  for (std::size_t i = 1; i < res.rows.size(); ++i) {
    const auto& a = res.rows[i - 1];
    const auto& b = res.rows[i];
    REQUIRE(std::tie(a.p, a.n, a.t) < std::tie(b.p, b.n, b.t));
  }
  for (const auto& row : res.rows) {
    REQUIRE(row.agrees.has_value());
    REQUIRE(*row.agrees);
    REQUIRE(row.value->num() == oracle::nGn(row.p, u64(row.n), row.t));
  }
}

TEST_CASE("3G3(1) zeros by congruence class") {
  ScanConfig cfg;
  cfg.t = TSpec::parse("1");
  cfg.pmax = 500;
  cfg.workers = 4;
  const auto res = run_scan(cfg);
  for (const auto& row : res.rows) REQUIRE((row.value->num() == 0) == (row.p % 12 != 1));
  const auto j = nlohmann::json::parse(summarize(res));
  CHECK(j["schema"] == 1);
  CHECK(j["bound_violations"] == 0);
  CHECK(j["failed"] == 0);
  CHECK(j["zeros_by_class"]["mod12"]["1"]["zeros"] == 0);
  CHECK(j["zeros_by_class"]["mod12"]["7"]["zeros"] == j["zeros_by_class"]["mod12"]["7"]["primes"]);
}

TEST_CASE("nGn(-1) vanishes for n = 4 and p = 3 mod 4") {
  ScanConfig cfg;
  cfg.n = NSpec::parse("4");
  cfg.t = TSpec::parse("-1");
  cfg.pmax = 1000;
  cfg.workers = 3;
  const auto res = run_scan(cfg);
  std::size_t checked = 0;
  for (const auto& row : res.rows) {
    if (row.p % 4 != 3) continue;
    REQUIRE(row.value->num() == 0);
    ++checked;
  }
  CHECK(checked > 80);
}

TEST_CASE("even-n G~ never vanishes") {
  ScanConfig cfg;
  cfg.family = Family::Gtilde;
  cfg.n = NSpec::parse("4");
  cfg.pmax = 100;
  const auto j = nlohmann::json::parse(summarize(run_scan(cfg)));
  CHECK(j["zeros"] == 0);
  CHECK(j["rows"].get<int>() > 1000);
}

TEST_CASE("a worker error leaves a FAILED row and the other primes") {
  ScanConfig cfg;
  cfg.method = EvalMethod::both;
  cfg.pmin = 5;
  cfg.pmax = 30;
  cfg.workers = 2;
  cfg.on_prime = [](u64 p) {
    if (p == 29) throw std::runtime_error("injected");
  };
  const auto res = run_scan(cfg);
  std::ostringstream os;
  write_csv(os, res);
  CHECK(os.str().find("\n29,0,G,0,FAILED,,,both,FAILED\n") != std::string::npos);
  CHECK(os.str().find("\n23,3,G,22,") != std::string::npos);
  const auto j = nlohmann::json::parse(summarize(res));
  CHECK(j["failed"] == 1);
  CHECK(j["errors"][0] == "p=29 n=0: injected");
}
