#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genocchi/dyck_histories.hpp"
#include "genocchi/serialize.hpp"
#include "genocchi/verify.hpp"

#include <set>
#include <sstream>

using namespace genocchi;
using nlohmann::json;

TEST_CASE("big integers in JSON") {
  CHECK(to_json(BigInt{42}) == json(42));
  const BigInt big = BigInt{1} << 80;
  CHECK(to_json(big).is_string());
  CHECK(bigint_from_json(to_json(big)) == big);
  CHECK(bigint_from_json(to_json(BigInt{-7})) == -7);
  CHECK_THROWS(bigint_from_json(json("12x")));
}

TEST_CASE("polynomial encodings round-trip") {
  const QPoly p{1, 0, 3};
  CHECK(to_json(p) == json::parse("[1,0,3]"));
  CHECK(qpoly_from_json(to_json(p)) == p);
  CHECK(to_json(QPoly{}) == json::array());
  const XQPoly c = gandhi(3);
  const json j = to_json(c);
  CHECK(j["rows"] == 3);
  CHECK(j["coeffs"].size() == 3);
  for (const auto& row : j["coeffs"]) CHECK(row.size() == j["cols"]);
  CHECK(xqpoly_from_json(j) == c);
  CHECK(to_json(seidel_triangle(3))["rows"] == json::parse("[[1],[1],[1,1]]"));
}

TEST_CASE("history encoding") {
  CHECK(monomial_string(0) == "1");
  CHECK(monomial_string(1) == "q");
  CHECK(monomial_string(3) == "q^3");
  for (int n = 0; n <= 3; ++n)
    for_each_history(n, [&](const DellacHistory& h) {
      const json j = to_json(h);
      CHECK(j["weight_exponent"] == history_weight_exponent(h));
      CHECK(history_from_json(j) == h);
      CHECK(history_from_json(json::parse(j.dump())) == h);
    });
  CHECK(parse_xi("[[0,0],[1,0]]") == std::vector<XiPair>{{0, 0}, {1, 0}});
  CHECK(parse_xi("[]").empty());
  CHECK_THROWS(parse_xi("[[0]]"));
  CHECK_THROWS(parse_xi("nope"));
}

TEST_CASE("check registry") {
  const std::set<std::string> expected{"seidel-recurrence", "h-divisibility", "dc-count", "phi-bijection",
                                       "phi-statistic", "tau-agreement", "orbit-structure", "switch-facts",
                                       "switch-connectivity", "history-count", "Phi-roundtrip", "Phi-weight",
                                       "fiber-sum", "lambda-lemma", "cfrac-agreement", "cbar-three-ways",
                                       "dc3-table"};
  std::set<std::string> names;
  for (const auto& c : registered_checks()) {
    names.insert(c.name);
    CHECK(c.min_n <= c.max_n);
    CHECK(find_check(c.name) == &c);
  }
  CHECK(names == expected);
  CHECK(find_check("nope") == nullptr);
  CHECK_THROWS_AS(run_check("nope", 1), std::invalid_argument);
  CHECK_THROWS_AS(run_check("dc-count", 0), std::out_of_range);
  CHECK_THROWS_AS(run_check("dc-count", 99), std::out_of_range);
}

TEST_CASE("every check passes at small sizes") {
  for (const auto& c : registered_checks())
    for (int n = c.min_n; n <= std::min(c.max_n, c.min_n + 3); ++n) {
      const auto r = run_check(c.name, n);
      INFO(c.name, " n=", n, " ", r.counterexample.value_or(""));
      CHECK(r.passed());
      CHECK(r.check_name == c.name);
      CHECK(r.n == n);
      CHECK(r.total_objects > 0);
    }
}

TEST_CASE("report examples") {
  const auto dc = run_check("dc-count", 3);
  CHECK(dc.passed());
  CHECK(dc.total_objects == 7);
  const auto pb = run_check("phi-bijection", 1);
  CHECK(pb.passed());
  CHECK(pb.total_objects == 1);
  CHECK(run_check("cbar-three-ways", 5).passed());

  const json j = dc.to_json();
  CHECK(j["schema"] == kSchemaVersion);
  CHECK(j["check"] == "dc-count");
  CHECK(j["n"] == 3);
  CHECK(j["total_objects"] == 7);
  CHECK(j["status"] == "pass");
  CHECK(j["counterexample"].is_null());
  CHECK(j.contains("elapsed_ms"));
  CHECK(dc.to_text().find("PASS") != std::string::npos);

  VerificationReport bad{"dc-count", 3, 7, Status::Fail, "1,1,2,2", 0};
  CHECK(bad.to_json()["status"] == "fail");
  CHECK(bad.to_json()["counterexample"] == "1,1,2,2");
  CHECK(bad.to_text().find("1,1,2,2") != std::string::npos);
}

TEST_CASE("correspondence table") {
  const auto one = table_rows(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].perm.to_string() == "2143");
  CHECK(one[0].weight_exponent == 0);

  std::set<std::string> perms;
  for (const auto& r : table_rows(3)) perms.insert(r.perm.to_string());
  CHECK(perms == std::set<std::string>{"41736285", "41736582", "71436285", "71436582", "51436287", "21736584",
                                       "21436587"});
  for (int n = 1; n <= kMaxTableN; ++n)
    for (const auto& r : table_rows(n)) {
      CHECK(r.st == binom2(n) - r.inv);
      CHECK(r.weight_exponent == r.st);
    }
  CHECK_THROWS_AS(table_rows(kMaxTableN + 1), std::out_of_range);
  CHECK_THROWS_AS(table_rows(0), std::out_of_range);

  const json j = json::parse(emit_table(3, TableFormat::Json));
  CHECK(j["schema"] == kSchemaVersion);
  CHECK(j["rows"].size() == 7);
  std::set<std::string> from_json;
  for (const auto& r : j["rows"]) from_json.insert(r["phi"].get<std::string>());
  CHECK(from_json == perms);

  const std::string csv = emit_table(3, TableFormat::Csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
  const std::string text = emit_table(3, TableFormat::Text);
  for (const auto& p : perms) CHECK(text.find(p) != std::string::npos);
  CHECK(emit_table(3, TableFormat::Text) == text);
}
