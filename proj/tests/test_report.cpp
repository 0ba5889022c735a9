#include "diagcount/commands.hpp"
#include "diagcount/errors.hpp"
#include "diagcount/report.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace diagcount;

namespace {

template <class T>
void check_round_trip(const T& x) {
  const std::string text = to_json(x);
  CHECK(from_json<T>(text) == x);
  CHECK(to_json(from_json<T>(text)) == text);
  CHECK(from_json<T>(to_json(x, -1)) == x);
}

}  // namespace

TEST_CASE("JSON round trips") {
  RunConfig config;
  for (auto [p, s, m, n] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned, unsigned>>{
           {3, 4, 3, 3}, {5, 1, 2, 3}, {3, 8, 5, 3}, {7, 2, 2, 4}, {11, 1, 1, 2}, {3, 64, 5, 40}}) {
    const CountReport r = cmd_count(p, s, m, n, s <= 8, config);
    check_round_trip(r);
    check_round_trip(r.spec);
    check_round_trip(r.result);
  }
  check_round_trip(cmd_table1(config));
  check_round_trip(cmd_partitions(3, 6));
  check_round_trip(cmd_partitions(13, 6));
  const AuditBundle audit = cmd_audit(5, 2, 3, config);
  check_round_trip(audit);
  check_round_trip(audit.identities);
  check_round_trip(cmd_audit(7, 2, 3, config));
  check_round_trip(gauss_count(classify(29, 2, 3, 6)));

  ExtensionRequest req;
  req.kind = "semiprimitive";
  req.p = 3;
  req.s = 4;
  req.m = 3;
  req.n = 2;
  req.odd_parts = {{5, 2}};
  req.verify = true;
  check_round_trip(cmd_extensions(req, config));
  req.verify = false;
  check_round_trip(cmd_extensions(req, config));
}

TEST_CASE("JSON shape") {
  const auto j = nlohmann::json::parse(to_json(cmd_count(3, 4, 3, 3, true, {})));
  CHECK(j["result"]["N"] == "7041");
  CHECK(j["spec"]["tag"] == "T1");
  CHECK(j["spec"]["q"] == "81");
  CHECK(j["consistent"] == true);
  CHECK(j["checks"].size() == 3);
  const auto big = nlohmann::json::parse(to_json(cmd_count(3, 64, 5, 40, false, {})));
  CHECK(big["result"]["N"].get<std::string>().size() > 1000);
}

TEST_CASE("malformed JSON is a validation error") {
  for (const std::string text : {"", "{", "[]", R"({"p": 3})", R"({"N": 5, "method": "x", "partitions": [], "notes": []})"}) {
    try {
      from_json<CountResult>(text);
      FAIL("expected an error for " << text);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::InvalidArgument);
    }
  }
}

TEST_CASE("CSV layout") {
  const std::string one = to_csv(cmd_count(3, 4, 3, 3, false, {}));
  CHECK(one == "p,s,m,n,N\n3,4,3,3,7041\n");
  const std::string table = to_csv(cmd_table1({}));
  CHECK(table.rfind("p,s,m,n,N\n3,4,3,3,7041\n", 0) == 0);
  CHECK(std::count(table.begin(), table.end(), '\n') == 19);
  CHECK(table.find("5,4,4,4,369328129\n") != std::string::npos);
}

TEST_CASE("command records") {
  const Table1Report t = cmd_table1({});
  CHECK(t.rows.size() == 18);
  CHECK(t.all_passed());
  const PartitionReport b = cmd_partitions(3, 3);
  CHECK(b.kind == "B");
  CHECK(b.rows[1].first == -1);
  CHECK(b.rows[1].second == 2);
  CHECK_THROWS_AS(cmd_partitions(7, 3), Error);
  CHECK_THROWS_AS(cmd_partitions(9, 3), Error);
  const AuditBundle na = cmd_audit(7, 2, 3, {});
  CHECK(na.all_passed());
  CHECK_FALSE(na.decomposition.entries.front().applicable);
  RunConfig bad;
  bad.dp_budget = 0;
  CHECK_THROWS_AS(cmd_table1(bad), Error);
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}
