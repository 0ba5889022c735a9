#include "diagcount/report.hpp"

#include <sstream>

#include "diagcount/errors.hpp"
#include "json.hpp"

namespace diagcount {

using nlohmann::json;

bool CountReport::consistent() const {
  for (const auto& c : checks) {
    if (c.status == "disagree") return false;
  }
  return true;
}

bool Table1Report::all_passed() const {
  for (const auto& r : rows) {
    if (!r.passed) return false;
  }
  return true;
}

namespace {

json big(const BigInt& x) { return x.get_str(); }

BigInt read_big(const json& j) {
  BigInt out;
  if (!j.is_string() || out.set_str(j.get<std::string>(), 10) != 0) {
    throw Error(Errc::InvalidArgument, "expected a decimal integer string");
  }
  return out;
}

json enc(const ProblemSpec& x) {
  return {{"p", x.p}, {"s", x.s}, {"m", x.m}, {"n", x.n}, {"q", big(x.q)}, {"v2", x.v2}, {"tag", case_tag_name(x.tag)}};
}

ProblemSpec dec_spec(const json& j) {
  ProblemSpec x;
  x.p = j.at("p").get<std::uint64_t>();
  x.s = j.at("s").get<unsigned>();
  x.m = j.at("m").get<unsigned>();
  x.n = j.at("n").get<unsigned>();
  x.q = read_big(j.at("q"));
  x.v2 = j.at("v2").get<unsigned>();
  x.tag = parse_case_tag(j.at("tag").get<std::string>());
  return x;
}

json enc(const PartitionUse& x) {
  return {{"kind", x.kind}, {"r", x.r}, {"k", x.k}, {"first", big(x.first)}, {"second", big(x.second)}};
}

PartitionUse dec_partition_use(const json& j) {
  PartitionUse x;
  x.kind = j.at("kind").get<std::string>();
  x.r = j.at("r").get<unsigned>();
  x.k = j.at("k").get<unsigned>();
  x.first = read_big(j.at("first"));
  x.second = read_big(j.at("second"));
  return x;
}

json enc(const CountResult& x) {
  json parts = json::array();
  for (const auto& u : x.partitions) parts.push_back(enc(u));
  return {{"N", big(x.N)}, {"method", x.method}, {"partitions", parts}, {"notes", x.notes}};
}

CountResult dec_count_result(const json& j) {
  CountResult x;
  x.N = read_big(j.at("N"));
  x.method = j.at("method").get<std::string>();
  for (const auto& u : j.at("partitions")) x.partitions.push_back(dec_partition_use(u));
  x.notes = j.at("notes").get<std::vector<std::string>>();
  return x;
}

json enc(const AuditEntry& x) {
  return {{"id", x.id},           {"applicable", x.applicable}, {"residual", x.residual},
          {"tolerance", x.tolerance}, {"passed", x.passed},         {"note", x.note}};
}

AuditEntry dec_audit_entry(const json& j) {
  AuditEntry x;
  x.id = j.at("id").get<std::string>();
  x.applicable = j.at("applicable").get<bool>();
  x.residual = j.at("residual").get<double>();
  x.tolerance = j.at("tolerance").get<double>();
  x.passed = j.at("passed").get<bool>();
  x.note = j.at("note").get<std::string>();
  return x;
}

json enc(const AuditReport& x) {
  json entries = json::array();
  for (const auto& e : x.entries) entries.push_back(enc(e));
  return {{"p", x.p},
          {"s", x.s},
          {"q", x.q},
          {"m", x.m},
          {"precision", precision_name(x.precision)},
          {"all_passed", x.all_passed()},
          {"entries", entries}};
}

AuditReport dec_audit_report(const json& j) {
  AuditReport x;
  x.p = j.at("p").get<std::uint64_t>();
  x.s = j.at("s").get<unsigned>();
  x.q = j.at("q").get<std::uint64_t>();
  x.m = j.at("m").get<unsigned>();
  x.precision = parse_precision(j.at("precision").get<std::string>());
  for (const auto& e : j.at("entries")) x.entries.push_back(dec_audit_entry(e));
  return x;
}

json enc(const GaussCount& x) {
  return {{"N", big(x.N)},
          {"residual", x.residual},
          {"error_bound", x.error_bound},
          {"precision", precision_name(x.precision)},
          {"escalated", x.escalated}};
}

GaussCount dec_gauss_count(const json& j) {
  GaussCount x;
  x.N = read_big(j.at("N"));
  x.residual = j.at("residual").get<double>();
  x.error_bound = j.at("error_bound").get<double>();
  x.precision = parse_precision(j.at("precision").get<std::string>());
  x.escalated = j.at("escalated").get<bool>();
  return x;
}

json enc(const OracleCheck& x) {
  return {{"oracle", x.oracle},
          {"status", x.status},
          {"N", x.N ? big(*x.N) : json(nullptr)},
          {"detail", x.detail}};
}

OracleCheck dec_oracle_check(const json& j) {
  OracleCheck x;
  x.oracle = j.at("oracle").get<std::string>();
  x.status = j.at("status").get<std::string>();
  if (!j.at("N").is_null()) x.N = read_big(j.at("N"));
  x.detail = j.at("detail").get<std::string>();
  return x;
}

json enc(const CountReport& x) {
  json checks = json::array();
  for (const auto& c : x.checks) checks.push_back(enc(c));
  return {{"spec", enc(x.spec)}, {"result", enc(x.result)}, {"checks", checks}, {"consistent", x.consistent()}};
}

CountReport dec_count_report(const json& j) {
  CountReport x;
  x.spec = dec_spec(j.at("spec"));
  x.result = dec_count_result(j.at("result"));
  for (const auto& c : j.at("checks")) x.checks.push_back(dec_oracle_check(c));
  return x;
}

json enc(const Table1Report& x) {
  json rows = json::array();
  for (const auto& r : x.rows) {
    rows.push_back({{"p", r.p},
                    {"s", r.s},
                    {"m", r.m},
                    {"n", r.n},
                    {"tag", r.tag},
                    {"expected", big(r.expected)},
                    {"computed", big(r.computed)},
                    {"passed", r.passed}});
  }
  return {{"rows", rows}, {"all_passed", x.all_passed()}};
}

Table1Report dec_table1(const json& j) {
  Table1Report x;
  for (const auto& r : j.at("rows")) {
    Table1Row row;
    row.p = r.at("p").get<std::uint64_t>();
    row.s = r.at("s").get<unsigned>();
    row.m = r.at("m").get<unsigned>();
    row.n = r.at("n").get<unsigned>();
    row.tag = r.at("tag").get<std::string>();
    row.expected = read_big(r.at("expected"));
    row.computed = read_big(r.at("computed"));
    row.passed = r.at("passed").get<bool>();
    x.rows.push_back(row);
  }
  return x;
}

json enc(const PartitionReport& x) {
  json rows = json::array();
  for (const auto& r : x.rows) rows.push_back({{"k", r.k}, {"first", big(r.first)}, {"second", big(r.second)}});
  return {{"p", x.p}, {"kind", x.kind}, {"rows", rows}};
}

PartitionReport dec_partitions(const json& j) {
  PartitionReport x;
  x.p = j.at("p").get<std::uint64_t>();
  x.kind = j.at("kind").get<std::string>();
  for (const auto& r : j.at("rows")) {
    x.rows.push_back(PartitionRow{r.at("k").get<unsigned>(), read_big(r.at("first")), read_big(r.at("second"))});
  }
  return x;
}

json enc(const AuditBundle& x) {
  return {{"identities", enc(x.identities)}, {"decomposition", enc(x.decomposition)}, {"all_passed", x.all_passed()}};
}

AuditBundle dec_audit_bundle(const json& j) {
  return AuditBundle{dec_audit_report(j.at("identities")), dec_audit_report(j.at("decomposition"))};
}

json enc(const ExtensionReport& x) {
  json params = json::array();
  for (const auto& [k, v] : x.params) params.push_back({{"name", k}, {"value", v}});
  return {{"kind", x.kind},
          {"base", enc(x.base)},
          {"params", params},
          {"N", big(x.N)},
          {"check", x.check ? enc(*x.check) : json(nullptr)},
          {"consistent", x.consistent()}};
}

ExtensionReport dec_extension(const json& j) {
  ExtensionReport x;
  x.kind = j.at("kind").get<std::string>();
  x.base = dec_spec(j.at("base"));
  for (const auto& p : j.at("params")) x.params.emplace_back(p.at("name").get<std::string>(), p.at("value").get<std::string>());
  x.N = read_big(j.at("N"));
  if (!j.at("check").is_null()) x.check = dec_oracle_check(j.at("check"));
  return x;
}

template <class T, class Decode>
T parse_with(const std::string& text, Decode decode) {
  try {
    return decode(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string to_json(const ProblemSpec& x, int indent) { return enc(x).dump(indent); }
std::string to_json(const CountResult& x, int indent) { return enc(x).dump(indent); }
std::string to_json(const AuditReport& x, int indent) { return enc(x).dump(indent); }
std::string to_json(const GaussCount& x, int indent) { return enc(x).dump(indent); }
std::string to_json(const CountReport& x, int indent) { return enc(x).dump(indent); }
std::string to_json(const Table1Report& x, int indent) { return enc(x).dump(indent); }
std::string to_json(const PartitionReport& x, int indent) { return enc(x).dump(indent); }
std::string to_json(const AuditBundle& x, int indent) { return enc(x).dump(indent); }
std::string to_json(const ExtensionReport& x, int indent) { return enc(x).dump(indent); }

template <>
ProblemSpec from_json<ProblemSpec>(const std::string& text) {
  return parse_with<ProblemSpec>(text, dec_spec);
}
template <>
CountResult from_json<CountResult>(const std::string& text) {
  return parse_with<CountResult>(text, dec_count_result);
}
template <>
AuditReport from_json<AuditReport>(const std::string& text) {
  return parse_with<AuditReport>(text, dec_audit_report);
}
template <>
GaussCount from_json<GaussCount>(const std::string& text) {
  return parse_with<GaussCount>(text, dec_gauss_count);
}
template <>
CountReport from_json<CountReport>(const std::string& text) {
  return parse_with<CountReport>(text, dec_count_report);
}
template <>
Table1Report from_json<Table1Report>(const std::string& text) {
  return parse_with<Table1Report>(text, dec_table1);
}
template <>
PartitionReport from_json<PartitionReport>(const std::string& text) {
  return parse_with<PartitionReport>(text, dec_partitions);
}
template <>
AuditBundle from_json<AuditBundle>(const std::string& text) {
  return parse_with<AuditBundle>(text, dec_audit_bundle);
}
template <>
ExtensionReport from_json<ExtensionReport>(const std::string& text) {
  return parse_with<ExtensionReport>(text, dec_extension);
}

std::string to_csv(const CountReport& x) {
  std::ostringstream os;
  os << "p,s,m,n,N\n" << x.spec.p << ',' << x.spec.s << ',' << x.spec.m << ',' << x.spec.n << ',' << x.result.N << '\n';
  return os.str();
}

std::string to_csv(const Table1Report& x) {
  std::ostringstream os;
  os << "p,s,m,n,N\n";
  for (const auto& r : x.rows) os << r.p << ',' << r.s << ',' << r.m << ',' << r.n << ',' << r.computed << '\n';
  return os.str();
}

}  // namespace diagcount
