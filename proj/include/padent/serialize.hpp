#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "padent/entropy.hpp"

namespace padent {

using Json = nlohmann::ordered_json;

/// Bumped whenever a field changes meaning or is removed.
inline constexpr int kSchemaVersion = 1;

// Big integers are written as decimal strings so round trips are exact.

inline Json to_json(const PadicScalar& x) {
  Json j;
  j["p"] = x.prime();
  j["zero"] = x.is_zero();
  if (x.is_zero()) {
    j["absolute_precision"] = x.absolute_precision();
  } else {
    j["valuation"] = x.valuation();
    j["unit"] = x.unit().get_str();
    j["relative_precision"] = x.precision();
    j["absolute_precision"] = x.absolute_precision();
  }
  j["digits"] = x.digits();
  j["text"] = x.str();
  return j;
}

inline PadicScalar padic_from_json(const Json& j) {
  const long p = j.at("p").get<long>();
  if (j.at("zero").get<bool>()) return PadicScalar::zero(p, j.at("absolute_precision").get<long>());
  return PadicScalar::from_parts(p, j.at("valuation").get<long>(), BigInt(j.at("unit").get<std::string>()),
                                 j.at("relative_precision").get<long>());
}

inline const char* kind_name(GroupDescriptor::Kind k) {
  switch (k) {
    case GroupDescriptor::Kind::Cyclic: return "cyclic";
    case GroupDescriptor::Kind::Heisenberg: return "heisenberg";
    case GroupDescriptor::Kind::Product: return "product";
  }
  return "?";
}

inline Json to_json(const GroupDescriptor& g) {
  Json j;
  j["kind"] = kind_name(g.kind);
  if (g.kind == GroupDescriptor::Kind::Product) {
    j["factors"] = Json::array();
    for (const auto& f : g.factors) j["factors"].push_back(to_json(f));
  } else {
    j["n"] = g.n;
  }
  return j;
}

inline GroupDescriptor descriptor_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "cyclic") return GroupDescriptor::cyclic(j.at("n").get<long>());
  if (kind == "heisenberg") return GroupDescriptor::heisenberg(j.at("n").get<long>());
  require(kind == "product", ErrorCode::InvalidArgument, "unknown group kind '" + kind + "'");
  std::vector<GroupDescriptor> fs;
  for (const auto& f : j.at("factors")) fs.push_back(descriptor_from_json(f));
  return GroupDescriptor::product(std::move(fs));
}

inline Json to_json(const FixCountRecord& r) {
  Json j;
  j["quotient"] = to_json(r.quotient);
  j["quotient_name"] = r.quotient.str();
  j["index"] = r.index.get_str();
  j["signed_det"] = r.signed_det.get_str();
  j["fix_count"] = r.fix_count.get_str();
  j["p_valuation"] = r.p_valuation;
  j["unit_log"] = to_json(r.unit_log);
  j["normalized"] = to_json(r.normalized);
  return j;
}

inline FixCountRecord record_from_json(const Json& j) {
  FixCountRecord r;
  r.quotient = descriptor_from_json(j.at("quotient"));
  r.index = BigInt(j.at("index").get<std::string>());
  r.signed_det = BigInt(j.at("signed_det").get<std::string>());
  r.fix_count = BigInt(j.at("fix_count").get<std::string>());
  r.p_valuation = j.at("p_valuation").get<long>();
  r.unit_log = padic_from_json(j.at("unit_log"));
  r.normalized = padic_from_json(j.at("normalized"));
  return r;
}

inline Json to_json(const ConvergenceReport& rep) {
  Json j;
  j["records"] = Json::array();
  for (const auto& r : rep.records) j["records"].push_back(to_json(r));
  j["agreement"] = rep.agreement;
  j["consecutive_agreement"] = rep.consecutive_agreement();
  j["tail"] = rep.tail;
  j["stable_digits_history"] = rep.stable_digits_history;
  j["stable_digits"] = rep.stable_digits;
  j["target"] = rep.target;
  j["verdict"] = verdict_name(rep.verdict);
  j["stabilized_value"] = to_json(rep.stabilized_value);
  return j;
}

/// Top-level document: {"schema_version", "command", ...payload}.
inline Json make_document(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

/// One line per record: quotient, index, fix_count, v_p, normalized digits.
inline void write_csv(std::ostream& os, const ConvergenceReport& rep) {
  os << "quotient,index,fix_count,v_p,normalized\n";
  for (const auto& r : rep.records)
    os << r.quotient.str() << ',' << r.index << ',' << r.fix_count << ',' << r.p_valuation << ','
       << r.normalized.digits() << '\n';
}

}  // namespace padent
