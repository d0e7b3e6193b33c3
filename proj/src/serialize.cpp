#include "serialize.hpp"

namespace o2p {

namespace {

Json factors_json(const FactoredInteger& f) {
  Json out = Json::array();
  for (const auto& pp : f.factors) {
    out.push_back({to_decimal(pp.prime), std::to_string(pp.exponent)});
  }
  return out;
}

}  // namespace

std::string rational_string(const mpq_class& value) {
  mpq_class reduced = value;
  reduced.canonicalize();
  return reduced.get_num().get_str() + "/" + reduced.get_den().get_str();
}

Json semiprime_json(const Semiprime& s) {
  Json out;
  out["n"] = to_decimal(s.n);
  out["p"] = to_decimal(s.p);
  out["q"] = to_decimal(s.q);
  out["p1_factors"] = factors_json(s.p_minus_1);
  out["q1_factors"] = factors_json(s.q_minus_1);
  out["phi"] = to_decimal(s.phi);
  out["lambda"] = to_decimal(s.lambda);
  out["bits"] = std::to_string(s.bits);
  out["seed"] = std::to_string(s.seed);
  return out;
}

Json order_sample_json(const OrderSample& sample) {
  Json out;
  out["a"] = to_decimal(sample.element);
  out["order"] = to_decimal(sample.order);
  return out;
}

Json recovery_json(const RecoveryOutcome& outcome) {
  Json out;
  out["method"] = outcome.method;
  out["status"] = outcome.success ? "success" : "verified_failure";
  if (outcome.success) {
    out["phi"] = to_decimal(outcome.phi);
    out["p"] = to_decimal(outcome.p);
    out["q"] = to_decimal(outcome.q);
  }
  Json trace = Json::object();
  for (const auto& [name, value] : outcome.trace) trace[name] = to_decimal(value);
  out["trace"] = std::move(trace);
  return out;
}

Json census_json(const CensusTable& table) {
  Json entries = Json::object();
  for (const auto& entry : table.entries) {
    entries[to_decimal(entry.order)] = to_decimal(entry.count);
  }
  Json out;
  out["n"] = to_decimal(table.n);
  out["phi"] = to_decimal(table.phi);
  out["entries"] = std::move(entries);
  return out;
}

Json success_profile_json(const SuccessProfile& profile) {
  Json orders = Json::array();
  for (const Natural& x : profile.succeeding_orders) orders.push_back(to_decimal(x));
  Json out;
  out["success_count"] = to_decimal(profile.success_count);
  out["phi"] = to_decimal(profile.phi);
  out["succeeding_orders"] = std::move(orders);
  out["probability"] = rational_string(profile.probability);
  return out;
}

}  // namespace o2p
