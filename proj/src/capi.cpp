#include "order2phi/order2phi.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "arith.hpp"
#include "census.hpp"
#include "errors.hpp"
#include "experiment.hpp"
#include "order.hpp"
#include "recovery.hpp"
#include "rng.hpp"
#include "semiprime.hpp"
#include "serialize.hpp"

struct o2p_semiprime {
  o2p::Semiprime value;
};

namespace {

constexpr const char* kVersion = "0.1.0";

thread_local std::string g_last_error;

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

o2p_status fail(o2p_status code, const char* message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
o2p_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return O2P_OK;
  } catch (const o2p::parse_error& e) {
    return fail(O2P_ERR_PARSE, e.what());
  } catch (const o2p::domain_error& e) {
    return fail(O2P_ERR_DOMAIN, e.what());
  } catch (const o2p::not_a_unit_error& e) {
    return fail(O2P_ERR_NOT_UNIT, e.what());
  } catch (const o2p::no_solution_error& e) {
    return fail(O2P_ERR_NO_SOLUTION, e.what());
  } catch (const o2p::resource_error& e) {
    return fail(O2P_ERR_RESOURCE, e.what());
  } catch (const std::exception& e) {
    return fail(O2P_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(O2P_ERR_INTERNAL, "unknown error");
  }
}

o2p_status null_arg(const char* what) {
  return fail(O2P_ERR_NULL, what);
}

o2p_status make_semiprime(o2p_semiprime** out, o2p::Semiprime (*build)(unsigned, uint64_t),
                          unsigned bits, uint64_t seed) {
  if (!out) return null_arg("output handle is NULL");
  *out = nullptr;
  return guarded([&] { *out = new o2p_semiprime{build(bits, seed)}; });
}

using RecoverFn = o2p::RecoveryOutcome (*)(const o2p::Natural&, const o2p::Natural&);

o2p_status run_recovery(const char* n, const char* input, RecoverFn fn, char** outcome_json,
                        int* success) {
  if (!n || !input) return null_arg("input string is NULL");
  if (!outcome_json || !success) return null_arg("output pointer is NULL");
  *outcome_json = nullptr;
  *success = 0;
  return guarded([&] {
    o2p::RecoveryOutcome outcome = fn(o2p::parse_natural(n), o2p::parse_natural(input));
    *outcome_json = dup_string(o2p::recovery_json(outcome).dump());
    *success = outcome.success ? 1 : 0;
  });
}

uint64_t params_u64(const o2p::Json& params, const char* key, uint64_t fallback) {
  if (!params.contains(key)) return fallback;
  const auto& value = params.at(key);
  if (value.is_string()) {
    return o2p::to_uint64(o2p::parse_natural(value.template get<std::string>()));
  }
  if (value.is_number_unsigned()) return value.template get<uint64_t>();
  throw o2p::parse_error(std::string("parameter '") + key + "' must be a decimal string");
}

bool params_bool(const o2p::Json& params, const char* key, bool fallback) {
  if (!params.contains(key)) return fallback;
  const auto& value = params.at(key);
  if (!value.is_boolean()) {
    throw o2p::parse_error(std::string("parameter '") + key + "' must be a boolean");
  }
  return value.template get<bool>();
}

}  // namespace

extern "C" {

const char* o2p_version(void) { return kVersion; }

const char* o2p_status_message(o2p_status status) {
  switch (status) {
    case O2P_OK:
      return "ok";
    case O2P_ERR_DOMAIN:
      return "domain error";
    case O2P_ERR_NOT_UNIT:
      return "element is not a unit";
    case O2P_ERR_NO_SOLUTION:
      return "no integral factor solution";
    case O2P_ERR_RESOURCE:
      return "resource budget exceeded";
    case O2P_ERR_PARSE:
      return "parse error";
    case O2P_ERR_NULL:
      return "null argument";
    case O2P_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* o2p_last_error(void) { return g_last_error.c_str(); }

void o2p_string_free(char* text) { std::free(text); }

o2p_status o2p_semiprime_generate(unsigned bits, uint64_t seed, o2p_semiprime** out) {
  return make_semiprime(out, &o2p::generate_semiprime, bits, seed);
}

o2p_status o2p_semiprime_construct(unsigned bits, uint64_t seed, o2p_semiprime** out) {
  return make_semiprime(out, &o2p::construct_semiprime, bits, seed);
}

o2p_status o2p_semiprime_from_primes(const char* p, const char* q, o2p_semiprime** out) {
  if (!p || !q) return null_arg("prime string is NULL");
  if (!out) return null_arg("output handle is NULL");
  *out = nullptr;
  return guarded([&] {
    *out = new o2p_semiprime{
        o2p::semiprime_from_primes(o2p::parse_natural(p), o2p::parse_natural(q))};
  });
}

o2p_status o2p_semiprime_from_modulus(const char* n, o2p_semiprime** out) {
  if (!n) return null_arg("modulus string is NULL");
  if (!out) return null_arg("output handle is NULL");
  *out = nullptr;
  return guarded(
      [&] { *out = new o2p_semiprime{o2p::semiprime_from_modulus(o2p::parse_natural(n))}; });
}

o2p_status o2p_semiprime_to_json(const o2p_semiprime* s, char** json_out) {
  if (!s) return null_arg("semiprime handle is NULL");
  if (!json_out) return null_arg("output pointer is NULL");
  *json_out = nullptr;
  return guarded([&] { *json_out = dup_string(o2p::semiprime_json(s->value).dump()); });
}

void o2p_semiprime_free(o2p_semiprime* s) { delete s; }

uint64_t o2p_derive_seed(uint64_t master, uint64_t domain, uint64_t index) {
  return o2p::derive_seed(master, domain, index);
}

o2p_status o2p_multiplicative_order(const o2p_semiprime* s, const char* element,
                                    char** order_out) {
  if (!s) return null_arg("semiprime handle is NULL");
  if (!element) return null_arg("element string is NULL");
  if (!order_out) return null_arg("output pointer is NULL");
  *order_out = nullptr;
  return guarded([&] {
    *order_out = dup_string(
        o2p::to_decimal(o2p::multiplicative_order(o2p::parse_natural(element), s->value)));
  });
}

o2p_status o2p_sample_order(const o2p_semiprime* s, uint64_t seed, char** sample_json_out,
                            uint64_t* rejected_out) {
  if (!s) return null_arg("semiprime handle is NULL");
  if (!sample_json_out) return null_arg("output pointer is NULL");
  *sample_json_out = nullptr;
  return guarded([&] {
    o2p::Rng rng(seed);
    o2p::OrderSample sample = o2p::sample_order(s->value, rng);
    *sample_json_out = dup_string(o2p::order_sample_json(sample).dump());
    if (rejected_out) *rejected_out = sample.rejected;
  });
}

o2p_status o2p_brute_force_order(const char* element, const char* modulus, char** order_out) {
  if (!element || !modulus) return null_arg("input string is NULL");
  if (!order_out) return null_arg("output pointer is NULL");
  *order_out = nullptr;
  return guarded([&] {
    *order_out = dup_string(o2p::to_decimal(
        o2p::brute_force_order(o2p::parse_natural(element), o2p::parse_natural(modulus))));
  });
}

o2p_status o2p_recover_from_order(const char* n, const char* x, char** outcome_json,
                                  int* success) {
  return run_recovery(n, x, &o2p::recover_phi_from_order, outcome_json, success);
}

o2p_status o2p_recover_from_divisor(const char* n, const char* d, char** outcome_json,
                                    int* success) {
  return run_recovery(n, d, &o2p::phi_from_large_divisor, outcome_json, success);
}

o2p_status o2p_recover_from_gcd(const char* n, const char* d, char** outcome_json, int* success) {
  return run_recovery(n, d, &o2p::factor_from_gcd, outcome_json, success);
}

o2p_status o2p_recover_from_ed(const char* n, const char* e, const char* d, char** outcome_json,
                               int* success) {
  if (!n || !e || !d) return null_arg("input string is NULL");
  if (!outcome_json || !success) return null_arg("output pointer is NULL");
  *outcome_json = nullptr;
  *success = 0;
  return guarded([&] {
    o2p::RecoveryOutcome outcome = o2p::phi_from_ed(
        o2p::parse_natural(n), o2p::parse_natural(e), o2p::parse_natural(d));
    *outcome_json = dup_string(o2p::recovery_json(outcome).dump());
    *success = outcome.success ? 1 : 0;
  });
}

o2p_status o2p_recover_with_cofactor_boost(const char* n, const char* d, char** outcome_json,
                                           int* success) {
  return run_recovery(n, d, &o2p::factor_with_cofactor_boost, outcome_json, success);
}

o2p_status o2p_factor_from_phi(const char* n, const char* phi, char** p_out, char** q_out) {
  if (!n || !phi) return null_arg("input string is NULL");
  if (!p_out || !q_out) return null_arg("output pointer is NULL");
  *p_out = nullptr;
  *q_out = nullptr;
  return guarded([&] {
    o2p::FactorPair pair =
        o2p::factor_from_phi(o2p::parse_natural(n), o2p::parse_natural(phi));
    *p_out = dup_string(o2p::to_decimal(pair.p));
    *q_out = dup_string(o2p::to_decimal(pair.q));
  });
}

o2p_status o2p_count_order(const o2p_semiprime* s, const char* x, char** count_out) {
  if (!s) return null_arg("semiprime handle is NULL");
  if (!x) return null_arg("order string is NULL");
  if (!count_out) return null_arg("output pointer is NULL");
  *count_out = nullptr;
  return guarded([&] {
    *count_out = dup_string(
        o2p::to_decimal(o2p::count_order_formula(o2p::parse_natural(x), s->value)));
  });
}

o2p_status o2p_census_formula(const o2p_semiprime* s, char** census_json) {
  if (!s) return null_arg("semiprime handle is NULL");
  if (!census_json) return null_arg("output pointer is NULL");
  *census_json = nullptr;
  return guarded(
      [&] { *census_json = dup_string(o2p::census_json(o2p::census_from_formula(s->value)).dump()); });
}

o2p_status o2p_census_brute_force(const char* n, char** census_json) {
  if (!n) return null_arg("modulus string is NULL");
  if (!census_json) return null_arg("output pointer is NULL");
  *census_json = nullptr;
  return guarded([&] {
    *census_json =
        dup_string(o2p::census_json(o2p::brute_force_census(o2p::parse_natural(n))).dump());
  });
}

o2p_status o2p_success_profile(const o2p_semiprime* s, char** profile_json) {
  if (!s) return null_arg("semiprime handle is NULL");
  if (!profile_json) return null_arg("output pointer is NULL");
  *profile_json = nullptr;
  return guarded([&] {
    *profile_json =
        dup_string(o2p::success_profile_json(o2p::exact_success_probability(s->value)).dump());
  });
}

o2p_status o2p_verify_multiplicativity(const o2p_semiprime* s, int* all_pass) {
  if (!s) return null_arg("semiprime handle is NULL");
  if (!all_pass) return null_arg("output pointer is NULL");
  *all_pass = 0;
  return guarded([&] { *all_pass = o2p::verify_multiplicativity(s->value).all_pass() ? 1 : 0; });
}

o2p_status o2p_montecarlo(const char* params_json, char** summary_json, char** records_jsonl) {
  if (!params_json) return null_arg("params string is NULL");
  if (!summary_json) return null_arg("output pointer is NULL");
  *summary_json = nullptr;
  if (records_jsonl) *records_jsonl = nullptr;
  return guarded([&] {
    o2p::Json params;
    try {
      params = o2p::Json::parse(params_json);
    } catch (const std::exception& e) {
      throw o2p::parse_error(std::string("invalid params JSON: ") + e.what());
    }
    if (!params.is_object()) throw o2p::parse_error("params JSON must be an object");

    o2p::MonteCarloParams mc;
    if (params.contains("mode")) {
      if (!params.at("mode").is_string()) throw o2p::parse_error("parameter 'mode' must be a string");
      mc.mode = params.at("mode").template get<std::string>();
    }
    mc.bits = static_cast<unsigned>(params_u64(params, "bits", 0));
    mc.trials = params_u64(params, "trials", 0);
    mc.seed = params_u64(params, "seed", 0);
    mc.fixed_modulus = params_bool(params, "fixed", false);
    mc.threads = static_cast<unsigned>(params_u64(params, "threads", 1));
    mc.timings = params_bool(params, "timings", false);
    mc.disclose = params_bool(params, "disclose", false);

    std::vector<o2p::TrialRecord> records;
    o2p::RunSummary summary = o2p::run_montecarlo(mc, records);

    if (records_jsonl) {
      std::string lines;
      const std::string id = summary.experiment_id;
      for (const o2p::TrialRecord& record : records) {
        lines += o2p::trial_record_json(record, id, mc.seed, mc.disclose, mc.timings).dump();
        lines += '\n';
      }
      *records_jsonl = dup_string(lines);
    }
    *summary_json = dup_string(o2p::run_summary_json(summary, mc.timings).dump());
  });
}

}  // extern "C"
