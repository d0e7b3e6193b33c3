#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "census.hpp"
#include "order.hpp"
#include "recovery.hpp"
#include "semiprime.hpp"
#include "serialize.hpp"

namespace o2p {

struct MonteCarloParams {
  std::string mode = "generate";  // "generate" | "construct"
  unsigned bits = 0;
  uint64_t trials = 0;
  uint64_t seed = 0;
  bool fixed_modulus = false;  // one modulus shared by every trial
  unsigned threads = 1;        // worker count; never affects the output
  bool timings = false;        // emit wall times (breaks byte-determinism)
  bool disclose = false;       // records carry the full semiprime, not just n
  uint64_t divisor_budget = kDefaultDivisorBudget;
};

struct TrialRecord {
  uint64_t trial = 0;
  Semiprime modulus;
  OrderSample sample;
  RecoveryOutcome outcome;
  bool sound = true;       // a success with the wrong totient flips this
  std::string error;       // resource-error message; trial still counted
  uint64_t wall_time_ns = 0;
};

struct RunSummary {
  std::string experiment_id;
  std::string rng_algorithm;
  std::string mode;
  unsigned bits = 0;
  uint64_t seed = 0;
  uint64_t trials = 0;
  bool fixed_modulus = false;
  uint64_t successes = 0;
  uint64_t lucky_factor_events = 0;
  uint64_t soundness_violations = 0;
  uint64_t errored_trials = 0;
  mpq_class empirical_rate;    // successes / trials
  bool exact_available = false;
  mpq_class exact_probability; // mean per-trial success probability
  bool z_available = false;
  double z_score = 0.0;        // (successes - mean) / stddev
  uint64_t wall_time_ns = 0;   // whole-run time; emitted only with timings
};

// Runs `trials` independent trials: build (or reuse) a modulus, call the
// order oracle once, run the order recovery, audit soundness against the
// known totient. Per-trial seeds are derived from the master seed and the
// trial index, so the worker count cannot change any record. Records are
// returned sorted by trial index.
RunSummary run_montecarlo(const MonteCarloParams& params, std::vector<TrialRecord>& records);

std::string experiment_id(const MonteCarloParams& params);

Json trial_record_json(const TrialRecord& record, const std::string& experiment_id,
                       uint64_t master_seed, bool disclose, bool timings);
Json run_summary_json(const RunSummary& summary, bool timings);

}  // namespace o2p
