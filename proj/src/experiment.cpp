#include "experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <thread>

#include "errors.hpp"
#include "rng.hpp"

namespace o2p {

namespace {

Semiprime make_modulus(const MonteCarloParams& params, uint64_t index) {
  const uint64_t seed = derive_seed(params.seed, kSeedDomainModulus, index);
  if (params.mode == "construct") return construct_semiprime(params.bits, seed);
  return generate_semiprime(params.bits, seed);
}

void validate(const MonteCarloParams& params) {
  if (params.trials < 1) throw domain_error("trials must be at least 1");
  if (params.mode != "generate" && params.mode != "construct") {
    throw domain_error("mode must be 'generate' or 'construct'");
  }
  if (params.mode == "generate") {
    if (params.bits < kGenerateMinBits || params.bits > kGenerateMaxBits) {
      throw domain_error("generate mode needs bits in [3, 64]");
    }
  } else if (params.bits < kConstructMinBits || params.bits > kConstructMaxBits) {
    throw domain_error("construct mode needs bits in [16, 8192]");
  }
}

void run_trial(const MonteCarloParams& params, const Semiprime* shared, uint64_t index,
               TrialRecord& record) {
  const auto start = std::chrono::steady_clock::now();
  record.trial = index;
  try {
    record.modulus = shared ? *shared : make_modulus(params, index);
    Rng oracle_rng(derive_seed(params.seed, kSeedDomainOracle, index));
    record.sample = sample_order(record.modulus, oracle_rng);
    record.outcome = recover_phi_from_order(record.modulus.n, record.sample.order);
    record.sound = !record.outcome.success ||
                   (record.outcome.phi == record.modulus.phi &&
                    record.outcome.p == record.modulus.p && record.outcome.q == record.modulus.q);
  } catch (const resource_error& e) {
    record.error = e.what();
    record.outcome = RecoveryOutcome{};
    record.outcome.method = "order";
    record.sound = true;
  }
  record.wall_time_ns = static_cast<uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start)
          .count());
}

}  // namespace

std::string experiment_id(const MonteCarloParams& params) {
  std::string id = "mc-" + params.mode + "-b" + std::to_string(params.bits) + "-s" +
                   std::to_string(params.seed) + "-t" + std::to_string(params.trials);
  if (params.fixed_modulus) id += "-fixed";
  return id;
}

RunSummary run_montecarlo(const MonteCarloParams& params, std::vector<TrialRecord>& records) {
  validate(params);
  const auto start = std::chrono::steady_clock::now();

  Semiprime shared;
  if (params.fixed_modulus) shared = make_modulus(params, 0);
  const Semiprime* shared_ptr = params.fixed_modulus ? &shared : nullptr;

  records.assign(params.trials, TrialRecord{});
  const unsigned workers =
      std::max(1u, std::min<unsigned>(params.threads, std::thread::hardware_concurrency() * 4 + 4));
  if (workers == 1 || params.trials == 1) {
    for (uint64_t i = 0; i < params.trials; ++i) run_trial(params, shared_ptr, i, records[i]);
  } else {
    std::atomic<uint64_t> next{0};
    auto worker = [&] {
      while (true) {
        const uint64_t i = next.fetch_add(1);
        if (i >= params.trials) return;
        run_trial(params, shared_ptr, i, records[i]);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  RunSummary summary;
  summary.experiment_id = experiment_id(params);
  summary.rng_algorithm = kRngAlgorithm;
  summary.mode = params.mode;
  summary.bits = params.bits;
  summary.seed = params.seed;
  summary.trials = params.trials;
  summary.fixed_modulus = params.fixed_modulus;

  for (const TrialRecord& record : records) {
    if (!record.error.empty()) ++summary.errored_trials;
    if (record.outcome.success) ++summary.successes;
    if (!record.sound) ++summary.soundness_violations;
    summary.lucky_factor_events += record.sample.rejected;
  }
  summary.empirical_rate = mpq_class(Natural(static_cast<unsigned long>(summary.successes)),
                                     Natural(static_cast<unsigned long>(summary.trials)));
  summary.empirical_rate.canonicalize();

  // Exact per-modulus success probabilities, deduplicated by modulus; the
  // mean (and the Poisson-binomial spread) give the z-score. Unavailable
  // when any modulus blows the divisor budget.
  summary.exact_available = true;
  std::map<Natural, mpq_class> cache;
  mpq_class mean_sum(0), variance_sum(0);
  for (const TrialRecord& record : records) {
    if (!record.error.empty()) continue;
    auto it = cache.find(record.modulus.n);
    if (it == cache.end()) {
      try {
        SuccessProfile profile = exact_success_probability(record.modulus, params.divisor_budget);
        it = cache.emplace(record.modulus.n, profile.probability).first;
      } catch (const resource_error&) {
        summary.exact_available = false;
        break;
      }
    }
    mean_sum += it->second;
    variance_sum += it->second * (1 - it->second);
  }
  if (summary.exact_available && summary.trials > summary.errored_trials) {
    summary.exact_probability =
        mean_sum / mpq_class(static_cast<unsigned long>(summary.trials - summary.errored_trials));
    summary.exact_probability.canonicalize();
    if (variance_sum > 0) {
      summary.z_available = true;
      summary.z_score = (static_cast<double>(summary.successes) - mean_sum.get_d()) /
                        std::sqrt(variance_sum.get_d());
    }
  } else {
    summary.exact_available = false;
  }

  summary.wall_time_ns = static_cast<uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start)
          .count());
  return summary;
}

Json trial_record_json(const TrialRecord& record, const std::string& experiment_id,
                       uint64_t master_seed, bool disclose, bool timings) {
  Json out;
  out["experiment_id"] = experiment_id;
  out["seed"] = std::to_string(master_seed);
  out["trial"] = std::to_string(record.trial);
  out["bits"] = std::to_string(record.modulus.bits);
  if (disclose) {
    out["semiprime"] = semiprime_json(record.modulus);
  } else {
    out["n"] = to_decimal(record.modulus.n);
  }
  if (record.error.empty()) {
    out["oracle"] = order_sample_json(record.sample);
    out["lucky_factor_events"] = std::to_string(record.sample.rejected);
    out["outcome"] = recovery_json(record.outcome);
  } else {
    out["error"] = record.error;
  }
  if (timings) out["wall_time_ns"] = std::to_string(record.wall_time_ns);
  return out;
}

Json run_summary_json(const RunSummary& summary, bool timings) {
  Json out;
  out["experiment_id"] = summary.experiment_id;
  out["rng"] = summary.rng_algorithm;
  out["mode"] = summary.mode;
  out["bits"] = std::to_string(summary.bits);
  out["seed"] = std::to_string(summary.seed);
  out["trials"] = std::to_string(summary.trials);
  out["fixed"] = summary.fixed_modulus;
  out["successes"] = std::to_string(summary.successes);
  out["lucky_factor_events"] = std::to_string(summary.lucky_factor_events);
  out["soundness_violations"] = std::to_string(summary.soundness_violations);
  out["errored_trials"] = std::to_string(summary.errored_trials);
  out["empirical_rate"] = rational_string(summary.empirical_rate);
  if (summary.exact_available) {
    out["exact_probability"] = rational_string(summary.exact_probability);
  } else {
    out["exact_probability"] = nullptr;
  }
  if (summary.z_available) {
    out["z_score"] = summary.z_score;
  } else {
    out["z_score"] = nullptr;
  }
  if (timings) out["wall_time_ns"] = std::to_string(summary.wall_time_ns);
  return out;
}

}  // namespace o2p
