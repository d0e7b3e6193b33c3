// Command-line front end. Links the C API only; all big integers stay
// decimal strings end to end. Exit codes: 0 success, 2 verified recovery
// failure, 64 usage error, 70 resource/internal error.

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "order2phi/order2phi.h"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitVerifiedFailure = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct UsageError {
  std::string message;
};

// Frees C API strings on scope exit.
struct StringGuard {
  char* ptr = nullptr;
  ~StringGuard() { o2p_string_free(ptr); }
};

int status_exit_code(o2p_status status) {
  switch (status) {
    case O2P_OK:
      return kExitSuccess;
    case O2P_ERR_DOMAIN:
    case O2P_ERR_PARSE:
    case O2P_ERR_NULL:
      return kExitUsage;
    default:
      return kExitInternal;
  }
}

int report_status(o2p_status status) {
  std::cerr << "error: " << o2p_status_message(status);
  const char* detail = o2p_last_error();
  if (detail && *detail) std::cerr << ": " << detail;
  std::cerr << "\n";
  return status_exit_code(status);
}

uint64_t parse_u64(const std::string& text, const char* what) {
  uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw UsageError{std::string(what) + " must be a decimal integer, got '" + text + "'"};
  }
  return value;
}

// --seed beats ORDER2PHI_SEED beats 0.
uint64_t resolve_seed(const std::optional<std::string>& flag) {
  if (flag) return parse_u64(*flag, "--seed");
  if (const char* env = std::getenv("ORDER2PHI_SEED")) {
    return parse_u64(env, "ORDER2PHI_SEED");
  }
  return 0;
}

// Output sink: stdout by default, the --out file when given.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw UsageError{"cannot open output file '" + path + "'"};
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int run_gen(unsigned bits, uint64_t count, uint64_t seed, const std::string& mode,
            const std::string& out_path) {
  Sink sink(out_path);
  for (uint64_t i = 0; i < count; ++i) {
    const uint64_t item_seed = o2p_derive_seed(seed, O2P_SEED_DOMAIN_MODULUS, i);
    o2p_semiprime* handle = nullptr;
    o2p_status status = mode == "construct" ? o2p_semiprime_construct(bits, item_seed, &handle)
                                            : o2p_semiprime_generate(bits, item_seed, &handle);
    if (status != O2P_OK) return report_status(status);
    StringGuard json;
    status = o2p_semiprime_to_json(handle, &json.ptr);
    o2p_semiprime_free(handle);
    if (status != O2P_OK) return report_status(status);
    sink.stream() << json.ptr << "\n";
  }
  sink.stream().flush();
  return kExitSuccess;
}

int run_recover(const std::string& method, const std::string& n,
                const std::optional<std::string>& x, const std::optional<std::string>& d,
                const std::optional<std::string>& e, const std::string& out_path) {
  auto need = [&](const std::optional<std::string>& value, const char* flag) -> const char* {
    if (!value) throw UsageError{"method '" + method + "' requires " + flag};
    return value->c_str();
  };

  StringGuard outcome;
  int success = 0;
  o2p_status status = O2P_OK;
  if (method == "order") {
    status = o2p_recover_from_order(n.c_str(), need(x, "--x"), &outcome.ptr, &success);
  } else if (method == "divisor") {
    status = o2p_recover_from_divisor(n.c_str(), need(d, "--d"), &outcome.ptr, &success);
  } else if (method == "gcd") {
    status = o2p_recover_from_gcd(n.c_str(), need(d, "--d"), &outcome.ptr, &success);
  } else if (method == "ed") {
    status = o2p_recover_from_ed(n.c_str(), need(e, "--e"), need(d, "--d"), &outcome.ptr,
                                 &success);
  } else {
    status = o2p_recover_with_cofactor_boost(n.c_str(), need(d, "--d"), &outcome.ptr, &success);
  }
  if (status != O2P_OK) return report_status(status);

  Sink sink(out_path);
  sink.stream() << outcome.ptr << "\n";
  sink.stream().flush();
  return success ? kExitSuccess : kExitVerifiedFailure;
}

int run_montecarlo(unsigned bits, uint64_t trials, uint64_t seed, const std::string& mode,
                   bool fixed, unsigned threads, bool timings, bool disclose,
                   const std::string& out_path) {
  nlohmann::ordered_json params;
  params["mode"] = mode;
  params["bits"] = std::to_string(bits);
  params["trials"] = std::to_string(trials);
  params["seed"] = std::to_string(seed);
  params["fixed"] = fixed;
  params["threads"] = std::to_string(threads);
  params["timings"] = timings;
  params["disclose"] = disclose;

  StringGuard summary;
  StringGuard records;
  o2p_status status = o2p_montecarlo(params.dump().c_str(), &summary.ptr, &records.ptr);
  if (status != O2P_OK) return report_status(status);

  Sink sink(out_path);
  sink.stream() << records.ptr;  // one line per trial, already newline-terminated
  sink.stream() << summary.ptr << "\n";
  sink.stream().flush();
  return kExitSuccess;
}

int run_census(const std::optional<std::string>& n, const std::optional<std::string>& p,
               const std::optional<std::string>& q, bool check, const std::string& out_path) {
  if (n && (p || q)) throw UsageError{"give either --n or --p/--q, not both"};
  if (!n && !(p && q)) throw UsageError{"census needs --n or both --p and --q"};

  o2p_semiprime* handle = nullptr;
  o2p_status status = n ? o2p_semiprime_from_modulus(n->c_str(), &handle)
                        : o2p_semiprime_from_primes(p->c_str(), q->c_str(), &handle);
  if (status != O2P_OK) return report_status(status);
  std::unique_ptr<o2p_semiprime, decltype(&o2p_semiprime_free)> guard(handle,
                                                                      &o2p_semiprime_free);

  StringGuard census;
  status = o2p_census_formula(handle, &census.ptr);
  if (status != O2P_OK) return report_status(status);
  StringGuard profile;
  status = o2p_success_profile(handle, &profile.ptr);
  if (status != O2P_OK) return report_status(status);

  if (check) {
    StringGuard semiprime_doc;
    status = o2p_semiprime_to_json(handle, &semiprime_doc.ptr);
    if (status != O2P_OK) return report_status(status);
    const std::string modulus =
        nlohmann::json::parse(semiprime_doc.ptr).at("n").get<std::string>();

    StringGuard brute;
    status = o2p_census_brute_force(modulus.c_str(), &brute.ptr);
    if (status != O2P_OK) return report_status(status);
    if (nlohmann::json::parse(census.ptr) != nlohmann::json::parse(brute.ptr)) {
      std::cerr << "error: formula census disagrees with brute force for n=" << modulus << "\n";
      return kExitInternal;
    }
  }

  Sink sink(out_path);
  sink.stream() << census.ptr << "\n" << profile.ptr << "\n";
  sink.stream().flush();
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"totient recovery from element orders, with census and experiment tooling"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(o2p_version()); });

  // gen
  auto* gen = app.add_subcommand("gen", "emit random semiprimes, one JSON object per line");
  unsigned gen_bits = 0;
  uint64_t gen_count = 1;
  std::optional<std::string> gen_seed;
  std::string gen_mode = "generate";
  std::string gen_out;
  gen->add_option("--bits", gen_bits, "prime bit length")->required();
  gen->add_option("--count", gen_count, "how many moduli")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "master seed (default: ORDER2PHI_SEED or 0)");
  gen->add_option("--mode", gen_mode, "generate (uniform primes) or construct (built primes)")
      ->check(CLI::IsMember({"generate", "construct"}));
  gen->add_option("--out", gen_out, "write to file instead of stdout");

  // recover
  auto* recover = app.add_subcommand("recover", "recover the totient and factor the modulus");
  std::string rec_method;
  std::string rec_n;
  std::optional<std::string> rec_x, rec_d, rec_e;
  std::string rec_out;
  recover->add_option("--method", rec_method, "order | divisor | gcd | ed | boost")
      ->required()
      ->check(CLI::IsMember({"order", "divisor", "gcd", "ed", "boost"}));
  recover->add_option("--n", rec_n, "modulus (decimal)")->required();
  recover->add_option("--x", rec_x, "element order (method order)");
  recover->add_option("--d", rec_d, "divisor, gcd, or private exponent (per method)");
  recover->add_option("--e", rec_e, "public exponent (method ed)");
  recover->add_option("--out", rec_out, "write to file instead of stdout");

  // montecarlo
  auto* mc = app.add_subcommand("montecarlo", "seeded trials: one oracle call, one recovery");
  unsigned mc_bits = 0;
  uint64_t mc_trials = 0;
  std::optional<std::string> mc_seed;
  std::string mc_mode = "generate";
  bool mc_fixed = false;
  unsigned mc_threads = 1;
  bool mc_timings = false;
  bool mc_disclose = false;
  std::string mc_out;
  mc->add_option("--bits", mc_bits, "prime bit length")->required();
  mc->add_option("--trials", mc_trials, "number of trials")->required()
      ->check(CLI::PositiveNumber);
  mc->add_option("--seed", mc_seed, "master seed (default: ORDER2PHI_SEED or 0)");
  mc->add_option("--mode", mc_mode, "generate or construct")
      ->check(CLI::IsMember({"generate", "construct"}));
  mc->add_flag("--fixed", mc_fixed, "share one modulus across all trials");
  mc->add_option("--threads", mc_threads, "worker threads (never changes output)")
      ->check(CLI::PositiveNumber);
  mc->add_flag("--timings", mc_timings, "include wall times (breaks byte determinism)");
  mc->add_flag("--disclose", mc_disclose, "records carry the full semiprime");
  mc->add_option("--out", mc_out, "write to file instead of stdout");

  // census
  auto* census = app.add_subcommand("census", "order census and exact success probability");
  std::optional<std::string> cen_n, cen_p, cen_q;
  bool cen_check = false;
  std::string cen_out;
  census->add_option("--n", cen_n, "semiprime modulus (decimal, will be factored)");
  census->add_option("--p", cen_p, "first prime");
  census->add_option("--q", cen_q, "second prime");
  census->add_flag("--check", cen_check, "cross-validate against the brute-force oracle");
  census->add_option("--out", cen_out, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      return run_gen(gen_bits, gen_count, resolve_seed(gen_seed), gen_mode, gen_out);
    }
    if (*recover) {
      return run_recover(rec_method, rec_n, rec_x, rec_d, rec_e, rec_out);
    }
    if (*mc) {
      return run_montecarlo(mc_bits, mc_trials, resolve_seed(mc_seed), mc_mode, mc_fixed,
                            mc_threads, mc_timings, mc_disclose, mc_out);
    }
    if (*census) {
      return run_census(cen_n, cen_p, cen_q, cen_check, cen_out);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
