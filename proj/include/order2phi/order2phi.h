/* order2phi: recover Euler's totient of a semiprime from the multiplicative
 * order of a random element, plus the related partial-information recoveries,
 * an exact element-order census, and a Monte Carlo experiment runner.
 *
 * Conventions:
 *   - Every big integer crosses this boundary as a decimal string.
 *   - Every returned char* is heap-allocated; release it with
 *     o2p_string_free. JSON documents are single-line and deterministic.
 *   - Functions return O2P_OK on completion. A recovery that ends in a
 *     verified failure is still O2P_OK; the *success out-flag carries the
 *     distinction. o2p_last_error() describes the most recent failure in
 *     the calling thread.
 */
#ifndef ORDER2PHI_H
#define ORDER2PHI_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef O2P_API
#if defined(_WIN32)
#define O2P_API
#else
#define O2P_API __attribute__((visibility("default")))
#endif
#endif

typedef enum o2p_status {
  O2P_OK = 0,
  O2P_ERR_DOMAIN = 1,      /* precondition violated (bit range, divisibility, ...) */
  O2P_ERR_NOT_UNIT = 2,    /* element shares a factor with the modulus */
  O2P_ERR_NO_SOLUTION = 3, /* quadratic has no nontrivial integer roots */
  O2P_ERR_RESOURCE = 4,    /* documented budget or ceiling exceeded */
  O2P_ERR_PARSE = 5,       /* malformed decimal string or JSON */
  O2P_ERR_NULL = 6,        /* required pointer argument was NULL */
  O2P_ERR_INTERNAL = 7     /* unexpected failure; see o2p_last_error */
} o2p_status;

/* A semiprime with known group structure (factored p-1 and q-1). */
typedef struct o2p_semiprime o2p_semiprime;

O2P_API const char* o2p_version(void);
O2P_API const char* o2p_status_message(o2p_status status);

/* Message for the most recent error in this thread; empty string if none.
 * The pointer stays valid until the next library call on the same thread. */
O2P_API const char* o2p_last_error(void);

O2P_API void o2p_string_free(char* text);

/* ---- moduli ---- */

/* Uniform random primes of exactly `bits` bits (3..64), p != q. */
O2P_API o2p_status o2p_semiprime_generate(unsigned bits, uint64_t seed, o2p_semiprime** out);

/* Primes of the form 2*(product of small primes)+1 with the factorization
 * recorded by construction; bits in 16..8192. */
O2P_API o2p_status o2p_semiprime_construct(unsigned bits, uint64_t seed, o2p_semiprime** out);

O2P_API o2p_status o2p_semiprime_from_primes(const char* p, const char* q, o2p_semiprime** out);

/* Factors n (desk scale); n must be a product of two distinct odd primes. */
O2P_API o2p_status o2p_semiprime_from_modulus(const char* n, o2p_semiprime** out);

/* {"n","p","q","p1_factors","q1_factors","phi","lambda","bits","seed"} */
O2P_API o2p_status o2p_semiprime_to_json(const o2p_semiprime* s, char** json_out);

O2P_API void o2p_semiprime_free(o2p_semiprime* s);

/* Deterministic per-trial seed derivation (domain separates streams).
 * Domain 1 seeds moduli, domain 2 seeds oracle draws; the experiment
 * runner uses exactly these, so gen with derived seeds reproduces the
 * moduli of a montecarlo run. */
#define O2P_SEED_DOMAIN_MODULUS 1
#define O2P_SEED_DOMAIN_ORACLE 2
O2P_API uint64_t o2p_derive_seed(uint64_t master, uint64_t domain, uint64_t index);

/* ---- order oracle ---- */

O2P_API o2p_status o2p_multiplicative_order(const o2p_semiprime* s, const char* element,
                                            char** order_out);

/* One oracle call: uniform unit and its exact order as {"a","order"}.
 * rejected_out (optional) counts discarded non-unit draws. */
O2P_API o2p_status o2p_sample_order(const o2p_semiprime* s, uint64_t seed, char** sample_json_out,
                                    uint64_t* rejected_out);

/* Independent small-modulus oracle by successive multiplication. */
O2P_API o2p_status o2p_brute_force_order(const char* element, const char* modulus,
                                         char** order_out);

/* ---- recovery ----
 * Each writes the outcome JSON {"method","status",("phi","p","q",)"trace"}
 * and sets *success to 1 on verified success, 0 on verified failure. */

O2P_API o2p_status o2p_recover_from_order(const char* n, const char* x, char** outcome_json,
                                          int* success);
O2P_API o2p_status o2p_recover_from_divisor(const char* n, const char* d, char** outcome_json,
                                            int* success);
O2P_API o2p_status o2p_recover_from_gcd(const char* n, const char* d, char** outcome_json,
                                        int* success);
O2P_API o2p_status o2p_recover_from_ed(const char* n, const char* e, const char* d,
                                       char** outcome_json, int* success);
O2P_API o2p_status o2p_recover_with_cofactor_boost(const char* n, const char* d,
                                                   char** outcome_json, int* success);

/* Split n given its exact totient; O2P_ERR_NO_SOLUTION when phi is wrong. */
O2P_API o2p_status o2p_factor_from_phi(const char* n, const char* phi, char** p_out,
                                       char** q_out);

/* ---- census ---- */

/* Number of units of order exactly x (x must divide lambda). */
O2P_API o2p_status o2p_count_order(const o2p_semiprime* s, const char* x, char** count_out);

/* {"n","phi","entries":{order:count,...}} via the explicit formula. */
O2P_API o2p_status o2p_census_formula(const o2p_semiprime* s, char** census_json);

/* Same document measured by brute force; n capped at 10^6. */
O2P_API o2p_status o2p_census_brute_force(const char* n, char** census_json);

/* {"success_count","phi","succeeding_orders",...,"probability":"num/den"} */
O2P_API o2p_status o2p_success_profile(const o2p_semiprime* s, char** profile_json);

/* Checks the census count is multiplicative over coprime divisor pairs. */
O2P_API o2p_status o2p_verify_multiplicativity(const o2p_semiprime* s, int* all_pass);

/* ---- experiments ----
 * params_json keys (all optional unless noted): "mode" ("generate" or
 * "construct"), "bits" (required, decimal string), "trials" (required),
 * "seed", "fixed" (bool), "threads", "timings" (bool), "disclose" (bool).
 * Writes the run summary and, when records_jsonl is non-NULL, one record
 * per line sorted by trial index. */
O2P_API o2p_status o2p_montecarlo(const char* params_json, char** summary_json,
                                  char** records_jsonl);

#ifdef __cplusplus
}
#endif

#endif /* ORDER2PHI_H */
