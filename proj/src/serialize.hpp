#pragma once

#include <string>

#include <gmpxx.h>
#include "json.hpp"

#include "census.hpp"
#include "order.hpp"
#include "recovery.hpp"
#include "semiprime.hpp"

namespace o2p {

// Insertion-ordered JSON keeps every emitted document byte-deterministic:
// we control key order, and all integers cross the boundary as decimal
// strings so no value is ever squeezed through a double.
using Json = nlohmann::ordered_json;

// Reduced "num/den" form, denominator always explicit ("3/5", "1/1").
std::string rational_string(const mpq_class& value);

Json semiprime_json(const Semiprime& s);
Json order_sample_json(const OrderSample& sample);
Json recovery_json(const RecoveryOutcome& outcome);
Json census_json(const CensusTable& table);
Json success_profile_json(const SuccessProfile& profile);

}  // namespace o2p
