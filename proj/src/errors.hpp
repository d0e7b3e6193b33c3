#pragma once

#include <stdexcept>
#include <string>

#include "natural.hpp"

namespace o2p {

// Precondition violated (bad bit length, x not a divisor of lambda, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed decimal string at an external boundary.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented budget or ceiling was exceeded.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The quadratic x^2 - Bx + N has no nontrivial integral roots; signals a
// wrong phi candidate.
class no_solution_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// gcd(a, N) > 1: the sampled element is not a unit. Carries the nontrivial
// factor of N that fell out of the gcd.
class not_a_unit_error : public std::runtime_error {
 public:
  not_a_unit_error(std::string message, Natural factor)
      : std::runtime_error(std::move(message)), factor_(std::move(factor)) {}
  const Natural& factor() const { return factor_; }

 private:
  Natural factor_;
};

}  // namespace o2p
