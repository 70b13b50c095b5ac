#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Problem size outside the supported family (even n, n < 3).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed argument: out-of-range index, mismatched orders, bad epsilon.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A dense oracle or brute-force routine was asked for more than its size cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A threshold search ran past its step cap without meeting the target.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws DomainError unless n is odd and n >= 3.
void require_odd_order(int n);

}  // namespace qwalk
