#pragma once

#include <stdexcept>
#include <string>

namespace ellcover {

// Malformed input: degree mismatch, bad cycle notation, invalid partition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force request exceeds the configured degree bound.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(int requested, int bound)
      : std::runtime_error("capacity exceeded: degree " + std::to_string(requested) +
                           " is above the brute-force bound " + std::to_string(bound)),
        requested_(requested),
        bound_(bound) {}

  int requested() const { return requested_; }
  int bound() const { return bound_; }

 private:
  int requested_;
  int bound_;
};

// An internal identity failed (Riemann-Hurwitz parity, non-integral orbifold order, ...).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CacheCorruption : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ellcover
