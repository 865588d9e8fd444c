#pragma once

// Exact rational scalars. Everything downstream works over Q; there is no
// floating point anywhere in the library.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crossbraid {

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Scalar = mpq_class;

/// Dense column vector of scalars.
using Vector = std::vector<Scalar>;

/// Thrown when an exact computation needs a value that is not rational.
class OutsideRationals : public std::runtime_error {
 public:
  explicit OutsideRationals(const std::string& what)
      : std::runtime_error("solution outside the rationals: " + what) {}
};

/// Parses "p", "-p" or "p/q". Rejects floats and malformed input.
Scalar parse_scalar(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

}  // namespace crossbraid
