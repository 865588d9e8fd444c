#pragma once

// Exact solver for the small polynomial systems that show up when
// enumerating grouplikes, characters and comodule algebra maps.
//
// Strategy: eliminate every linear equation, then branch on the rational
// roots of some univariate equation, and repeat. Anything that does not
// reduce this way is reported loudly instead of being approximated.

#include <crossbraid/scalar.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossbraid {

class Polynomial {
 public:
  using Monomial = std::vector<unsigned>;  // exponent per variable

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Scalar& c);
  static Polynomial variable(std::size_t nvars, std::size_t var);

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;
  std::vector<std::size_t> variables() const;
  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Replaces variable `var` by `value` everywhere.
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;

  /// Coefficients c0..cd of a polynomial involving only `var`.
  std::vector<Scalar> univariate_coefficients(std::size_t var) const;

  std::string to_string() const;

 private:
  std::size_t nvars_;
  std::map<Monomial, Scalar> terms_;
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);

/// Raised when elimination stalls: no linear and no univariate equation.
class IrreducibleSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a branch leaves variables unconstrained.
class PositiveDimensional : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rational roots of c0 + c1 x + ... + cd x^d, each listed once, ascending.
/// Throws OutsideRationals if a nonconstant factor without rational roots
/// remains after deflation.
std::vector<Scalar> rational_roots(std::vector<Scalar> coeffs);

/// All common zeros of `equations` in Q^nvars, sorted lexicographically and
/// deduplicated. The zero set must be finite.
std::vector<Vector> solve_polynomial_system(std::size_t nvars, std::vector<Polynomial> equations);

}  // namespace crossbraid
