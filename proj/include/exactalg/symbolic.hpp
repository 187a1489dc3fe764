#pragma once

#include "exactalg/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace exactalg {

/// Product of named positive symbols with integer exponents, e.g. "pi^2" or
/// "A*pi^-1". The empty product is the unit monomial "1". Exponents are never
/// zero in stored form.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial symbol(const std::string& name, int exponent = 1);

  bool is_one() const { return factors_.empty(); }
  const std::map<std::string, int>& factors() const { return factors_; }

  Monomial operator*(const Monomial& rhs) const;
  Monomial inverse() const;

  bool operator==(const Monomial& other) const = default;
  auto operator<=>(const Monomial& other) const = default;

  std::string to_string() const;
  /// Parses strings of the shape "1", "pi", "pi^2", "A*pi^-1".
  static Monomial parse(const std::string& text);

 private:
  std::map<std::string, int> factors_;
};

/// Exact Q-linear combination of monomials. Stored with no zero
/// coefficients; the empty combination is 0. Equality is componentwise.
/// All symbols are read as positive reals, so a value whose coefficients
/// are all positive is itself positive.
class SymbolicReal {
 public:
  SymbolicReal() = default;
  SymbolicReal(const Rational& r);
  SymbolicReal(long long n) : SymbolicReal(Rational(n)) {}
  static SymbolicReal symbol(const std::string& name);
  static SymbolicReal term(const Rational& coefficient, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Coefficient of the unit monomial.
  Rational rational_part() const;
  bool is_single_term() const { return terms_.size() == 1; }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  SymbolicReal operator+(const SymbolicReal& rhs) const;
  SymbolicReal operator-(const SymbolicReal& rhs) const;
  SymbolicReal operator-() const;
  SymbolicReal operator*(const SymbolicReal& rhs) const;
  SymbolicReal scaled(const Rational& c) const;

  /// Exact division by a single-term value (coefficient times monomial);
  /// total because monomial exponents may be negative.
  /// Throws std::domain_error when divisor is zero or has several terms.
  SymbolicReal divided_by_term(const SymbolicReal& divisor) const;

  bool operator==(const SymbolicReal& other) const = default;
  auto operator<=>(const SymbolicReal& other) const = default;

  enum class Sign { Zero, Positive, Negative, Mixed };
  /// Sign decided from the stored representation: all symbols are positive,
  /// so uniformly positive (negative) coefficients give a definite sign.
  Sign sign() const;

  std::string to_string() const;

 private:
  std::map<Monomial, Rational> terms_;
};

SymbolicReal operator*(const Rational& c, const SymbolicReal& x);

enum class SpanRing { Z, Q };

/// Decides whether x lies in the span of the generators, over Z or over Q.
/// Exact: assembles the coefficient matrix over the union of occurring
/// monomials and solves via Smith normal form. A monomial of x that occurs
/// in no generator forces "false".
bool symbolic_in_span(const SymbolicReal& x, const std::vector<SymbolicReal>& generators,
                      SpanRing ring);

/// As symbolic_in_span over Z, but returns the integer coefficients of one
/// solution x = sum c_i * generators[i] when it exists.
std::optional<std::vector<Int>> symbolic_span_solve(const SymbolicReal& x,
                                                    const std::vector<SymbolicReal>& generators);

/// Parses expressions like "2*pi", "-1/2*pi^-1", "A", "3", "2*pi+1/3*A".
/// Terms are separated by top-level '+' or '-'.
SymbolicReal parse_symbolic(const std::string& text);

}  // namespace exactalg
