#pragma once

#include "exactalg/numeric.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace seifert {

using exactalg::Int;
using exactalg::Rational;

struct InvalidIsotropyError : std::domain_error {
  explicit InvalidIsotropyError(const std::string& what) : std::domain_error(what) {}
};
struct NotCoprimeError : std::domain_error {
  NotCoprimeError() : std::domain_error("velocities are not coprime") {}
};
struct InvalidVelocityError : std::domain_error {
  InvalidVelocityError() : std::domain_error("rotation number k must be positive") {}
};

/// Isotropy representation of a non-free orbit: a pair (n, a) with n > 1,
/// 0 < a < n and gcd(n, a) = 1. Plain data; validate() reports violations.
struct CoprimeResidueClass {
  Int n;
  Int a;

  bool operator==(const CoprimeResidueClass&) const = default;
  auto operator<=>(const CoprimeResidueClass&) const = default;

  bool valid() const { return n > 1 && a > 0 && a < n && exactalg::int_gcd(n, a) == 1; }
  std::string to_string() const { return "(" + n.str() + "," + a.str() + ")"; }
};

/// Unordered multiset of coprime residue classes; stored sorted so equality
/// and hashing are order-insensitive.
class IsotropyData {
 public:
  IsotropyData() = default;
  explicit IsotropyData(std::vector<CoprimeResidueClass> classes);

  const std::vector<CoprimeResidueClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  bool empty() const { return classes_.empty(); }

  bool operator==(const IsotropyData&) const = default;
  auto operator<=>(const IsotropyData&) const = default;

  /// Sum of a_j / n_j over all classes, exact.
  Rational weight_sum() const;

  std::string to_string() const;

 private:
  std::vector<CoprimeResidueClass> classes_;
};

/// Seifert invariant {g; (1,b), (n_1,a_1), ..., (n_k,a_k)} of a level set.
struct SeifertInvariant {
  int genus = 0;
  Int b;
  IsotropyData exceptional;

  bool operator==(const SeifertInvariant&) const = default;
  std::string to_string() const;
};

/// Seifert Euler number e = -b - sum a_j/n_j.
Rational euler_number(const SeifertInvariant& s);

enum class IsotropyViolation { NonCoprime, OutOfRange, SumNotInteger };
std::string to_string(IsotropyViolation v);

/// ok (empty list) iff every class satisfies its invariants and the weight
/// sum is an integer.
std::vector<IsotropyViolation> validate_isotropy(const IsotropyData& d);

/// The level-set invariant with b = -sum a_j/n_j, which has Euler number 0.
/// Throws InvalidIsotropyError when validate_isotropy(d) fails.
SeifertInvariant zero_euler_seifert(int genus, const IsotropyData& d);

/// Isotropy data of the diagonal action rotating the torus k times and the
/// sphere l times: empty when k = 1, otherwise {(k, m), (k, k-m)} with
/// m = l mod k. Requires k > 0 and gcd(k, l) = 1.
IsotropyData diagonal_isotropy(const Int& k, const Int& l);

}  // namespace seifert
