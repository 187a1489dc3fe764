#include "seifert/seifert.hpp"

#include <algorithm>
#include <sstream>

namespace seifert {

IsotropyData::IsotropyData(std::vector<CoprimeResidueClass> classes)
    : classes_(std::move(classes)) {
  std::sort(classes_.begin(), classes_.end());
}

Rational IsotropyData::weight_sum() const {
  Rational sum(0);
  for (const auto& c : classes_) sum += Rational(c.a, c.n);
  return sum;
}

std::string IsotropyData::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < classes_.size(); ++i) os << (i ? "," : "") << classes_[i].to_string();
  os << "}";
  return os.str();
}

std::string SeifertInvariant::to_string() const {
  std::ostringstream os;
  os << "{" << genus << "; (1," << b.str() << ")";
  for (const auto& c : exceptional.classes()) os << ", " << c.to_string();
  os << "}";
  return os.str();
}

Rational euler_number(const SeifertInvariant& s) {
  return -Rational(s.b) - s.exceptional.weight_sum();
}

std::string to_string(IsotropyViolation v) {
  switch (v) {
    case IsotropyViolation::NonCoprime: return "NonCoprime";
    case IsotropyViolation::OutOfRange: return "OutOfRange";
    case IsotropyViolation::SumNotInteger: return "SumNotInteger";
  }
  return "?";
}

std::vector<IsotropyViolation> validate_isotropy(const IsotropyData& d) {
  std::vector<IsotropyViolation> violations;
  bool range_ok = true, coprime_ok = true;
  for (const auto& c : d.classes()) {
    if (!(c.n > 1 && c.a > 0 && c.a < c.n)) range_ok = false;
    if (exactalg::int_gcd(c.n, c.a) != 1) coprime_ok = false;
  }
  if (!range_ok) violations.push_back(IsotropyViolation::OutOfRange);
  if (!coprime_ok) violations.push_back(IsotropyViolation::NonCoprime);
  if (range_ok && coprime_ok && denominator(d.weight_sum()) != 1)
    violations.push_back(IsotropyViolation::SumNotInteger);
  return violations;
}

SeifertInvariant zero_euler_seifert(int genus, const IsotropyData& d) {
  auto violations = validate_isotropy(d);
  if (!violations.empty() || genus < 0) {
    std::string what = "zero_euler_seifert: ";
    if (genus < 0) what += "negative genus";
    for (auto v : violations) what += to_string(v) + " ";
    throw InvalidIsotropyError(what);
  }
  Rational sum = d.weight_sum();
  return SeifertInvariant{genus, -numerator(sum), d};
}

IsotropyData diagonal_isotropy(const Int& k, const Int& l) {
  if (k <= 0) throw InvalidVelocityError();
  if (l < 0) throw std::invalid_argument("diagonal_isotropy: l must be nonnegative");
  if (exactalg::int_gcd(k, l) != 1) throw NotCoprimeError();
  if (k == 1) return IsotropyData();
  Int m = l % k;  // 0 < m < k because gcd(k, l) = 1 and k > 1
  return IsotropyData({CoprimeResidueClass{k, m}, CoprimeResidueClass{k, k - m}});
}

}  // namespace seifert
