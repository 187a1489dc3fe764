#include "exactalg/symbolic.hpp"

#include "exactalg/smith.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace exactalg {

Monomial Monomial::symbol(const std::string& name, int exponent) {
  if (name.empty()) throw std::invalid_argument("Monomial: empty symbol name");
  Monomial m;
  if (exponent != 0) m.factors_[name] = exponent;
  return m;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out = *this;
  for (const auto& [name, exp] : rhs.factors_) {
    int& e = out.factors_[name];
    e += exp;
    if (e == 0) out.factors_.erase(name);
  }
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out;
  for (const auto& [name, exp] : factors_) out.factors_[name] = -exp;
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, exp] : factors_) {
    if (!first) os << "*";
    os << name;
    if (exp != 1) os << "^" << exp;
    first = false;
  }
  return os.str();
}

namespace {

bool valid_symbol_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::pair<std::string, int> parse_factor(const std::string& text) {
  auto caret = text.find('^');
  std::string name = caret == std::string::npos ? text : text.substr(0, caret);
  if (!valid_symbol_name(name)) throw std::invalid_argument("malformed monomial factor: " + text);
  int exp = 1;
  if (caret != std::string::npos) {
    Int e = parse_int(text.substr(caret + 1));
    exp = static_cast<int>(e);
  }
  return {name, exp};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

Monomial Monomial::parse(const std::string& text) {
  if (text == "1") return Monomial::one();
  Monomial m;
  for (const std::string& part : split(text, '*')) {
    auto [name, exp] = parse_factor(part);
    m = m * Monomial::symbol(name, exp);
  }
  return m;
}

SymbolicReal::SymbolicReal(const Rational& r) {
  if (r != 0) terms_[Monomial::one()] = r;
}

SymbolicReal SymbolicReal::symbol(const std::string& name) {
  return term(Rational(1), Monomial::symbol(name));
}

SymbolicReal SymbolicReal::term(const Rational& coefficient, const Monomial& m) {
  SymbolicReal out;
  if (coefficient != 0) out.terms_[m] = coefficient;
  return out;
}

bool SymbolicReal::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.is_one();
}

Rational SymbolicReal::rational_part() const { return coefficient(Monomial::one()); }

Rational SymbolicReal::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

SymbolicReal SymbolicReal::operator+(const SymbolicReal& rhs) const {
  SymbolicReal out = *this;
  for (const auto& [m, c] : rhs.terms_) {
    Rational& coeff = out.terms_[m];
    coeff += c;
    if (coeff == 0) out.terms_.erase(m);
  }
  return out;
}

SymbolicReal SymbolicReal::operator-(const SymbolicReal& rhs) const { return *this + (-rhs); }

SymbolicReal SymbolicReal::operator-() const {
  SymbolicReal out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

SymbolicReal SymbolicReal::operator*(const SymbolicReal& rhs) const {
  SymbolicReal out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m = ma * mb;
      Rational& coeff = out.terms_[m];
      coeff += ca * cb;
      if (coeff == 0) out.terms_.erase(m);
    }
  return out;
}

SymbolicReal SymbolicReal::scaled(const Rational& c) const {
  SymbolicReal out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_[m] = coeff * c;
  return out;
}

SymbolicReal operator*(const Rational& c, const SymbolicReal& x) { return x.scaled(c); }

SymbolicReal SymbolicReal::divided_by_term(const SymbolicReal& divisor) const {
  if (!divisor.is_single_term())
    throw std::domain_error("divided_by_term: divisor must be a single nonzero term");
  const auto& [dm, dc] = *divisor.terms_.begin();
  Monomial dm_inv = dm.inverse();
  SymbolicReal out;
  for (const auto& [m, c] : terms_) out.terms_[m * dm_inv] = c / dc;
  return out;
}

SymbolicReal::Sign SymbolicReal::sign() const {
  if (terms_.empty()) return Sign::Zero;
  bool pos = false, neg = false;
  for (const auto& [m, c] : terms_) (c > 0 ? pos : neg) = true;
  if (pos && neg) return Sign::Mixed;
  return pos ? Sign::Positive : Sign::Negative;
}

std::string SymbolicReal::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    Rational a = first ? c : abs(c);
    if (m.is_one())
      os << rational_to_string(a);
    else if (a == 1)
      os << m.to_string();
    else if (a == -1)
      os << "-" << m.to_string();
    else
      os << rational_to_string(a) << "*" << m.to_string();
    first = false;
  }
  return os.str();
}

namespace {

// Assembles the integer coefficient matrix of the generators over the union
// of their monomials, denominators cleared per monomial row. Returns false
// when x carries a monomial no generator has, which already settles the
// membership question.
bool span_system(const SymbolicReal& x, const std::vector<SymbolicReal>& generators,
                 IntMatrix& a, std::vector<Int>& b) {
  std::set<Monomial> monomials;
  for (const auto& g : generators)
    for (const auto& [m, c] : g.terms()) monomials.insert(m);
  for (const auto& [m, c] : x.terms())
    if (!monomials.contains(m)) return false;

  std::size_t rows = monomials.size(), cols = generators.size();
  a = IntMatrix(rows, cols);
  b.assign(rows, Int(0));
  std::size_t i = 0;
  for (const Monomial& m : monomials) {
    Int row_lcm = 1;
    for (const auto& g : generators) row_lcm = lcm(row_lcm, denominator(g.coefficient(m)));
    row_lcm = lcm(row_lcm, denominator(x.coefficient(m)));
    for (std::size_t j = 0; j < cols; ++j) {
      Rational scaled = generators[j].coefficient(m) * row_lcm;
      a.at(i, j) = numerator(scaled);
    }
    b[i] = numerator(x.coefficient(m) * row_lcm);
    ++i;
  }
  return true;
}

}  // namespace

bool symbolic_in_span(const SymbolicReal& x, const std::vector<SymbolicReal>& generators,
                      SpanRing ring) {
  if (x.is_zero()) return true;
  IntMatrix a;
  std::vector<Int> b;
  if (!span_system(x, generators, a, b)) return false;
  if (ring == SpanRing::Q) return solvable_rational(a, b);
  return solve_integer(a, b).has_value();
}

std::optional<std::vector<Int>> symbolic_span_solve(const SymbolicReal& x,
                                                    const std::vector<SymbolicReal>& generators) {
  IntMatrix a;
  std::vector<Int> b;
  if (x.is_zero()) return std::vector<Int>(generators.size(), Int(0));
  if (!span_system(x, generators, a, b)) return std::nullopt;
  return solve_integer(a, b);
}

SymbolicReal parse_symbolic(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty()) throw std::invalid_argument("empty symbolic expression");

  SymbolicReal out;
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-') {
    negative = true;
    pos = 1;
  } else if (text[0] == '+') {
    pos = 1;
  }
  while (pos < text.size()) {
    std::size_t end = pos;
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    std::string term_text = text.substr(pos, end - pos);
    if (term_text.empty()) throw std::invalid_argument("malformed symbolic expression: " + raw);

    Rational coeff(1);
    Monomial mono = Monomial::one();
    auto parts = split(term_text, '*');
    std::size_t first_factor = 0;
    if (std::isdigit(static_cast<unsigned char>(parts[0][0]))) {
      coeff = parse_rational(parts[0]);
      first_factor = 1;
    }
    for (std::size_t k = first_factor; k < parts.size(); ++k) {
      auto [name, exp] = parse_factor(parts[k]);
      mono = mono * Monomial::symbol(name, exp);
    }
    if (negative) coeff = -coeff;
    out = out + SymbolicReal::term(coeff, mono);

    if (end == text.size()) break;
    negative = text[end] == '-';
    pos = end + 1;
  }
  return out;
}

}  // namespace exactalg
