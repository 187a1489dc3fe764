#include "exactalg/sl2z.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace exactalg {

namespace {

const IntMatrix kS = IntMatrix::of({{0, -1}, {1, 0}});
const IntMatrix kR = IntMatrix::of({{1, 1}, {0, 1}});
const IntMatrix kL = IntMatrix::of({{1, 0}, {1, 1}});
// U = S*T has order 3 in PSL2(Z); the group is the free product <S> * <U>.
const IntMatrix kU = IntMatrix::of({{0, -1}, {1, 1}});

IntMatrix elliptic_representative(const Int& trace, int c_sign) {
  if (trace == 0)
    return c_sign > 0 ? IntMatrix::of({{0, -1}, {1, 0}}) : IntMatrix::of({{0, 1}, {-1, 0}});
  if (trace == 1)
    return c_sign > 0 ? IntMatrix::of({{1, -1}, {1, 0}}) : IntMatrix::of({{0, 1}, {-1, 1}});
  // trace == -1
  return c_sign > 0 ? IntMatrix::of({{0, -1}, {1, -1}}) : IntMatrix::of({{-1, 1}, {-1, 0}});
}

SL2Parabolic parabolic_form(const IntMatrix& m, const Int& trace) {
  int sign = trace == 2 ? 1 : -1;
  IntMatrix p = sign == 1 ? m : -m;
  IntMatrix n = p - IntMatrix::identity(2);
  // n is rank one and nilpotent; u spans its kernel
  Int u1, u2;
  if (n.at(0, 0) != 0 || n.at(0, 1) != 0) {
    u1 = n.at(0, 1);
    u2 = -n.at(0, 0);
  } else {
    u1 = n.at(1, 1);
    u2 = -n.at(1, 0);
  }
  Int x, y;
  Int g = ext_gcd(u1, u2, x, y);
  u1 /= g;
  u2 /= g;
  ext_gcd(u1, u2, x, y);  // now the gcd is 1
  // columns (u, v) with det 1; in this basis p is an upper unitriangular shear
  IntMatrix basis(2, 2, {u1, -y, u2, x});
  IntMatrix conj = basis.unimodular_inverse() * p * basis;
  if (conj.at(0, 0) != 1 || conj.at(1, 0) != 0 || conj.at(1, 1) != 1)
    throw std::logic_error("parabolic_form: shear normalization failed");
  return SL2Parabolic{sign, conj.at(0, 1)};
}

// one syllable of a reduced word in <S | S^2> * <U | U^3>
struct Syllable {
  char type;  // 'S' or 'U'
  int exp;    // 1 for S; 1 or 2 for U
};

void push_syllable(std::vector<Syllable>& word, char type, long long exp) {
  int mod = type == 'S' ? 2 : 3;
  int e = static_cast<int>(((exp % mod) + mod) % mod);
  if (e == 0) return;
  if (!word.empty() && word.back().type == type) {
    e = (word.back().exp + e) % mod;
    word.pop_back();
    if (e == 0) return;
  }
  word.push_back(Syllable{type, e});
}

IntMatrix syllable_matrix(const Syllable& s) {
  if (s.type == 'S') return kS;
  return s.exp == 1 ? kU : kU * kU;
}

IntMatrix word_product(const std::vector<Syllable>& word) {
  IntMatrix p = IntMatrix::identity(2);
  for (const auto& s : word) p = p * syllable_matrix(s);
  return p;
}

// Writes m as a word in S and T via the Euclidean algorithm on the first
// column, then reduces in the free product (PSL2 level, signs dropped).
std::vector<Syllable> psl2_reduced_word(const IntMatrix& m) {
  std::vector<Syllable> word;
  auto push_t_power = [&word](const Int& q) {
    // T = SU and T^-1 = U^2 S in PSL2
    if (q >= 0) {
      for (Int i = 0; i < q; ++i) {
        push_syllable(word, 'S', 1);
        push_syllable(word, 'U', 1);
      }
    } else {
      for (Int i = 0; i < -q; ++i) {
        push_syllable(word, 'U', 2);
        push_syllable(word, 'S', 1);
      }
    }
  };

  IntMatrix cur = m;
  while (cur.at(1, 0) != 0) {
    Int a = cur.at(0, 0), c = cur.at(1, 0);
    Int q = a / c;
    Int r = a - q * c;
    if (r < 0) {  // floor division
      if (c > 0) {
        q -= 1;
      } else {
        q += 1;
      }
    }
    // cur = T^q * S * next  =>  next = S^-1 * T^-q * cur
    IntMatrix tmq = IntMatrix(2, 2, {Int(1), -q, Int(0), Int(1)});
    cur = kS.unimodular_inverse() * (tmq * cur);
    push_t_power(q);
    push_syllable(word, 'S', 1);
  }
  // cur = eps * T^x with eps = +-1
  Int eps = cur.at(0, 0);
  push_t_power(eps * cur.at(0, 1));
  return word;
}

SL2Hyperbolic hyperbolic_form(const IntMatrix& m, const Int& trace) {
  std::vector<Syllable> word = psl2_reduced_word(m);
  {
    IntMatrix check = word_product(word);
    if (check != m && check != -m)
      throw std::logic_error("hyperbolic_form: word decomposition mismatch");
  }

  // cyclic reduction, conjugating away the first syllable while it matches
  // the last; the running conjugator keeps the final exactness check valid
  IntMatrix conjugator = IntMatrix::identity(2);
  auto rotate_front = [&word, &conjugator]() {
    Syllable front = word.front();
    word.erase(word.begin());
    push_syllable(word, front.type, front.exp);
    conjugator = conjugator * syllable_matrix(front);
  };
  while (word.size() >= 2 && word.front().type == word.back().type) rotate_front();
  // rotate so the word starts with S; alternating with distinct ends means
  // syllable types strictly alternate around the cycle
  if (!word.empty() && word.front().type == 'U') rotate_front();

  if (word.size() < 4 || word.size() % 2 != 0)
    throw std::logic_error("hyperbolic_form: unexpected cyclic word for |trace| > 2");
  {
    IntMatrix check = word_product(word);
    IntMatrix target = conjugator.unimodular_inverse() * m * conjugator;
    if (check != target && check != -target)
      throw std::logic_error("hyperbolic_form: cyclic reduction mismatch");
  }

  std::string letters;
  for (std::size_t i = 0; i < word.size(); i += 2) {
    if (word[i].type != 'S' || word[i + 1].type != 'U')
      throw std::logic_error("hyperbolic_form: word is not alternating");
    letters += word[i + 1].exp == 1 ? 'R' : 'L';  // R = SU, L = SU^2 in PSL2
  }
  if (letters.find('R') == std::string::npos || letters.find('L') == std::string::npos)
    throw std::logic_error("hyperbolic_form: single-letter word is parabolic, not hyperbolic");

  return SL2Hyperbolic{trace > 0 ? 1 : -1, least_rotation(letters)};
}

}  // namespace

std::string least_rotation(const std::string& word) {
  if (word.empty()) return word;
  std::string best = word;
  std::string rotated = word;
  for (std::size_t i = 1; i < word.size(); ++i) {
    rotated = rotated.substr(1) + rotated[0];
    if (rotated < best) best = rotated;
  }
  return best;
}

IntMatrix rl_word_matrix(const std::string& word) {
  IntMatrix p = IntMatrix::identity(2);
  for (char ch : word) {
    if (ch == 'R')
      p = p * kR;
    else if (ch == 'L')
      p = p * kL;
    else
      throw std::invalid_argument("rl_word_matrix: letters must be R or L");
  }
  return p;
}

SL2ZCanonicalForm sl2z_canonical_form(const IntMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2)
    throw std::invalid_argument("sl2z_canonical_form: matrix must be 2x2");
  if (m.det() != 1) throw NotUnimodularError("sl2z_canonical_form: det != 1");

  if (m.is_identity()) return SL2Elliptic{1, m};
  if ((-m).is_identity()) return SL2Elliptic{2, m};

  Int t = m.trace();
  Int abs_t = abs(t);
  if (abs_t < 2) {
    // c = 0 would force integer eigenvalues, impossible below trace 2
    int c_sign = m.at(1, 0) > 0 ? 1 : -1;
    int order = t == 0 ? 4 : (t == 1 ? 6 : 3);
    return SL2Elliptic{order, elliptic_representative(t, c_sign)};
  }
  if (abs_t == 2) return parabolic_form(m, t);
  return hyperbolic_form(m, t);
}

bool operator==(const SL2ZCanonicalForm& a, const SL2ZCanonicalForm& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<SL2Elliptic>(a))
    return std::get<SL2Elliptic>(a) == std::get<SL2Elliptic>(b);
  if (std::holds_alternative<SL2Parabolic>(a))
    return std::get<SL2Parabolic>(a) == std::get<SL2Parabolic>(b);
  return std::get<SL2Hyperbolic>(a) == std::get<SL2Hyperbolic>(b);
}

std::string to_string(const SL2ZCanonicalForm& form) {
  std::ostringstream os;
  if (const auto* e = std::get_if<SL2Elliptic>(&form)) {
    os << "elliptic(order " << e->order << ", rep " << e->canonical.to_string() << ")";
  } else if (const auto* p = std::get_if<SL2Parabolic>(&form)) {
    os << "parabolic(sign " << (p->sign > 0 ? "+1" : "-1") << ", shear " << p->shear.str() << ")";
  } else {
    const auto& h = std::get<SL2Hyperbolic>(form);
    os << "hyperbolic(sign " << (h.sign > 0 ? "+1" : "-1") << ", word " << h.word << ")";
  }
  return os.str();
}

}  // namespace exactalg
