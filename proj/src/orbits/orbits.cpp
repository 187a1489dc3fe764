#include "orbits/orbits.hpp"

#include "exactalg/sl2z.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace orbits {

using exactalg::Monomial;
using exactalg::Rational;

std::string FibrationClass::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i].str();
  os << ")";
  return os.str();
}

std::string DeRhamClass::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i].to_string();
  os << ")";
  return os.str();
}

IntMatrix OrbitContext::induced_h1() const {
  return monodromy::induced_h1(monodromy, surface());
}

exactalg::AbelianGroupStructure OrbitContext::quotient_structure() const {
  IntMatrix f1 = induced_h1();
  return exactalg::cokernel_structure(f1 - IntMatrix::identity(f1.rows()));
}

std::size_t OrbitContext::coordinate_length() const {
  auto q = quotient_structure();
  return q.free_rank + q.torsion.size();
}

namespace {

enum class CtxKind { TrivialQuotient, Genus1FreeIdentity, Genus1FreeKodaira, Other };

const IntMatrix kKodairaMonodromy = IntMatrix::of({{1, 1}, {0, 1}});

CtxKind classify(const OrbitContext& ctx) {
  if (ctx.quotient_structure().is_trivial()) return CtxKind::TrivialQuotient;
  if (ctx.genus == 1 && ctx.isotropy.empty()) {
    IntMatrix f1 = ctx.induced_h1();
    if (f1.is_identity()) return CtxKind::Genus1FreeIdentity;
    if (f1 == kKodairaMonodromy) return CtxKind::Genus1FreeKodaira;
  }
  return CtxKind::Other;
}

void check_fibration_class(const FibrationClass& c, const OrbitContext& ctx) {
  auto q = ctx.quotient_structure();
  if (c.coords.size() != q.free_rank + q.torsion.size())
    throw ContextMismatchError("fibration class length does not match the quotient group");
  for (std::size_t i = 0; i < q.torsion.size(); ++i) {
    const Int& v = c.coords[q.free_rank + i];
    if (v < 0 || v >= q.torsion[i])
      throw ContextMismatchError("torsion coordinate out of range [0, d_i)");
  }
}

}  // namespace

CanonicalFibration fibration_orbit_canonical(const FibrationClass& c, const OrbitContext& ctx) {
  check_fibration_class(c, ctx);
  switch (classify(ctx)) {
    case CtxKind::TrivialQuotient:
      return CanonicalFibration{FibrationClass{std::vector<Int>(c.coords.size(), Int(0))}, ""};
    case CtxKind::Genus1FreeIdentity: {
      Int g = exactalg::int_gcd(abs(c.coords[0]), abs(c.coords[1]));
      return CanonicalFibration{FibrationClass{{g, Int(0)}}, ""};
    }
    case CtxKind::Genus1FreeKodaira:
      return CanonicalFibration{FibrationClass{{abs(c.coords[0])}}, ""};
    case CtxKind::Other:
      break;
  }
  return CanonicalFibration{std::nullopt,
                            "orbit description is only computed for trivial quotients and for "
                            "genus-1 free actions with identity or [[1,1],[0,1]] monodromy"};
}

std::pair<SymbolicReal, SymbolicReal> derham_action(const SymbolicReal& s, const SymbolicReal& t,
                                                    const DerhamActionParams& p,
                                                    const SymbolicReal& c_dh,
                                                    const SymbolicReal& tau) {
  if (p.a * p.d - p.b * p.c != 1)
    throw exactalg::NotUnimodularError("derham_action: ad - bc != 1");
  auto r = [](const Int& n) { return Rational(n); };
  SymbolicReal sp = r(p.a) * s + r(p.c) * t + r(p.e * p.c - p.a * p.f) * c_dh + r(p.y) * tau;
  SymbolicReal tp = r(p.b) * s + r(p.d) * t + r(p.e * p.d - p.b * p.f) * c_dh + r(p.z) * tau;
  return {sp, tp};
}

DerhamActionParams compose(const DerhamActionParams& first, const DerhamActionParams& second) {
  // In row-vector form the action is v -> (v + c_dh*w)M + tau*u with
  // w = (-f, e), u = (y, z); composition: M = M1*M2, w = w1 + w2*M1^-1,
  // u = u1*M2 + u2.
  IntMatrix m1(2, 2, {first.a, first.b, first.c, first.d});
  IntMatrix m2(2, 2, {second.a, second.b, second.c, second.d});
  IntMatrix m = m1 * m2;
  std::vector<Int> w1{-first.f, first.e}, w2{-second.f, second.e};
  std::vector<Int> u1{first.y, first.z}, u2{second.y, second.z};
  std::vector<Int> w = exactalg::apply_row(w2, m1.unimodular_inverse());
  w[0] += w1[0];
  w[1] += w1[1];
  std::vector<Int> u = exactalg::apply_row(u1, m2);
  u[0] += u2[0];
  u[1] += u2[1];
  DerhamActionParams out;
  out.a = m.at(0, 0);
  out.b = m.at(0, 1);
  out.c = m.at(1, 0);
  out.d = m.at(1, 1);
  out.f = -w[0];
  out.e = w[1];
  out.y = u[0];
  out.z = u[1];
  return out;
}

namespace {

struct RationalPair {
  Rational first, second;
  bool operator==(const RationalPair&) const = default;
};

RationalPair coefficient_row(const DeRhamClass& x, const Monomial& m) {
  return {x.coords[0].coefficient(m), x.coords[1].coefficient(m)};
}

// gcd-content of a rational pair, nonnegative; 0 only for the zero pair
Rational pair_content(const RationalPair& p) {
  if (p.first == 0 && p.second == 0) return Rational(0);
  Int l = lcm(denominator(p.first), denominator(p.second));
  Int a = numerator(p.first * l), b = numerator(p.second * l);
  return Rational(exactalg::int_gcd(abs(a), abs(b)), l);
}

Rational pair_minor(const RationalPair& r1, const RationalPair& r2) {
  return r1.first * r2.second - r1.second * r2.first;
}

// right action of an integer matrix on a rational row
RationalPair row_times(const RationalPair& v, const IntMatrix& m) {
  return {v.first * Rational(m.at(0, 0)) + v.second * Rational(m.at(1, 0)),
          v.first * Rational(m.at(0, 1)) + v.second * Rational(m.at(1, 1))};
}

std::set<Monomial> monomials_of(const SymbolicReal& x) {
  std::set<Monomial> out;
  for (const auto& [m, c] : x.terms()) out.insert(m);
  return out;
}

struct DerhamProblem {
  DeRhamClass x, xp;
  SymbolicReal c_dh, tau;
  std::set<Monomial> shift_monomials;   // monomials of c_dh and tau
  std::vector<Monomial> exact_monomials;  // everything else occurring in x, xp

  DerhamProblem(const DeRhamClass& x_, const DeRhamClass& xp_, const SymbolicReal& c_dh_,
                const SymbolicReal& tau_)
      : x(x_), xp(xp_), c_dh(c_dh_), tau(tau_) {
    for (const auto& m : monomials_of(c_dh)) shift_monomials.insert(m);
    for (const auto& m : monomials_of(tau)) shift_monomials.insert(m);
    std::set<Monomial> occurring;
    for (const auto& coord : {x.coords[0], x.coords[1], xp.coords[0], xp.coords[1]})
      for (const auto& m : monomials_of(coord)) occurring.insert(m);
    for (const auto& m : occurring)
      if (!shift_monomials.contains(m)) exact_monomials.push_back(m);
  }

  // residual xp - x*M must equal c_dh*(w*M) + tau*u for integer w, u;
  // solves both coordinates and reconstructs the full parameter set
  std::optional<DerhamActionParams> residual_params(const IntMatrix& m) const {
    SymbolicReal xm0 = Rational(m.at(0, 0)) * x.coords[0] + Rational(m.at(1, 0)) * x.coords[1];
    SymbolicReal xm1 = Rational(m.at(0, 1)) * x.coords[0] + Rational(m.at(1, 1)) * x.coords[1];
    std::vector<SymbolicReal> gens{c_dh, tau};
    auto s0 = exactalg::symbolic_span_solve(xp.coords[0] - xm0, gens);
    if (!s0) return std::nullopt;
    auto s1 = exactalg::symbolic_span_solve(xp.coords[1] - xm1, gens);
    if (!s1) return std::nullopt;
    // (*s0)[0], (*s1)[0] are the components of w*M; undo the right action
    std::vector<Int> wm{(*s0)[0], (*s1)[0]};
    std::vector<Int> w = exactalg::apply_row(wm, m.unimodular_inverse());
    DerhamActionParams p;
    p.a = m.at(0, 0);
    p.b = m.at(0, 1);
    p.c = m.at(1, 0);
    p.d = m.at(1, 1);
    p.f = -w[0];
    p.e = w[1];
    p.y = (*s0)[1];
    p.z = (*s1)[1];
    return p;
  }

  bool verify(const DerhamActionParams& p) const {
    auto [sp, tp] = derham_action(x.coords[0], x.coords[1], p, c_dh, tau);
    return sp == xp.coords[0] && tp == xp.coords[1];
  }
};

// Tier 1: the Z-module generated by {1, s, t, c_dh, tau} is preserved by
// every action; mutual membership failure separates the orbits.
std::optional<std::string> module_mismatch(const DerhamProblem& pr) {
  std::vector<SymbolicReal> gx{SymbolicReal(Rational(1)), pr.x.coords[0], pr.x.coords[1], pr.c_dh,
                               pr.tau};
  std::vector<SymbolicReal> gxp{SymbolicReal(Rational(1)), pr.xp.coords[0], pr.xp.coords[1],
                                pr.c_dh, pr.tau};
  for (int i = 0; i < 2; ++i) {
    if (!exactalg::symbolic_in_span(pr.x.coords[i], gxp, exactalg::SpanRing::Z))
      return "Z-modules spanned by {1, s, t, c_dh, tau} differ (coordinate " +
             std::to_string(i + 1) + " of the first class escapes the second module)";
    if (!exactalg::symbolic_in_span(pr.xp.coords[i], gx, exactalg::SpanRing::Z))
      return "Z-modules spanned by {1, s, t, c_dh, tau} differ (coordinate " +
             std::to_string(i + 1) + " of the second class escapes the first module)";
  }
  return std::nullopt;
}

// Tier 2: coefficient rows over monomials absent from c_dh and tau transform
// exactly by the SL2(Z) matrix, so their contents and pairwise minors are
// orbit invariants.
std::optional<std::string> exact_row_mismatch(const DerhamProblem& pr) {
  for (std::size_t i = 0; i < pr.exact_monomials.size(); ++i) {
    const Monomial& mi = pr.exact_monomials[i];
    RationalPair ri = coefficient_row(pr.x, mi);
    RationalPair rpi = coefficient_row(pr.xp, mi);
    if (pair_content(ri) != pair_content(rpi))
      return "contents of the coefficient rows at monomial " + mi.to_string() + " differ";
    for (std::size_t j = i + 1; j < pr.exact_monomials.size(); ++j) {
      const Monomial& mj = pr.exact_monomials[j];
      if (pair_minor(ri, coefficient_row(pr.x, mj)) !=
          pair_minor(rpi, coefficient_row(pr.xp, mj)))
        return "minor of the coefficient rows at monomials " + mi.to_string() + ", " +
               mj.to_string() + " differs";
    }
  }
  return std::nullopt;
}

// Tier 3: when the exact rows have rank 2 over Q they pin the matrix of any
// connecting action; the verdict is then definite either way.
std::optional<Verdict> pinned_matrix_verdict(const DerhamProblem& pr) {
  // pick two Q-independent exact rows of x
  std::optional<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t i = 0; i < pr.exact_monomials.size() && !basis; ++i)
    for (std::size_t j = i + 1; j < pr.exact_monomials.size() && !basis; ++j) {
      RationalPair ri = coefficient_row(pr.x, pr.exact_monomials[i]);
      RationalPair rj = coefficient_row(pr.x, pr.exact_monomials[j]);
      if (pair_minor(ri, rj) != 0) basis = {i, j};
    }
  if (!basis) return std::nullopt;

  RationalPair r1 = coefficient_row(pr.x, pr.exact_monomials[basis->first]);
  RationalPair r2 = coefficient_row(pr.x, pr.exact_monomials[basis->second]);
  RationalPair t1 = coefficient_row(pr.xp, pr.exact_monomials[basis->first]);
  RationalPair t2 = coefficient_row(pr.xp, pr.exact_monomials[basis->second]);
  // solve [r1; r2] * M = [t1; t2] over Q
  Rational det = pair_minor(r1, r2);
  Rational m00 = (r2.second * t1.first - r1.second * t2.first) / det;
  Rational m10 = (r1.first * t2.first - r2.first * t1.first) / det;
  Rational m01 = (r2.second * t1.second - r1.second * t2.second) / det;
  Rational m11 = (r1.first * t2.second - r2.first * t1.second) / det;
  for (const Rational& v : {m00, m01, m10, m11})
    if (denominator(v) != 1)
      return Verdict::distinct("the symbol rows pin a non-integer matrix");
  IntMatrix m(2, 2, {numerator(m00), numerator(m01), numerator(m10), numerator(m11)});
  if (m.det() != 1)
    return Verdict::distinct("the symbol rows pin a matrix of determinant " + m.det().str());
  // remaining exact rows must agree with the pinned matrix
  for (const Monomial& mono : pr.exact_monomials) {
    if (row_times(coefficient_row(pr.x, mono), m) != coefficient_row(pr.xp, mono))
      return Verdict::distinct("the pinned matrix fails at monomial " + mono.to_string());
  }
  auto params = pr.residual_params(m);
  if (!params || !pr.verify(*params))
    return Verdict::distinct(
        "the pinned matrix leaves a residual outside the shift lattice c_dh*Z + tau*Z");
  return Verdict::equivalent();
}

// Tier 4: purely rational classes with shift generators free of rational
// terms reduce to the gcd orbit law for row vectors under SL2(Z).
std::optional<Verdict> rational_verdict(const DerhamProblem& pr) {
  for (const auto& coord : {pr.x.coords[0], pr.x.coords[1], pr.xp.coords[0], pr.xp.coords[1]})
    if (!coord.is_rational()) return std::nullopt;
  if (pr.c_dh.rational_part() != 0 || pr.tau.rational_part() != 0) return std::nullopt;

  RationalPair vx{pr.x.coords[0].rational_part(), pr.x.coords[1].rational_part()};
  RationalPair vxp{pr.xp.coords[0].rational_part(), pr.xp.coords[1].rational_part()};
  Rational cx = pair_content(vx), cxp = pair_content(vxp);
  if (cx != cxp)
    return Verdict::distinct("rational contents differ: " + exactalg::rational_to_string(cx) +
                             " vs " + exactalg::rational_to_string(cxp));
  if (cx == 0) return Verdict::equivalent();  // both zero classes

  // primitive integer directions and a matrix taking one to the other
  auto primitive = [](const RationalPair& v, const Rational& content) {
    return std::pair<Int, Int>{numerator(v.first / content), numerator(v.second / content)};
  };
  auto basis_from = [](const std::pair<Int, Int>& xi) {
    // matrix with first row xi and det 1
    Int s, t;
    exactalg::ext_gcd(xi.first, xi.second, s, t);
    return IntMatrix(2, 2, {xi.first, xi.second, -t, s});
  };
  auto bx = basis_from(primitive(vx, cx));
  auto bxp = basis_from(primitive(vxp, cxp));
  IntMatrix m = bx.unimodular_inverse() * bxp;
  auto params = pr.residual_params(m);
  if (params && pr.verify(*params)) return Verdict::equivalent();
  return std::nullopt;  // fall through to the search
}

// deterministic enumeration of SL2(Z) words over {R, R^-1, L, L^-1}
struct WordEnumerator {
  int max_length;
  std::vector<IntMatrix> letters;

  explicit WordEnumerator(int max_length_)
      : max_length(max_length_),
        letters{IntMatrix::of({{1, 1}, {0, 1}}), IntMatrix::of({{1, -1}, {0, 1}}),
                IntMatrix::of({{1, 0}, {1, 1}}), IntMatrix::of({{1, 0}, {-1, 1}})} {}

  static bool cancels(int prev, int next) {
    return (prev ^ 1) == next;  // R cancels R^-1, L cancels L^-1
  }

  // visit(matrix) -> true to stop; words come in length order, letters in a
  // fixed order, so the first hit is deterministic
  template <typename Visitor>
  bool enumerate(Visitor&& visit) const {
    for (int len = 0; len <= max_length; ++len)
      if (descend(len, -1, IntMatrix::identity(2), visit)) return true;
    return false;
  }

 private:
  template <typename Visitor>
  bool descend(int remaining, int prev, const IntMatrix& acc, Visitor&& visit) const {
    if (remaining == 0) {
      if (visit(acc)) return true;
      return visit(-acc);
    }
    for (int l = 0; l < 4; ++l) {
      if (prev >= 0 && cancels(prev, l)) continue;
      if (descend(remaining - 1, l, acc * letters[l], visit)) return true;
    }
    return false;
  }
};

std::optional<DerhamActionParams> bounded_search(const DerhamProblem& pr,
                                                 const SearchBudget& budget) {
  std::optional<DerhamActionParams> found;
  WordEnumerator words(budget.word_length);
  words.enumerate([&](const IntMatrix& m) {
    // quick filter: exact rows must transform correctly
    for (const Monomial& mono : pr.exact_monomials)
      if (row_times(coefficient_row(pr.x, mono), m) != coefficient_row(pr.xp, mono)) return false;
    auto params = pr.residual_params(m);
    if (params && pr.verify(*params)) {
      found = params;
      return true;
    }
    return false;
  });
  return found;
}

void check_derham_class(const DeRhamClass& c, const OrbitContext& ctx) {
  if (c.coords.size() != ctx.coordinate_length())
    throw ContextMismatchError("de Rham class length does not match the quotient group");
}

}  // namespace

std::optional<DerhamActionParams> derham_connecting_action(const DeRhamClass& x,
                                                           const DeRhamClass& xp,
                                                           const SymbolicReal& c_dh,
                                                           const SymbolicReal& tau,
                                                           const OrbitContext& ctx,
                                                           const SearchBudget& budget) {
  check_derham_class(x, ctx);
  check_derham_class(xp, ctx);
  if (classify(ctx) != CtxKind::Genus1FreeIdentity) return std::nullopt;
  DerhamProblem pr(x, xp, c_dh, tau);
  return bounded_search(pr, budget);
}

Verdict derham_orbit_verdict(const DeRhamClass& x, const DeRhamClass& xp,
                             const SymbolicReal& c_dh, const SymbolicReal& tau,
                             const OrbitContext& ctx, const SearchBudget& budget) {
  check_derham_class(x, ctx);
  check_derham_class(xp, ctx);

  if (x == xp) return Verdict::equivalent();  // identity action

  switch (classify(ctx)) {
    case CtxKind::TrivialQuotient:
      return Verdict::equivalent();  // zero-length classes are always equal
    case CtxKind::Genus1FreeIdentity:
      break;
    case CtxKind::Genus1FreeKodaira:
    case CtxKind::Other:
      return Verdict::undecided(
          "de Rham orbits are only computed for the genus-1 free identity-monodromy context and "
          "for trivial quotients");
  }

  DerhamProblem pr(x, xp, c_dh, tau);
  if (auto mismatch = module_mismatch(pr)) return Verdict::distinct(*mismatch);
  if (auto mismatch = exact_row_mismatch(pr)) return Verdict::distinct(*mismatch);
  if (auto verdict = pinned_matrix_verdict(pr)) return *verdict;
  if (auto verdict = rational_verdict(pr)) return *verdict;
  if (bounded_search(pr, budget)) return Verdict::equivalent();
  return Verdict::undecided("bounded search exhausted (word length <= " +
                            std::to_string(budget.word_length) + "); no separating invariant");
}

}  // namespace orbits
