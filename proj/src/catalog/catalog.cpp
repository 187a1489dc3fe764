#include "catalog/catalog.hpp"

#include "seifert/seifert.hpp"

namespace catalog {

using exactalg::Monomial;
using exactalg::Rational;

namespace {

const Monomial kPi = Monomial::symbol("pi");
const SymbolicReal kTwoPi = SymbolicReal::term(Rational(2), kPi);

DiagonalParams normalized(DiagonalParams p) {
  // (p,q,h,theta) -> (-p,-q,h,theta) and (p,q,-h,-theta) flip the velocity
  // signs equivariantly, so signs can be fixed without loss
  if (p.k < 0) p.k = -p.k;
  if (p.l < 0) p.l = -p.l;
  return p;
}

SymbolicReal period_generator(const SymbolicReal& area, const Int& rotations) {
  // area * rotations / (2 pi)
  return area.scaled(Rational(rotations, 2)) * SymbolicReal::term(Rational(1), kPi.inverse());
}

}  // namespace

SpacePresentation torus_times_sphere(const DiagonalParams& raw) {
  DiagonalParams p = normalized(raw);
  if (p.k == 0) throw HamiltonianActionError();
  SymbolicReal tau = period_generator(p.area_a, p.k);
  SymbolicReal c_dh = p.area_b.scaled(Rational(2, p.k)) * SymbolicReal::term(Rational(1), kPi);
  return spaces::model_space(tau, c_dh, 0, seifert::diagonal_isotropy(p.k, p.l),
                             monodromy::IdentityClass{}, orbits::FibrationClass{},
                             orbits::DeRhamClass{});
}

bool torus_sphere_equivalent(const DiagonalParams& rp, const DiagonalParams& rq) {
  DiagonalParams p = normalized(rp), q = normalized(rq);
  if (p.k == 0 || q.k == 0) throw HamiltonianActionError();
  if (p.k != q.k) return false;
  if (!(p.area_a == q.area_a) || !(p.area_b == q.area_b)) return false;
  Int lp = p.l % p.k;
  Int lq = q.l % p.k;
  return lp == lq || (lp + lq) % p.k == 0;
}

SpacePresentation torus_times_torus(const DiagonalParams& raw, const SymbolicReal& tau) {
  DiagonalParams p = normalized(raw);
  if (p.k == 0 && p.l == 0) throw HamiltonianActionError();
  SymbolicReal g1 = period_generator(p.area_a, p.k);
  SymbolicReal g2 = period_generator(p.area_b, p.l);

  if (!tau.is_single_term())
    throw PeriodsNotDiscreteError("tau must be a single term for the period group " +
                                  g1.to_string() + " Z + " + g2.to_string() + " Z");
  using exactalg::SpanRing;
  bool generates = exactalg::symbolic_in_span(g1, {tau}, SpanRing::Z) &&
                   exactalg::symbolic_in_span(g2, {tau}, SpanRing::Z) &&
                   exactalg::symbolic_in_span(tau, {g1, g2}, SpanRing::Z);
  if (!generates)
    throw PeriodsNotDiscreteError("tau*Z != (" + g1.to_string() + ")Z + (" + g2.to_string() +
                                  ")Z for tau = " + tau.to_string());

  SymbolicReal c_dh = (p.area_a * p.area_b).divided_by_term(tau);
  return spaces::model_space(tau, c_dh, 1, seifert::IsotropyData{}, monodromy::IdentityClass{},
                             orbits::FibrationClass{{Int(0), Int(0)}},
                             orbits::DeRhamClass{{SymbolicReal{}, SymbolicReal{}}});
}

SpacePresentation kodaira_thurston() {
  SymbolicReal tau = SymbolicReal::term(Rational(1, 2), kPi.inverse());  // 1/(2 pi)
  return spaces::model_space(tau, kTwoPi, 1, seifert::IsotropyData{},
                             monodromy::TorusLinear{exactalg::IntMatrix::of({{1, 1}, {0, 1}})},
                             orbits::FibrationClass{{Int(0)}},
                             orbits::DeRhamClass{{SymbolicReal{}}});
}

SpacePresentation t4_family(const SymbolicReal& a, const SymbolicReal& b) {
  SymbolicReal tau = SymbolicReal::term(Rational(1, 2), kPi.inverse());
  return spaces::model_space(tau, kTwoPi, 1, seifert::IsotropyData{}, monodromy::IdentityClass{},
                             orbits::FibrationClass{{Int(0), Int(0)}},
                             orbits::DeRhamClass{{a, b}});
}

}  // namespace catalog
