#include "spaces/spaces.hpp"

#include "exactalg/sl2z.hpp"

#include <sstream>

namespace spaces {

using exactalg::Int;
using exactalg::IntMatrix;

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::string out = "invalid presentation:";
  for (const auto& v : violations) out += " " + v.code + (v.detail.empty() ? "" : " (" + v.detail + ")") + ";";
  return out;
}

void check_positive(const SymbolicReal& value, const char* name, std::vector<Violation>& out) {
  switch (value.sign()) {
    case SymbolicReal::Sign::Positive:
      return;
    case SymbolicReal::Sign::Zero:
    case SymbolicReal::Sign::Negative:
      out.push_back({std::string("NonPositive") + name, value.to_string()});
      return;
    case SymbolicReal::Sign::Mixed:
      out.push_back({"PositivityUndecidable", std::string(name) + " = " + value.to_string()});
      return;
  }
}

bool fibration_is_zero(const orbits::FibrationClass& c) {
  for (const Int& v : c.coords)
    if (v != 0) return false;
  return true;
}

bool derham_is_zero(const orbits::DeRhamClass& c) {
  for (const auto& v : c.coords)
    if (!v.is_zero()) return false;
  return true;
}

}  // namespace

InvalidPresentationError::InvalidPresentationError(std::vector<Violation> v)
    : std::domain_error(join_violations(v)), violations(std::move(v)) {}

std::vector<Violation> validate(const SpacePresentation& p) {
  std::vector<Violation> out;

  check_positive(p.tau, "Tau", out);
  check_positive(p.c_dh, "Cdh", out);

  if (p.genus < 0) out.push_back({"NegativeGenus", std::to_string(p.genus)});

  for (auto violation : seifert::validate_isotropy(p.isotropy))
    out.push_back({seifert::to_string(violation), p.isotropy.to_string()});

  auto rep_issues = monodromy::rep_violations(p.monodromy, p.surface());
  for (const auto& issue : rep_issues) out.push_back({"RepSurfaceMismatch", issue});
  if (!rep_issues.empty() || p.genus < 0) return out;  // orbit checks need a valid context

  auto ctx = p.orbit_context();
  auto quotient = ctx.quotient_structure();
  std::size_t expected = quotient.free_rank + quotient.torsion.size();
  if (p.fibration.coords.size() != expected)
    out.push_back({"FibrationLengthMismatch", "expected " + std::to_string(expected) +
                                                  " coordinates, got " +
                                                  std::to_string(p.fibration.coords.size())});
  else
    for (std::size_t i = 0; i < quotient.torsion.size(); ++i) {
      const Int& v = p.fibration.coords[quotient.free_rank + i];
      if (v < 0 || v >= quotient.torsion[i])
        out.push_back({"TorsionCoordinateOutOfRange",
                       "coordinate " + std::to_string(quotient.free_rank + i)});
    }
  if (p.derham.coords.size() != expected)
    out.push_back({"DerhamLengthMismatch", "expected " + std::to_string(expected) +
                                               " coordinates, got " +
                                               std::to_string(p.derham.coords.size())});

  IntMatrix f1 = ctx.induced_h1();
  if (torusbundle::condition_one_holds(f1) &&
      (!fibration_is_zero(p.fibration) || !derham_is_zero(p.derham)))
    out.push_back({"TrivialityViolated",
                   "b1 = 1 forces trivial fibration and de Rham classes"});

  return out;
}

namespace {

void require_valid(const SpacePresentation& p) {
  auto violations = validate(p);
  if (!violations.empty()) throw InvalidPresentationError(std::move(violations));
}

// The orbit coordinates live in the quotient basis derived from the
// presentation's own h1 matrix; orbit comparison across presentations is
// only meaningful when those matrices literally agree.
bool same_quotient_basis(const SpacePresentation& p, const SpacePresentation& q) {
  return p.orbit_context().induced_h1() == q.orbit_context().induced_h1();
}

}  // namespace

IsomorphismReport isomorphic_compare(const SpacePresentation& p, const SpacePresentation& q,
                                     const orbits::SearchBudget& budget) {
  require_valid(p);
  require_valid(q);

  std::string first_undecided_invariant;
  std::string first_undecided_reason;
  auto note_undecided = [&](const std::string& invariant, const std::string& reason) {
    if (first_undecided_invariant.empty()) {
      first_undecided_invariant = invariant;
      first_undecided_reason = reason;
    }
  };

  if (p.tau != q.tau)
    return {Verdict::distinct("groups of periods differ: " + p.tau.to_string() + " vs " +
                              q.tau.to_string()),
            "tau"};
  if (p.c_dh != q.c_dh)
    return {Verdict::distinct("Duistermaat-Heckman constants differ: " + p.c_dh.to_string() +
                              " vs " + q.c_dh.to_string()),
            "c_dh"};
  if (p.genus != q.genus)
    return {Verdict::distinct("genus " + std::to_string(p.genus) + " vs " +
                              std::to_string(q.genus)),
            "genus"};
  if (p.isotropy != q.isotropy)
    return {Verdict::distinct("isotropy data " + p.isotropy.to_string() + " vs " +
                              q.isotropy.to_string()),
            "isotropy"};

  Verdict monodromy_verdict = monodromy::conjugacy_verdict(p.monodromy, q.monodromy, p.surface());
  if (monodromy_verdict.is_distinct()) return {monodromy_verdict, "monodromy"};
  if (monodromy_verdict.is_undecided()) note_undecided("monodromy", monodromy_verdict.detail());

  auto ctx = p.orbit_context();
  bool comparable_basis = same_quotient_basis(p, q);

  // fibration orbit
  if (comparable_basis) {
    auto ca = orbits::fibration_orbit_canonical(p.fibration, ctx);
    auto cb = orbits::fibration_orbit_canonical(q.fibration, q.orbit_context());
    if (ca.canonical && cb.canonical) {
      if (!(*ca.canonical == *cb.canonical))
        return {Verdict::distinct("fibration orbits " + ca.canonical->to_string() + " vs " +
                                  cb.canonical->to_string()),
                "fibration"};
    } else if (p.fibration != q.fibration) {
      note_undecided("fibration", ca.undecided_reason);
    }
  } else if (p.fibration != q.fibration || !fibration_is_zero(p.fibration)) {
    note_undecided("fibration", "orbit bases differ (conjugate but unequal monodromy matrices)");
  }

  // de Rham orbit; tau and c_dh agree at this point
  if (comparable_basis) {
    Verdict derham_verdict =
        orbits::derham_orbit_verdict(p.derham, q.derham, p.c_dh, p.tau, ctx, budget);
    if (derham_verdict.is_distinct()) return {derham_verdict, "derham"};
    if (derham_verdict.is_undecided()) note_undecided("derham", derham_verdict.detail());
  } else if (p.derham != q.derham || !derham_is_zero(p.derham)) {
    note_undecided("derham", "orbit bases differ (conjugate but unequal monodromy matrices)");
  }

  if (!first_undecided_invariant.empty())
    return {Verdict::undecided(first_undecided_invariant + ": " + first_undecided_reason),
            first_undecided_invariant};
  return {Verdict::equivalent(), ""};
}

Verdict isomorphic_verdict(const SpacePresentation& p, const SpacePresentation& q,
                           const orbits::SearchBudget& budget) {
  return isomorphic_compare(p, q, budget).verdict;
}

SpacePresentation model_space(const SymbolicReal& tau, const SymbolicReal& c_dh, int genus,
                              const seifert::IsotropyData& isotropy,
                              const monodromy::MappingClassRep& monodromy,
                              const orbits::FibrationClass& fibration,
                              const orbits::DeRhamClass& derham) {
  SpacePresentation p{tau, c_dh, genus, isotropy, monodromy, fibration, derham};
  require_valid(p);
  return p;
}

ModelWitness model_witness(const SpacePresentation& p) {
  require_valid(p);
  return ModelWitness{seifert::zero_euler_seifert(p.genus, p.isotropy), p.tau, p.monodromy};
}

std::pair<std::size_t, std::size_t> quotient_betti(const SpacePresentation& p) {
  require_valid(p);
  auto coh = torusbundle::quotient_cohomology(p.orbit_context().induced_h1());
  return {coh.b1, coh.b2};
}

std::string InvariantDigest::to_string() const {
  std::ostringstream os;
  os << "tau=" << tau << "; c_dh=" << c_dh << "; genus=" << genus << "; isotropy=" << isotropy
     << "; monodromy=" << monodromy << "; fibration=" << fibration << "; derham=" << derham;
  return os.str();
}

InvariantDigest digest(const SpacePresentation& p) {
  InvariantDigest d;
  d.tau = p.tau.to_string();
  d.c_dh = p.c_dh.to_string();
  d.genus = p.genus;
  d.isotropy = p.isotropy.to_string();
  if (p.genus == 1 && p.isotropy.empty()) {
    auto form = exactalg::sl2z_canonical_form(p.orbit_context().induced_h1());
    d.monodromy = exactalg::to_string(form);
  } else {
    d.monodromy = monodromy::rep_to_string(p.monodromy);
  }
  auto canonical = orbits::fibration_orbit_canonical(p.fibration, p.orbit_context());
  d.fibration = canonical.canonical ? canonical.canonical->to_string() : p.fibration.to_string();
  d.derham = p.derham.to_string();
  return d;
}

}  // namespace spaces
