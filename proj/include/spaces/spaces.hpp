#pragma once

#include "exactalg/symbolic.hpp"
#include "monodromy/monodromy.hpp"
#include "orbits/orbits.hpp"
#include "seifert/seifert.hpp"
#include "torusbundle/torusbundle.hpp"

#include <string>
#include <utility>
#include <vector>

namespace spaces {

using exactalg::SymbolicReal;
using monodromy::Verdict;

/// The full seven-invariant tuple presenting a four-dimensional symplectic
/// non-Hamiltonian circle action up to equivariant symplectomorphism:
/// group of periods tau*Z, Duistermaat-Heckman constant, genus, isotropy
/// data, monodromy class, fibration orbit and de Rham orbit. The two orbit
/// classes are written in the canonical quotient basis derived from the
/// presentation's own induced H^1 map.
struct SpacePresentation {
  SymbolicReal tau;
  SymbolicReal c_dh;
  int genus = 0;
  seifert::IsotropyData isotropy;
  monodromy::MappingClassRep monodromy = monodromy::IdentityClass{};
  orbits::FibrationClass fibration;
  orbits::DeRhamClass derham;

  bool operator==(const SpacePresentation&) const = default;

  monodromy::LabeledSurface surface() const { return {genus, isotropy}; }
  orbits::OrbitContext orbit_context() const { return {genus, monodromy, isotropy}; }
};

struct Violation {
  std::string code;    // stable machine-readable name, e.g. "SumNotInteger"
  std::string detail;  // human-readable context
  bool operator==(const Violation&) const = default;
};

struct InvalidPresentationError : std::domain_error {
  std::vector<Violation> violations;
  explicit InvalidPresentationError(std::vector<Violation> v);
};

/// Checks every presentation invariant: isotropy classes and integrality of
/// their weight sum, monodromy validity for the labeled surface, orbit
/// coordinate lengths and torsion ranges, forced triviality of the orbit
/// classes when b1 = 1, and symbolic positivity of tau and c_dh.
std::vector<Violation> validate(const SpacePresentation& p);

/// Ordered comparison of the seven invariants: tau, c_dh, genus, isotropy,
/// monodromy (conjugacy), fibration orbit, de Rham orbit. Distinct on the
/// first exact mismatch; Equivalent only when all seven agree; Undecided
/// when a sub-comparison is undecided and none is distinct.
struct IsomorphismReport {
  Verdict verdict;
  std::string invariant;  // deciding invariant for Distinct/Undecided
};

IsomorphismReport isomorphic_compare(const SpacePresentation& p, const SpacePresentation& q,
                                     const orbits::SearchBudget& budget = {});

Verdict isomorphic_verdict(const SpacePresentation& p, const SpacePresentation& q,
                           const orbits::SearchBudget& budget = {});

/// Construction data backing a presentation: the zero-Euler Seifert
/// invariant of every level set and the mapping-torus gluing description.
struct ModelWitness {
  seifert::SeifertInvariant level_set;
  SymbolicReal period;  // length of the gluing interval, the positive generator of P
  monodromy::MappingClassRep gluing;
};

/// Canonical presentation with the given invariants. Throws
/// InvalidPresentationError when the argument tuple fails validation.
SpacePresentation model_space(const SymbolicReal& tau, const SymbolicReal& c_dh, int genus,
                              const seifert::IsotropyData& isotropy,
                              const monodromy::MappingClassRep& monodromy,
                              const orbits::FibrationClass& fibration,
                              const orbits::DeRhamClass& derham);

ModelWitness model_witness(const SpacePresentation& p);

/// Betti numbers (b1, b2) of the quotient mapping torus.
std::pair<std::size_t, std::size_t> quotient_betti(const SpacePresentation& p);

/// Canonicalized tuple; equal digests imply an Equivalent verdict.
struct InvariantDigest {
  std::string tau;
  std::string c_dh;
  int genus = 0;
  std::string isotropy;
  std::string monodromy;  // SL2(Z) canonical form when complete, raw rep otherwise
  std::string fibration;  // canonical orbit representative when computed, raw class otherwise
  std::string derham;

  bool operator==(const InvariantDigest&) const = default;
  std::string to_string() const;
};

InvariantDigest digest(const SpacePresentation& p);

}  // namespace spaces
