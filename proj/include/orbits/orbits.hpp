#pragma once

#include "exactalg/smith.hpp"
#include "exactalg/symbolic.hpp"
#include "monodromy/monodromy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbits {

using exactalg::Int;
using exactalg::IntMatrix;
using exactalg::SymbolicReal;
using monodromy::Verdict;

struct ContextMismatchError : std::domain_error {
  explicit ContextMismatchError(const std::string& what) : std::domain_error(what) {}
};

/// Element of H^1(Sigma_g, Z) / image(f1 - id) in the canonical basis
/// produced by cokernel_structure: free coordinates first, then one
/// coordinate per invariant factor, reduced mod that factor.
struct FibrationClass {
  std::vector<Int> coords;
  bool operator==(const FibrationClass&) const = default;
  std::string to_string() const;
};

/// Element of H^1(Sigma_g, R) / image(f1 - id), same basis, real (symbolic)
/// coefficients.
struct DeRhamClass {
  std::vector<SymbolicReal> coords;
  bool operator==(const DeRhamClass&) const = default;
  std::string to_string() const;
};

/// Invariant context the orbit computations run in: the genus and the
/// monodromy class of the underlying space.
struct OrbitContext {
  int genus = 0;
  monodromy::MappingClassRep monodromy = monodromy::IdentityClass{};
  seifert::IsotropyData isotropy;  // orbits of free actions have empty data

  monodromy::LabeledSurface surface() const { return {genus, isotropy}; }
  IntMatrix induced_h1() const;
  exactalg::AbelianGroupStructure quotient_structure() const;
  std::size_t coordinate_length() const;
};

struct SearchBudget {
  int word_length = 12;  // R/L letters in the SL2(Z) enumeration
  Int shift_bound = 50;  // bound reported for witness shifts
};

/// Result of a canonicalization that may be honestly partial.
struct CanonicalFibration {
  std::optional<FibrationClass> canonical;
  std::string undecided_reason;  // set iff canonical is empty
};

/// Canonical orbit representative of a fibration class under the
/// Phi-diffeomorphism action. Complete cases:
///   - trivial quotient group (includes genus 0): the zero class;
///   - genus 1 free with identity monodromy: (gcd(m, n), 0);
///   - genus 1 free with monodromy [[1,1],[0,1]]: |n| (orbits <-> N).
/// Everything else is Undecided. Throws ContextMismatchError when the class
/// does not fit the context.
CanonicalFibration fibration_orbit_canonical(const FibrationClass& c, const OrbitContext& ctx);

/// Parameters of one Phi-T-diffeomorphism acting on de Rham coordinates:
/// an SL2(Z) matrix [[a,b],[c,d]] and integer shifts e, f, y, z.
struct DerhamActionParams {
  Int a = 1, b = 0, c = 0, d = 1;
  Int e = 0, f = 0, y = 0, z = 0;
};

/// The action on (s, t):
///   s' = s a + t c + c_dh (e c - a f) + y tau
///   t' = s b + t d + c_dh (e d - b f) + z tau.
/// Throws exactalg::NotUnimodularError unless ad - bc = 1.
std::pair<SymbolicReal, SymbolicReal> derham_action(const SymbolicReal& s, const SymbolicReal& t,
                                                    const DerhamActionParams& params,
                                                    const SymbolicReal& c_dh,
                                                    const SymbolicReal& tau);

/// Composition law: applying `first` then `second` equals applying the
/// returned parameters once.
DerhamActionParams compose(const DerhamActionParams& first, const DerhamActionParams& second);

/// Three-valued orbit equivalence of de Rham classes.
/// Complete cases: equal classes, trivial quotient, and within the genus-1
/// free identity-monodromy context a battery of exact invariants plus a
/// bounded, deterministic witness search. Never guesses: Distinct is always
/// certified by an invariant, Equivalent by an explicit connecting action.
Verdict derham_orbit_verdict(const DeRhamClass& x, const DeRhamClass& xp,
                             const SymbolicReal& c_dh, const SymbolicReal& tau,
                             const OrbitContext& ctx, const SearchBudget& budget = {});

/// Connecting action found by the search, exposed for tests and reports.
std::optional<DerhamActionParams> derham_connecting_action(const DeRhamClass& x,
                                                           const DeRhamClass& xp,
                                                           const SymbolicReal& c_dh,
                                                           const SymbolicReal& tau,
                                                           const OrbitContext& ctx,
                                                           const SearchBudget& budget = {});

}  // namespace orbits
