#pragma once

#include "spaces/spaces.hpp"

#include <stdexcept>

namespace catalog {

using exactalg::Int;
using exactalg::SymbolicReal;
using spaces::SpacePresentation;

struct HamiltonianActionError : std::domain_error {
  HamiltonianActionError()
      : std::domain_error("k = 0 gives a Hamiltonian action, outside this classification") {}
};
struct PeriodsNotDiscreteError : std::domain_error {
  explicit PeriodsNotDiscreteError(const std::string& what) : std::domain_error(what) {}
};

/// Parameters of a diagonal action on a product of surfaces: areas A, B > 0
/// and rotation numbers k, l. Signed velocities are accepted; constructors
/// normalize to k > 0, l >= 0.
struct DiagonalParams {
  SymbolicReal area_a;
  SymbolicReal area_b;
  Int k{1};
  Int l{0};
};

/// Diagonal action on T^2 x S^2 rotating the torus k times and the sphere
/// l times: genus 0, period group (A k / 2 pi) Z, Duistermaat-Heckman
/// constant 2 pi B / k, isotropy {(k, l mod k), (k, -l mod k)}, identity
/// monodromy, trivial orbit classes (b1 = 1).
SpacePresentation torus_times_sphere(const DiagonalParams& params);

/// Published equivalence rule for two such actions: k = k', l = +-l' mod k,
/// A = A', B = B'.
bool torus_sphere_equivalent(const DiagonalParams& p, const DiagonalParams& q);

/// Diagonal action on T^2 x T^2. The caller supplies the positive generator
/// tau of (A k / 2 pi) Z + (B l / 2 pi) Z; the consistency of that claim is
/// checked exactly where decidable (throws PeriodsNotDiscreteError).
/// Genus 1, free, identity monodromy, c_dh = A B / tau, zero orbit classes.
SpacePresentation torus_times_torus(const DiagonalParams& params, const SymbolicReal& tau);

/// The Kodaira-Thurston manifold with its free circle action: period group
/// (1/2pi) Z, c_dh = 2 pi, genus 1, monodromy [[1,1],[0,1]], trivial
/// principal bundle (zero orbit classes).
SpacePresentation kodaira_thurston();

/// The T^4 family with symplectic forms twisted by parameters A, B: all
/// members share period group (1/2pi) Z, c_dh = 2 pi, genus 1, identity
/// monodromy and trivial fibration class, and differ only in the de Rham
/// class (A, B).
SpacePresentation t4_family(const SymbolicReal& a, const SymbolicReal& b);

}  // namespace catalog
