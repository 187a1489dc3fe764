#pragma once

#include "exactalg/int_matrix.hpp"
#include "exactalg/smith.hpp"

#include <stdexcept>
#include <string>

namespace torusbundle {

using exactalg::AbelianGroupStructure;
using exactalg::IntMatrix;

struct NotSymplecticError : std::domain_error {
  NotSymplecticError() : std::domain_error("matrix does not preserve the intersection form") {}
};

/// Integer cohomology of the mapping torus of a genus-g surface with
/// monodromy acting on H^1 by f1. From the Mayer-Vietoris sequence,
///   H^1 = Z^(ker_rank(f1 - I) + 1)            (torsion-free),
///   H^2 = coker(f1 - I) + Z                   (the sequence splits).
struct QuotientCohomology {
  AbelianGroupStructure h1;
  AbelianGroupStructure h2;
  std::size_t b1 = 0;
  std::size_t b2 = 0;

  bool operator==(const QuotientCohomology&) const = default;
  std::string to_string() const;
};

/// f1 must be a 2g x 2g matrix preserving the intersection form (genus 0 is
/// the 0x0 matrix); throws NotSymplecticError otherwise.
QuotientCohomology quotient_cohomology(const IntMatrix& f1);

/// Condition (1): true iff ker(f1 - I) = 0 iff b1 = 1 iff b2 = 1.
bool condition_one_holds(const IntMatrix& f1);

}  // namespace torusbundle
