#pragma once

#include "exactalg/int_matrix.hpp"
#include "seifert/seifert.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace monodromy {

using exactalg::IntMatrix;

struct RepSurfaceMismatchError : std::domain_error {
  explicit RepSurfaceMismatchError(const std::string& what) : std::domain_error(what) {}
};

/// Oriented surface of the given genus with one marked point per isotropy
/// class; the classes are the labels.
struct LabeledSurface {
  int genus = 0;
  seifert::IsotropyData labels;

  bool operator==(const LabeledSurface&) const = default;
  std::size_t marked_points() const { return labels.size(); }
};

struct IdentityClass {
  bool operator==(const IdentityClass&) const = default;
};

/// Genus-1, no marked points: the class of a linear torus map in SL2(Z).
struct TorusLinear {
  IntMatrix m;
  bool operator==(const TorusLinear&) const = default;
};

/// General partial representation: the permutation the class induces on the
/// marked points (indices into the canonically sorted label list) and the
/// induced map on first cohomology, which must preserve the intersection
/// form.
struct HomologyPermutation {
  std::vector<std::size_t> perm;
  IntMatrix h1;
  bool operator==(const HomologyPermutation&) const = default;
};

using MappingClassRep = std::variant<IdentityClass, TorusLinear, HomologyPermutation>;

std::string rep_to_string(const MappingClassRep& rep);

/// Three-valued comparison result. Undecided always carries a reason;
/// Distinct carries the separating witness.
class Verdict {
 public:
  enum class Kind { Equivalent, Distinct, Undecided };

  static Verdict equivalent() { return Verdict(Kind::Equivalent, ""); }
  static Verdict distinct(std::string witness) { return Verdict(Kind::Distinct, std::move(witness)); }
  static Verdict undecided(std::string reason) { return Verdict(Kind::Undecided, std::move(reason)); }

  Kind kind() const { return kind_; }
  bool is_equivalent() const { return kind_ == Kind::Equivalent; }
  bool is_distinct() const { return kind_ == Kind::Distinct; }
  bool is_undecided() const { return kind_ == Kind::Undecided; }
  const std::string& detail() const { return detail_; }

  bool operator==(const Verdict&) const = default;
  std::string to_string() const;

 private:
  Verdict(Kind kind, std::string detail) : kind_(kind), detail_(std::move(detail)) {}
  Kind kind_;
  std::string detail_;
};

/// Standard intersection form on H^1 of a genus-g surface,
/// J = [[0, I], [-I, 0]] in the (a_1..a_g, b_1..b_g) basis.
IntMatrix intersection_form(int genus);

/// m^T * J * m == J.
bool preserves_intersection_form(const IntMatrix& m, int genus);

/// Empty list when the rep is a valid mapping-class representation for the
/// surface; otherwise human-readable reasons.
std::vector<std::string> rep_violations(const MappingClassRep& rep, const LabeledSurface& surface);

/// Map induced on H^1(Sigma_g), a 2g x 2g integer matrix.
IntMatrix induced_h1(const MappingClassRep& rep, const LabeledSurface& surface);

/// Decides conjugacy of two mapping classes of the same labeled surface.
/// Complete for genus 1 without marked points (via the SL2(Z) canonical
/// form); elsewhere returns Distinct only on a complete sub-invariant
/// mismatch, Equivalent only on literal equality, Undecided otherwise.
/// Throws RepSurfaceMismatchError when a rep does not fit the surface.
Verdict conjugacy_verdict(const MappingClassRep& alpha, const MappingClassRep& beta,
                          const LabeledSurface& surface);

}  // namespace monodromy
