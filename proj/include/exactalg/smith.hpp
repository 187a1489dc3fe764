#pragma once

#include "exactalg/int_matrix.hpp"

#include <optional>
#include <vector>

namespace exactalg {

/// Smith decomposition U*A*V = D with U, V unimodular and D diagonal with
/// nonnegative entries d1 | d2 | ... . D is unique given A.
struct SmithDecomposition {
  IntMatrix u, d, v;

  /// Diagonal of D, length min(rows, cols).
  std::vector<Int> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Isomorphism type of a finitely generated abelian group,
/// Z^free_rank + Z/t1 + Z/t2 + ... with t1 | t2 | ..., all ti > 1.
struct AbelianGroupStructure {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const AbelianGroupStructure& other) const = default;
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
};

/// Structure of Z^rows / image(A) for A read as a map Z^cols -> Z^rows.
AbelianGroupStructure cokernel_structure(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Rank of the integer kernel, cols(A) - rank(A).
std::size_t kernel_rank(const IntMatrix& a);

/// Solves A*x = b exactly over the integers; nullopt when no integer
/// solution exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

/// Decides solvability of A*x = b over the rationals.
bool solvable_rational(const IntMatrix& a, const std::vector<Int>& b);

}  // namespace exactalg
