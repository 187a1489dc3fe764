#pragma once

#include "exactalg/int_matrix.hpp"

#include <string>
#include <variant>

namespace exactalg {

/// Canonical form of an SL2(Z) conjugacy class. Two SL2(Z) matrices are
/// conjugate in SL2(Z) if and only if their canonical forms are equal.
///
/// The three branches follow the trace trichotomy:
///   |trace| < 2 or M = +-I  -> Elliptic (finite order dividing 12),
///   |trace| = 2, M != +-I   -> Parabolic,
///   |trace| > 2             -> Hyperbolic.
struct SL2Elliptic {
  int order;            // 1, 2, 3, 4 or 6
  IntMatrix canonical;  // fixed class representative
  bool operator==(const SL2Elliptic& other) const = default;
};

struct SL2Parabolic {
  int sign;   // +1 when trace = 2, -1 when trace = -2
  Int shear;  // sign*M is conjugate to [[1, shear], [0, 1]], shear != 0
  bool operator==(const SL2Parabolic& other) const = default;
};

struct SL2Hyperbolic {
  int sign;          // +1 when trace > 2, -1 when trace < -2
  std::string word;  // cyclic word over {R, L}, stored as its lex-least rotation
  bool operator==(const SL2Hyperbolic& other) const = default;
};

using SL2ZCanonicalForm = std::variant<SL2Elliptic, SL2Parabolic, SL2Hyperbolic>;

/// Computes the conjugacy canonical form of a 2x2 integer matrix with
/// determinant 1. Throws NotUnimodularError otherwise.
///
/// Hyperbolic classes are classified by factoring +-M (choosing the sign
/// that makes the trace exceed 2) into a positive word in
/// R = [[1,1],[0,1]] and L = [[1,0],[1,1]], unique up to cyclic rotation.
/// Parabolic classes carry the shear of the conjugate +-[[1,n],[0,1]].
/// Elliptic classes are one of the finitely many torsion classes.
SL2ZCanonicalForm sl2z_canonical_form(const IntMatrix& m);

bool operator==(const SL2ZCanonicalForm& a, const SL2ZCanonicalForm& b);

std::string to_string(const SL2ZCanonicalForm& form);

/// Multiplies out a word over {'R', 'L'}.
IntMatrix rl_word_matrix(const std::string& word);

/// Lexicographically least rotation of a cyclic word.
std::string least_rotation(const std::string& word);

}  // namespace exactalg
