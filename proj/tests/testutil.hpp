#pragma once

#include "exactalg/int_matrix.hpp"
#include "monodromy/monodromy.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

// shared generators and independent oracles for the test suites
namespace testutil {

using exactalg::Int;
using exactalg::IntMatrix;

using Rng = std::mt19937_64;

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
  return m;
}

// random product of elementary symplectic generators of Sp(2g, Z) for the
// form J = [[0, I], [-I, 0]]: shears [[I, S], [0, I]] and [[I, 0], [S, I]]
// with S symmetric, GL(g, Z)-blocks [[U, 0], [0, U^-T]], and J itself
inline IntMatrix random_symplectic(Rng& rng, int genus, int factors = 8) {
  std::size_t g = static_cast<std::size_t>(genus);
  std::size_t n = 2 * g;
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> kind(0, 3);

  IntMatrix m = IntMatrix::identity(n);
  for (int it = 0; it < factors; ++it) {
    IntMatrix f = IntMatrix::identity(n);
    switch (kind(rng)) {
      case 0:
      case 1: {
        IntMatrix s(g, g);
        for (std::size_t i = 0; i < g; ++i)
          for (std::size_t j = i; j < g; ++j) s.at(i, j) = s.at(j, i) = entry(rng);
        bool upper = kind(rng) % 2 == 0;
        for (std::size_t i = 0; i < g; ++i)
          for (std::size_t j = 0; j < g; ++j) {
            if (upper)
              f.at(i, g + j) = s.at(i, j);
            else
              f.at(g + i, j) = s.at(i, j);
          }
        break;
      }
      case 2: {
        // random unimodular U from a few integer shears of the identity
        IntMatrix u = IntMatrix::identity(g);
        for (int t = 0; t < 3 && g > 1; ++t) {
          std::uniform_int_distribution<std::size_t> idx(0, g - 1);
          std::size_t i = idx(rng), j = idx(rng);
          if (i == j) continue;
          Int q = entry(rng);
          for (std::size_t k = 0; k < g; ++k) u.at(i, k) += q * u.at(j, k);
        }
        IntMatrix ut_inv = u.unimodular_inverse().transpose();
        for (std::size_t i = 0; i < g; ++i)
          for (std::size_t j = 0; j < g; ++j) {
            f.at(i, j) = u.at(i, j);
            f.at(g + i, g + j) = ut_inv.at(i, j);
          }
        break;
      }
      default:
        f = monodromy::intersection_form(genus);
        break;
    }
    m = m * f;
  }
  return m;
}

// --- small-matrix SL2(Z) helpers used by the brute-force conjugacy oracle ---

struct M64 {
  std::int64_t a, b, c, d;
  friend bool operator==(const M64&, const M64&) = default;
};

inline M64 mul(const M64& x, const M64& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

inline M64 to_m64(const IntMatrix& m) {
  return {static_cast<std::int64_t>(m.at(0, 0)), static_cast<std::int64_t>(m.at(0, 1)),
          static_cast<std::int64_t>(m.at(1, 0)), static_cast<std::int64_t>(m.at(1, 1))};
}

inline IntMatrix from_m64(const M64& m) {
  return IntMatrix(2, 2, {Int(m.a), Int(m.b), Int(m.c), Int(m.d)});
}

// all SL2(Z) matrices with entries in [-bound, bound], ordered by max |entry|
// so that small conjugators are tried first
std::vector<M64> sl2_box(int bound);

// independent oracle: is there g with entries bounded by `bound` and
// g*a = b*g (i.e. g a g^-1 = b)?
bool brute_force_conjugate(const M64& a, const M64& b, int bound);

// random word in R, L, R^-1, L^-1
IntMatrix random_sl2_word(Rng& rng, int length);

}  // namespace testutil
