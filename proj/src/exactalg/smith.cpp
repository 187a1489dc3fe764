#include "exactalg/smith.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace exactalg {

std::vector<Int> SmithDecomposition::diagonal() const {
  std::size_t m = std::min(d.rows(), d.cols());
  std::vector<Int> diag(m);
  for (std::size_t i = 0; i < m; ++i) diag[i] = d.at(i, i);
  return diag;
}

namespace {

// Row/column reduction with pivot = smallest nonzero absolute value, plus the
// classical fix-up pass that makes each pivot divide the remaining submatrix,
// which yields the divisibility chain directly.
struct SmithWorker {
  IntMatrix d, u, v;

  explicit SmithWorker(const IntMatrix& a)
      : d(a), u(IntMatrix::identity(a.rows())), v(IntMatrix::identity(a.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < d.cols(); ++k) std::swap(d.at(i, k), d.at(j, k));
    for (std::size_t k = 0; k < u.cols(); ++k) std::swap(u.at(i, k), u.at(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < d.rows(); ++k) std::swap(d.at(k, i), d.at(k, j));
    for (std::size_t k = 0; k < v.rows(); ++k) std::swap(v.at(k, i), v.at(k, j));
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < d.cols(); ++k) d.at(i, k) += q * d.at(j, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) += q * u.at(j, k);
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < d.rows(); ++k) d.at(k, i) += q * d.at(k, j);
    for (std::size_t k = 0; k < v.rows(); ++k) v.at(k, i) += q * v.at(k, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < d.cols(); ++k) d.at(i, k) = -d.at(i, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
  }

  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j) {
        const Int& e = d.at(i, j);
        if (e == 0) continue;
        Int a = abs(e);
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  void run() {
    std::size_t m = std::min(d.rows(), d.cols());
    for (std::size_t t = 0; t < m; ++t) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < d.rows(); ++i) {
          if (d.at(i, t) == 0) continue;
          add_row(i, t, -(d.at(i, t) / d.at(t, t)));
          if (d.at(i, t) != 0) clean = false;  // remainder smaller than pivot
        }
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (d.at(t, j) == 0) continue;
          add_col(j, t, -(d.at(t, j) / d.at(t, t)));
          if (d.at(t, j) != 0) clean = false;
        }
        if (!clean) {
          std::size_t ni = 0, nj = 0;
          find_pivot(t, ni, nj);
          swap_rows(t, ni);
          swap_cols(t, nj);
          continue;
        }
        // pivot must divide everything that remains
        bool divisible = true;
        for (std::size_t i = t + 1; i < d.rows() && divisible; ++i)
          for (std::size_t j = t + 1; j < d.cols() && divisible; ++j)
            if (d.at(i, j) % d.at(t, t) != 0) {
              add_row(t, i, Int(1));
              divisible = false;
            }
        if (divisible) break;
      }
    }
    for (std::size_t i = 0; i < m; ++i)
      if (d.at(i, i) < 0) negate_row(i);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithWorker w(a);
  w.run();
  return SmithDecomposition{std::move(w.u), std::move(w.d), std::move(w.v)};
}

std::string AbelianGroupStructure::to_string() const {
  std::ostringstream os;
  if (is_trivial()) return "0";
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const Int& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t.str();
    first = false;
  }
  return os.str();
}

AbelianGroupStructure cokernel_structure(const IntMatrix& a) {
  auto diag = smith_normal_form(a).diagonal();
  AbelianGroupStructure out;
  std::size_t nonzero = 0;
  for (const Int& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = a.rows() - nonzero;
  return out;
}

std::size_t rank(const IntMatrix& a) {
  auto diag = smith_normal_form(a).diagonal();
  std::size_t r = 0;
  for (const Int& d : diag)
    if (d != 0) ++r;
  return r;
}

std::size_t kernel_rank(const IntMatrix& a) { return a.cols() - rank(a); }

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: shape mismatch");
  auto snf = smith_normal_form(a);
  std::vector<Int> ub = apply(snf.u, b);
  std::size_t m = std::min(a.rows(), a.cols());
  std::vector<Int> y(a.cols(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Int di = i < m ? snf.d.at(i, i) : Int(0);
    if (di == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % di != 0) return std::nullopt;
      y[i] = ub[i] / di;
    }
  }
  return apply(snf.v, y);
}

bool solvable_rational(const IntMatrix& a, const std::vector<Int>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solvable_rational: shape mismatch");
  auto snf = smith_normal_form(a);
  std::vector<Int> ub = apply(snf.u, b);
  std::size_t m = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Int di = i < m ? snf.d.at(i, i) : Int(0);
    if (di == 0 && ub[i] != 0) return false;
  }
  return true;
}

}  // namespace exactalg
