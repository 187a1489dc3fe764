#include "exactalg/int_matrix.hpp"

#include <sstream>
#include <utility>

namespace exactalg {

IntMatrix IntMatrix::of(std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Int> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("IntMatrix::of: ragged rows");
    for (long long e : row) entries.emplace_back(e);
  }
  return IntMatrix(r, c, std::move(entries));
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("IntMatrix: shape mismatch in sum");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const { return *this + (-rhs); }

IntMatrix IntMatrix::operator-() const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
  return out;
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  return *this == identity(rows_);
}

bool IntMatrix::is_zero() const {
  for (const Int& e : entries_)
    if (e != 0) return false;
  return true;
}

Int IntMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("IntMatrix: trace of non-square matrix");
  Int t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Int IntMatrix::det() const {
  if (!is_square()) throw std::invalid_argument("IntMatrix: determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; every division below is exact.
  IntMatrix w = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && w.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

IntMatrix IntMatrix::unimodular_inverse() const {
  Int d = det();
  if (d != 1 && d != -1) throw NotUnimodularError("unimodular_inverse: |det| != 1");
  std::size_t n = rows_;
  if (n == 0) return *this;
  // Adjugate by cofactors scaled by 1/det; exact since det = +-1.
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(mr, mc) = at(r, c);
          ++mc;
        }
        ++mr;
      }
      Int cof = minor.det();
      if ((i + j) % 2 == 1) cof = -cof;
      inv.at(j, i) = d == 1 ? cof : -cof;
    }
  return inv;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " [");
    for (std::size_t j = 0; j < cols_; ++j) os << (j == 0 ? "" : ", ") << at(i, j).str();
    os << "]";
    if (i + 1 < rows_) os << ",";
  }
  os << "]";
  return os.str();
}

std::vector<Int> char_poly(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("char_poly: non-square matrix");
  std::size_t n = a.rows();
  std::vector<Int> coeffs{Int(1)};
  IntMatrix m(n, n);  // running M_k of the recurrence
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += coeffs.back();
    m = a * shifted;
    Int tr = m.trace();
    if (tr % Int(k) != 0) throw std::logic_error("char_poly: inexact division");
    coeffs.push_back(-tr / Int(k));
  }
  return coeffs;
}

std::vector<Int> apply(const IntMatrix& a, const std::vector<Int>& x) {
  if (x.size() != a.cols()) throw std::invalid_argument("apply: shape mismatch");
  std::vector<Int> out(a.rows(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a.at(i, j) * x[j];
  return out;
}

std::vector<Int> apply_row(const std::vector<Int>& v, const IntMatrix& a) {
  if (v.size() != a.rows()) throw std::invalid_argument("apply_row: shape mismatch");
  std::vector<Int> out(a.cols(), Int(0));
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) out[j] += v[i] * a.at(i, j);
  return out;
}

}  // namespace exactalg
