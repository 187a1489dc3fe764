#pragma once

#include "exactalg/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace exactalg {

struct NotUnimodularError : std::domain_error {
  NotUnimodularError() : std::domain_error("matrix is not unimodular (det != 1)") {}
  explicit NotUnimodularError(const std::string& what) : std::domain_error(what) {}
};

/// Dense integer matrix with arbitrary-precision entries, row-major storage.
/// 0x0 and other degenerate shapes are valid values.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw std::invalid_argument("IntMatrix: entry count does not match shape");
  }

  /// Builds from nested braces of plain integers, e.g. {{1, 1}, {0, 1}}.
  static IntMatrix of(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<Int>& entries() const { return entries_; }

  bool operator==(const IntMatrix& other) const = default;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator-() const;

  bool is_square() const { return rows_ == cols_; }
  bool is_identity() const;
  bool is_zero() const;

  Int trace() const;

  /// Exact determinant via fraction-free Bareiss elimination. Square only.
  Int det() const;

  /// Exact inverse of a unimodular matrix (|det| = 1); throws otherwise.
  IntMatrix unimodular_inverse() const;

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> entries_;
};

/// Coefficients [1, c1, ..., cn] of det(xI - A) = x^n + c1 x^(n-1) + ... + cn,
/// computed by the Faddeev-LeVerrier recurrence (all divisions exact).
std::vector<Int> char_poly(const IntMatrix& a);

/// Matrix-vector product A*x, x as column vector.
std::vector<Int> apply(const IntMatrix& a, const std::vector<Int>& x);

/// Row-vector action v*A.
std::vector<Int> apply_row(const std::vector<Int>& v, const IntMatrix& a);

}  // namespace exactalg
