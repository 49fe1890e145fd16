#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hessenpave/rational.hpp"

namespace hessenpave {

/// Dense matrix over the rationals. Sizes here never exceed a few dozen.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  bool is_diagonal() const;
  bool is_strictly_upper_triangular() const;
  QMatrix transpose() const;

  QMatrix& operator+=(const QMatrix& other);
  QMatrix& operator-=(const QMatrix& other);
  QMatrix& operator*=(const Rational& scalar);

  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rational& s) { return a *= s; }
  friend QMatrix operator*(const Rational& s, QMatrix a) { return a *= s; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// [a, b] = ab - ba.
QMatrix commutator(const QMatrix& a, const QMatrix& b);

/// exp(x) for nilpotent x; the series is summed until it terminates.
/// Throws ValidationError if x is not nilpotent.
QMatrix exp_nilpotent(const QMatrix& x);

int rank(QMatrix m);
Rational determinant(QMatrix m);

/// Solution set of A z = b: a particular solution with all free variables
/// zero, plus a basis of the kernel of A.
struct LinearSolution {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> kernel;
  int rank = 0;
};

/// std::nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const QMatrix& a, std::span<const Rational> b);

}  // namespace hessenpave
