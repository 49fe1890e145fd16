#include "hessenpave/qmatrix.hpp"

#include <algorithm>
#include <sstream>

#include "hessenpave/error.hpp"

namespace hessenpave {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool QMatrix::is_diagonal() const {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (r != c && sgn((*this)(r, c)) != 0) return false;
  return true;
}

bool QMatrix::is_strictly_upper_triangular() const {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c <= r && c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix& QMatrix::operator+=(const QMatrix& other) {
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& other) {
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& x = a(r, k);
      if (sgn(x) == 0) continue;
      for (int c = 0; c < b.cols_; ++c)
        if (sgn(b(k, c)) != 0) out(r, c) += x * b(k, c);
    }
  return out;
}

std::string QMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int r = 0; r < rows_; ++r) {
    out << (r ? "; " : "");
    for (int c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c).get_str();
  }
  out << "]";
  return out.str();
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix exp_nilpotent(const QMatrix& x) {
  const int n = x.rows();
  QMatrix sum = QMatrix::identity(n);
  QMatrix term = QMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    term = term * x;
    term *= Rational(1, k);
    if (term.is_zero()) return sum;
    sum += term;
  }
  if (!(term * x).is_zero()) throw ValidationError("exp_nilpotent: matrix is not nilpotent");
  return sum;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(QMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r)
      if (sgn(m(r, col)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const Rational inv = 1 / m(row, col);
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(QMatrix m) { return static_cast<int>(row_reduce(m).size()); }

Rational determinant(QMatrix m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  const int n = m.rows();
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (sgn(m(r, col)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col) / m(col, col);
      for (int c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

std::optional<LinearSolution> solve_linear(const QMatrix& a, std::span<const Rational> b) {
  if (static_cast<int>(b.size()) != a.rows()) throw ValidationError("solve_linear: size mismatch");
  const int vars = a.cols();
  QMatrix aug(a.rows(), vars + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < vars; ++c) aug(r, c) = a(r, c);
    aug(r, vars) = b[r];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == vars) return std::nullopt;

  LinearSolution out;
  out.rank = static_cast<int>(pivots.size());
  out.particular.assign(vars, Rational(0));
  std::vector<char> is_pivot(vars, 0);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    out.particular[pivots[k]] = aug(static_cast<int>(k), vars);
    is_pivot[pivots[k]] = 1;
  }
  for (int free = 0; free < vars; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(vars, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -aug(static_cast<int>(k), free);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

}  // namespace hessenpave
