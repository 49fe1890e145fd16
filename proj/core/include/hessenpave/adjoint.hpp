#pragma once

#include <random>
#include <span>
#include <vector>

#include "hessenpave/chevalley.hpp"
#include "hessenpave/rows.hpp"

namespace hessenpave {

/// Element of n: coefficient n_a for each positive root a.
struct NilpotentElement {
  std::vector<Rational> coeffs;

  static NilpotentElement zero(const RootSystem& rs) {
    return {std::vector<Rational>(rs.num_positive(), Rational(0))};
  }
  bool is_zero() const;
  Rational& operator[](RootIndex a) { return coeffs[a]; }
  const Rational& operator[](RootIndex a) const { return coeffs[a]; }

  NilpotentElement& operator+=(const NilpotentElement& other);
  NilpotentElement& operator-=(const NilpotentElement& other);
  NilpotentElement& operator*=(const Rational& s);
  friend NilpotentElement operator+(NilpotentElement a, const NilpotentElement& b) { return a += b; }
  friend NilpotentElement operator-(NilpotentElement a, const NilpotentElement& b) { return a -= b; }
  friend NilpotentElement operator*(const Rational& s, NilpotentElement a) { return a *= s; }
  friend bool operator==(const NilpotentElement&, const NilpotentElement&) = default;
};

/// Nonzero coefficient on every simple root vector.
bool is_regular(const RootSystem& rs, const NilpotentElement& n);

/// Sum of the simple root vectors.
NilpotentElement default_nilpotent(const RootSystem& rs);

/// Integer coefficients in [-5, 5]; simple coefficients nonzero when `regular`.
NilpotentElement random_nilpotent(const RootSystem& rs, std::mt19937_64& gen, bool regular);
/// Same distribution, supported on the given positive roots.
NilpotentElement random_supported(const RootSystem& rs, std::span<const RootIndex> support, std::mt19937_64& gen);

/// [A, B] as matrices.
QMatrix bracket(const QMatrix& a, const QMatrix& b);

/// [X, Y] computed from the structure constants.
NilpotentElement bracket(const ChevalleyRealization& real, const NilpotentElement& x, const NilpotentElement& y);

/// Ad(exp X)(N) = sum_k ad(X)^k (N) / k!, via structure constants.
NilpotentElement ad_exp(const ChevalleyRealization& real, const NilpotentElement& x, const NilpotentElement& n);

/// Same value computed as exp(X) N exp(-X) with matrices and re-expanded in
/// the root-vector basis. Throws ConsistencyError if the result leaves n.
NilpotentElement ad_exp_matrix(const ChevalleyRealization& real, const NilpotentElement& x,
                               const NilpotentElement& n);

/// Coefficients of a matrix known to lie in n.
NilpotentElement nilpotent_from_matrix(const ChevalleyRealization& real, const QMatrix& m);

/// rho_i: keeps only the coefficients on row i (0-based).
NilpotentElement project_row(const RowDecomposition& rows, const NilpotentElement& x, int i);

/// psi_i(N) = (rho_i o ad N) restricted to n_i, with rows and columns in
/// `order` (height descending).
struct PsiMatrix {
  std::vector<RootIndex> order;
  QMatrix matrix;
};

/// Built from the structure-constant formula and from matrix brackets;
/// throws ConsistencyError if the two disagree.
PsiMatrix psi_matrix(const ChevalleyRealization& real, const RowDecomposition& rows, const NilpotentElement& n,
                     int i);

/// theta_i(N)(X) = rho_i Ad(exp X)(N). X must be supported on one row.
NilpotentElement theta_row(const ChevalleyRealization& real, const RowDecomposition& rows,
                           const NilpotentElement& n, const NilpotentElement& x, int i);

}  // namespace hessenpave
