#pragma once

#include <utility>
#include <vector>

#include "hessenpave/qmatrix.hpp"
#include "hessenpave/root_system.hpp"

namespace hessenpave {

/// m(a, b) with [E_a, E_b] = m(a, b) E_{a+b}; zero when a + b is not a root.
class StructureConstantTable {
 public:
  StructureConstantTable() = default;
  explicit StructureConstantTable(int num_roots)
      : num_roots_(num_roots), entries_(static_cast<std::size_t>(num_roots) * num_roots, 0) {}

  int operator()(RootIndex a, RootIndex b) const {
    return entries_[static_cast<std::size_t>(a) * num_roots_ + b];
  }
  int& at(RootIndex a, RootIndex b) { return entries_[static_cast<std::size_t>(a) * num_roots_ + b]; }
  int num_roots() const { return num_roots_; }

  friend bool operator==(const StructureConstantTable&, const StructureConstantTable&) = default;

 private:
  int num_roots_ = 0;
  std::vector<int> entries_;
};

/// One nonzero bracket [E_a, E_b] = m E_c among positive roots.
struct BracketTerm {
  RootIndex a;
  RootIndex b;
  RootIndex c;
  int m;
};

/// Coefficients of a matrix in the basis {E_a} plus a Cartan remainder.
struct Expansion {
  std::vector<Rational> coeffs;  // indexed by RootIndex, all roots
  QMatrix cartan_part;           // diagonal
};

/// Matrix realization of a classical Lie algebra with one integer root
/// vector per root; positive root vectors are strictly upper triangular.
class ChevalleyRealization {
 public:
  /// Checks every bracket relation; throws ConsistencyError on failure.
  ChevalleyRealization(RootSystemPtr rs, std::vector<QMatrix> root_vectors);

  const RootSystem& rs() const { return *rs_; }
  const RootSystemPtr& rs_ptr() const { return rs_; }
  int dim_rep() const { return dim_rep_; }

  const QMatrix& root_vector(RootIndex a) const { return root_vectors_.at(a); }
  const std::vector<QMatrix>& root_vectors() const { return root_vectors_; }
  const std::vector<QMatrix>& cartan_basis() const { return cartan_basis_; }
  const StructureConstantTable& constants() const { return constants_; }
  int m(RootIndex a, RootIndex b) const { return constants_(a, b); }

  /// Nonzero brackets among positive root vectors, for coefficient-level work.
  const std::vector<BracketTerm>& positive_terms() const { return positive_terms_; }

  /// Throws ValidationError when the matrix has off-diagonal entries outside
  /// every root space.
  Expansion expand(const QMatrix& m) const;

  /// Sum of coeffs[a] E_a over positive roots a.
  QMatrix from_positive(const std::vector<Rational>& coeffs) const;

 private:
  RootSystemPtr rs_;
  int dim_rep_ = 0;
  std::vector<QMatrix> root_vectors_;
  std::vector<std::pair<int, int>> pivots_;
  std::vector<QMatrix> cartan_basis_;
  StructureConstantTable constants_;
  std::vector<BracketTerm> positive_terms_;
};

/// A_n in gl_{n+1} with E_{e_i - e_j} the matrix unit (i, j); B_n, C_n, D_n
/// as the algebras preserving an antidiagonal symmetric (B, D) or
/// alternating (C) form.
ChevalleyRealization build_chevalley(RootSystemPtr rs);

/// Invariant bilinear form of the realization (identity for type A).
QMatrix invariant_form(const RootSystem& rs);

/// Type D: flips signs of root vectors so that the constants
///   m(a_i + .. + a_{n-2}, a_{n-1}),  m(a_i + .. + a_{n-2}, a_n),
///   m(a_i, a_{i+1} + .. + a_{n-1}),  m(a_i, a_n + a_{i+1} + .. + a_{n-2}),
///   m(a_{i+1} + .. + a_{n-1}, a_n),  m(a_n + a_{i+1} + .. + a_{n-2}, a_{n-1})
/// are all 1. Throws ValidationError for other types and ConsistencyError if
/// no sign choice works.
ChevalleyRealization normalize_type_D(const ChevalleyRealization& real);

/// The six families above as (a, b) pairs, 1-based i running over its range.
std::vector<std::pair<RootIndex, RootIndex>> type_d_normalized_pairs(const RootSystem& rs);

}  // namespace hessenpave
