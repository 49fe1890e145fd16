#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hessenpave/weyl_group.hpp"

namespace hessenpave {

/// Matrix over F_q for a prime q <= 7, entries kept in [0, q).
class PrimeFieldMatrix {
 public:
  PrimeFieldMatrix(int q, int rows, int cols);

  int q() const { return q_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int get(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, long value);

  PrimeFieldMatrix columns(int first, int count) const;
  /// Side-by-side concatenation [*this | other].
  PrimeFieldMatrix concat(const PrimeFieldMatrix& other) const;
  int rank() const;

  friend PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);

 private:
  int q_;
  int rows_;
  int cols_;
  std::vector<int> data_;
};

/// A complete flag in F_q^n in the normal form of its Bruhat cell: column j
/// has a 1 in row perm[j], zeros below it and in the pivot rows of earlier
/// columns, and free entries elsewhere above. V_i is spanned by columns 0..i-1.
struct BruhatFlag {
  std::vector<int> perm;  // 0-based one-line notation
  PrimeFieldMatrix matrix;
};

/// One-line notation (0-based) of a type A_{n-1} Weyl element: w e_j = e_{perm[j]}.
std::vector<int> permutation_of(const WeylElement& w);

/// Visits all q^{l(w)} flags of the cell. Requires 2 <= n <= 5 and q in {2, 3, 5}.
void enumerate_cell_flags(int n, int q, std::span<const int> perm, const std::function<void(const BruhatFlag&)>& visit);

/// The n x n nilpotent Jordan block with ones on the superdiagonal.
PrimeFieldMatrix jordan_block(int n, int q);

/// N V_i ⊆ V_{h(i)} for all i, decided by ranks; h is 1-based valued.
bool hessenberg_check(const BruhatFlag& flag, const PrimeFieldMatrix& n, std::span<const int> h);

struct CellPointCount {
  std::vector<int> perm;
  std::vector<int> word;  // 0-based reduced word
  long long count = 0;
  long long predicted = 0;
};

struct PointCount {
  int n = 0;
  int q = 0;
  std::vector<int> h;
  std::vector<CellPointCount> cells;
  long long total = 0;
  long long betti_eval = 0;

  bool consistent() const;
};

/// Counts F_q points of the Hessenberg variety cell by cell and records the
/// predicted counts q^dim (or 0) from the combinatorial paving.
PointCount tally_points(int n, int q, std::span<const int> h);

/// tally_points, throwing ConsistencyError on any disagreement.
PointCount count_points(int n, int q, std::span<const int> h);

}  // namespace hessenpave
