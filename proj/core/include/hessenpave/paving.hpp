#pragma once

#include <optional>
#include <vector>

#include "hessenpave/hessenberg.hpp"
#include "hessenpave/rows.hpp"
#include "hessenpave/weyl_group.hpp"

namespace hessenpave {

/// P_w = H(N, H) ∩ BwB/B for N the sum of simple root vectors.
struct PavingCell {
  WeylElement w;
  bool nonempty = false;
  std::optional<int> dim;        // set iff nonempty
  std::vector<int> row_profile;  // empty iff the cell is empty
};

/// b_k = number of nonempty cells of complex dimension k.
struct BettiTable {
  std::vector<long long> coefficients;

  long long total_cells() const;
  int top_degree() const { return static_cast<int>(coefficients.size()) - 1; }
  /// sum_k b_k q^k: the number of F_q points of a variety with this paving.
  long long evaluate(long long q) const;
};

/// w^{-1} alpha_i ∈ Phi_H for every simple root alpha_i.
bool cell_nonempty(const WeylElement& w, const HessenbergSpace& space);

/// Membership in w Phi_H for every root: entry a is 1 iff w^{-1} a ∈ Phi_H.
std::vector<char> twisted_membership(const WeylElement& w, const HessenbergSpace& space);

/// |Phi_w ∩ w Phi_H|. Throws ValidationError on an empty cell.
int cell_dimension(const WeylElement& w, const HessenbergSpace& space);

/// dim(b ∩ Ad w(b^- ∩ H)) - rank, evaluated on root spaces:
/// |{beta ∈ Phi_H ∩ Phi- : w beta > 0}|.
int cell_dimension_lie(const WeylElement& w, const HessenbergSpace& space);

/// Per-stage contributions of the iterated fiber bundle. Types A/B/C: entry i
/// is |Phi_w ∩ Phi_i ∩ w Phi_H|. Type D: entry i (i = 0..n-1) is the paired
/// stage of row i's part 0 with row i+1's parts 1 and 2 (row 0 is empty).
std::vector<int> row_dimension_profile(const WeylElement& w, const HessenbergSpace& space,
                                       const RowDecomposition& rows);
std::vector<int> row_dimension_profile(const WeylElement& w, const HessenbergSpace& space);

/// Stage layout shared by the type-D profile and the witness solver.
struct TypeDStage {
  std::vector<RootIndex> columns;  // part 0 of row i, parts 1 and 2 of row i+1
  std::vector<RootIndex> rows;     // part 2 of row i+1, parts 1 and 0 of row i
};
std::vector<TypeDStage> type_d_stages(const RowDecomposition& rows);

/// One cell per Weyl element, in the order of `elements` (by default length
/// then reduced word).
std::vector<PavingCell> compute_paving(const RootSystemPtr& rs, const HessenbergSpace& space);
std::vector<PavingCell> compute_paving(const std::vector<WeylElement>& elements, const HessenbergSpace& space,
                                       const RowDecomposition& rows);

BettiTable betti_from_cells(const std::vector<PavingCell>& cells);
BettiTable poincare_polynomial(const RootSystemPtr& rs, const HessenbergSpace& space);

}  // namespace hessenpave
