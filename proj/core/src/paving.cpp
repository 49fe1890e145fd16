#include "hessenpave/paving.hpp"

#include <algorithm>

#include "hessenpave/error.hpp"

namespace hessenpave {

namespace {

void require_same_system(const WeylElement& w, const HessenbergSpace& space) {
  if (w.root_system().name() != space.root_system().name())
    throw ValidationError("Weyl element of " + w.root_system().name() + " used with a Hessenberg space of " +
                          space.root_system().name());
}

void require_nonempty(const WeylElement& w, const HessenbergSpace& space) {
  if (!cell_nonempty(w, space)) throw ValidationError("the cell of this Weyl element is empty");
}

std::vector<RootIndex> inverse_permutation(const WeylElement& w) {
  auto perm = w.root_permutation();
  std::vector<RootIndex> inv(perm.size());
  for (std::size_t a = 0; a < perm.size(); ++a) inv[perm[a]] = static_cast<RootIndex>(a);
  return inv;
}

void append(std::vector<RootIndex>& into, const std::vector<RootIndex>& from) {
  into.insert(into.end(), from.begin(), from.end());
}

}  // namespace

long long BettiTable::total_cells() const {
  long long total = 0;
  for (auto b : coefficients) total += b;
  return total;
}

long long BettiTable::evaluate(long long q) const {
  long long value = 0;
  long long power = 1;
  for (auto b : coefficients) {
    value += b * power;
    power *= q;
  }
  return value;
}

bool cell_nonempty(const WeylElement& w, const HessenbergSpace& space) {
  require_same_system(w, space);
  const auto& rs = space.root_system();
  const auto inv = inverse_permutation(w);
  for (int i = 0; i < rs.rank(); ++i)
    if (!space.contains(inv[rs.simple(i)])) return false;
  return true;
}

std::vector<char> twisted_membership(const WeylElement& w, const HessenbergSpace& space) {
  require_same_system(w, space);
  const auto inv = inverse_permutation(w);
  std::vector<char> out(inv.size());
  for (std::size_t a = 0; a < inv.size(); ++a) out[a] = space.contains(inv[a]) ? 1 : 0;
  return out;
}

int cell_dimension(const WeylElement& w, const HessenbergSpace& space) {
  require_nonempty(w, space);
  const auto inv = inverse_permutation(w);
  int dim = 0;
  for (RootIndex a : inversion_set(w))
    if (space.contains(inv[a])) ++dim;
  return dim;
}

int cell_dimension_lie(const WeylElement& w, const HessenbergSpace& space) {
  require_nonempty(w, space);
  const auto& rs = space.root_system();
  int dim = 0;
  for (RootIndex beta : space.negative_part())
    if (rs.is_positive(w.apply(beta))) ++dim;
  return dim;
}

std::vector<TypeDStage> type_d_stages(const RowDecomposition& rows) {
  const int n = rows.size();
  std::vector<TypeDStage> stages(n);
  for (int s = 0; s < n; ++s) {
    auto& stage = stages[s];
    // Stage s pairs row s (1-based; row 0 is empty) with row s+1.
    if (s >= 1) append(stage.columns, rows.type_d_parts[s - 1].zero);
    append(stage.columns, rows.type_d_parts[s].one);
    append(stage.columns, rows.type_d_parts[s].two);
    append(stage.rows, rows.type_d_parts[s].two);
    if (s >= 1) {
      append(stage.rows, rows.type_d_parts[s - 1].one);
      append(stage.rows, rows.type_d_parts[s - 1].zero);
    }
  }
  return stages;
}

std::vector<int> row_dimension_profile(const WeylElement& w, const HessenbergSpace& space,
                                       const RowDecomposition& rows) {
  require_nonempty(w, space);
  const auto& rs = space.root_system();
  const auto inv = inverse_permutation(w);
  auto in_inversions = [&](RootIndex a) { return !rs.is_positive(inv[a]); };
  auto in_w_phi_h = [&](RootIndex a) { return space.contains(inv[a]); };

  std::vector<int> profile(rows.size(), 0);
  if (rs.type() != LieType::D) {
    for (int i = 0; i < rows.size(); ++i)
      profile[i] = static_cast<int>(std::count_if(rows.rows[i].begin(), rows.rows[i].end(),
                                                  [&](RootIndex a) { return in_inversions(a) && in_w_phi_h(a); }));
    return profile;
  }
  const auto stages = type_d_stages(rows);
  for (std::size_t s = 0; s < stages.size(); ++s) {
    const auto& st = stages[s];
    const auto cols = std::count_if(st.columns.begin(), st.columns.end(), in_inversions);
    const auto constrained =
        std::count_if(st.rows.begin(), st.rows.end(), [&](RootIndex a) { return !in_w_phi_h(a); });
    profile[s] = static_cast<int>(cols - constrained);
  }
  return profile;
}

std::vector<int> row_dimension_profile(const WeylElement& w, const HessenbergSpace& space) {
  return row_dimension_profile(w, space, rows(space.root_system()));
}

std::vector<PavingCell> compute_paving(const std::vector<WeylElement>& elements, const HessenbergSpace& space,
                                       const RowDecomposition& rows) {
  std::vector<PavingCell> cells;
  cells.reserve(elements.size());
  for (const auto& w : elements) {
    PavingCell cell{w, cell_nonempty(w, space), std::nullopt, {}};
    if (cell.nonempty) {
      cell.dim = cell_dimension(w, space);
      cell.row_profile = row_dimension_profile(w, space, rows);
    }
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::vector<PavingCell> compute_paving(const RootSystemPtr& rs, const HessenbergSpace& space) {
  return compute_paving(enumerate_weyl(rs), space, rows(*rs));
}

BettiTable betti_from_cells(const std::vector<PavingCell>& cells) {
  BettiTable table;
  for (const auto& cell : cells) {
    if (!cell.nonempty) continue;
    const auto k = static_cast<std::size_t>(*cell.dim);
    if (table.coefficients.size() <= k) table.coefficients.resize(k + 1, 0);
    ++table.coefficients[k];
  }
  return table;
}

BettiTable poincare_polynomial(const RootSystemPtr& rs, const HessenbergSpace& space) {
  return betti_from_cells(compute_paving(rs, space));
}

}  // namespace hessenpave
