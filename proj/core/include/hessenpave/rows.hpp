#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hessenpave/root_system.hpp"

namespace hessenpave {

/// Type-D split of a row by how many of alpha_{n-1}, alpha_n are summands.
struct TypeDParts {
  std::vector<RootIndex> zero;
  std::vector<RootIndex> one;
  std::vector<RootIndex> two;
};

/// Partition of Phi+ into rows. rows[i] holds row i+1 (1-based numbering) in
/// positive-root order (height ascending).
struct RowDecomposition {
  std::vector<std::vector<RootIndex>> rows;
  /// Type C only: the long root 2(alpha_i + ... + alpha_{n-1}) + alpha_n of
  /// row i, for i < n-1 (0-based).
  std::vector<std::optional<RootIndex>> type_c_long_roots;
  /// Type D only: one entry per row.
  std::vector<TypeDParts> type_d_parts;
  /// row_of[a] = row containing positive root a.
  std::vector<int> row_of;

  int size() const { return static_cast<int>(rows.size()); }
};

/// Rows {alpha >= alpha_i, alpha not > alpha_j for j < i}: the roots whose
/// first nonzero simple-root coefficient sits at position i.
std::vector<std::vector<RootIndex>> rows_by_definition(const RootSystem& rs);

/// Rows from the closed-form per-type table. In type D the table puts
/// alpha_n into row n-1 and leaves row n empty.
std::vector<std::vector<RootIndex>> rows_by_table(const RootSystem& rs);

/// Builds the decomposition from the closed forms and checks it against the
/// definition; throws ConsistencyError if they disagree.
RowDecomposition rows(const RootSystem& rs);

/// Roots sorted by height from highest to lowest; equal heights are broken
/// lexicographically descending on coefficients (so alpha_{n-1}-variants
/// precede alpha_n-variants in type D).
std::vector<RootIndex> descending_order(const RootSystem& rs, std::span<const RootIndex> roots);

}  // namespace hessenpave
