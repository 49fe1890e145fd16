#pragma once

#include <span>
#include <vector>

#include "hessenpave/root_system.hpp"

namespace hessenpave {

/// Element of the Weyl group, stored as the permutation it induces on the
/// roots together with its lexicographically least reduced word.
class WeylElement {
 public:
  static WeylElement identity(RootSystemPtr rs);
  /// Builds w from its root permutation; the reduced word is recomputed.
  static WeylElement from_root_permutation(RootSystemPtr rs, std::vector<RootIndex> perm);

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }

  /// Simple reflection indices, 0-based, w = s_{word[0]} s_{word[1]} ...
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }

  RootIndex apply(RootIndex a) const { return perm_[a]; }
  Root apply(const Root& root) const;
  std::span<const RootIndex> root_permutation() const { return perm_; }

  /// n x n integer matrix whose column j holds the coefficients of w(alpha_j).
  IntMatrix matrix() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.rs_ == b.rs_ && a.perm_ == b.perm_;
  }

 private:
  WeylElement(RootSystemPtr rs, std::vector<RootIndex> perm);

  RootSystemPtr rs_;
  std::vector<RootIndex> perm_;
  std::vector<int> word_;
};

WeylElement simple_reflection(const RootSystemPtr& rs, int i);
WeylElement from_word(const RootSystemPtr& rs, std::span<const int> word);
WeylElement compose(const WeylElement& w1, const WeylElement& w2);
WeylElement inverse(const WeylElement& w);

/// Applies w through its integer matrix rather than the cached permutation.
Root apply_by_matrix(const WeylElement& w, const Root& root);

/// All elements, ordered by length and then lexicographically by reduced word.
std::vector<WeylElement> enumerate_weyl(const RootSystemPtr& rs);

/// Phi_w = { alpha > 0 : w^{-1} alpha < 0 }, in positive-root order.
std::vector<RootIndex> inversion_set(const WeylElement& w);

/// |W| for the type and rank.
long long weyl_group_order(LieType type, int rank);

}  // namespace hessenpave
