#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hessenpave {

enum class LieType { A, B, C, D };

char lie_type_letter(LieType type);
LieType parse_lie_type(std::string_view text);

/// Position of a root inside RootSystem::roots(). Positive roots occupy
/// [0, num_positive()), their negatives follow in the same order.
using RootIndex = int;
inline constexpr RootIndex kNoRoot = -1;

class RootSystem;

/// A root, stored by its coefficients over the simple roots.
///
/// Roots are only handed out by a RootSystem, so a Root value is always an
/// actual element of some root system.
class Root {
 public:
  Root() = default;

  const std::vector<int>& coeffs() const { return coeffs_; }
  int rank() const { return static_cast<int>(coeffs_.size()); }
  int height() const;
  bool is_positive() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

 private:
  friend class RootSystem;
  explicit Root(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

  std::vector<int> coeffs_;
};

using IntMatrix = std::vector<std::vector<int>>;

/// Classical root system with simple roots labelled as on the usual Dynkin
/// diagrams: the double edge (B, C) or the fork (D) sits at the high index end.
class RootSystem {
 public:
  /// Valid ranks: A >= 1, B and C >= 2, D >= 3.
  static std::shared_ptr<const RootSystem> build(LieType type, int rank);

  LieType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;

  int num_positive() const { return num_positive_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }

  const Root& root(RootIndex index) const { return roots_.at(index); }
  const std::vector<Root>& roots() const { return roots_; }

  /// Index of the root with these coefficients, if it is a root.
  std::optional<RootIndex> find(std::span<const int> coeffs) const;
  RootIndex index_of(const Root& root) const;
  /// Validating constructor; throws ValidationError if coeffs is not a root.
  Root make_root(std::vector<int> coeffs) const;

  RootIndex simple(int i) const { return simple_.at(i); }
  RootIndex negate(RootIndex a) const {
    return a < num_positive_ ? a + num_positive_ : a - num_positive_;
  }
  /// Index of a + b, or kNoRoot when the sum is not a root.
  RootIndex sum(RootIndex a, RootIndex b) const {
    return sum_table_[static_cast<std::size_t>(a) * roots_.size() + b];
  }
  /// Index of a - b, or kNoRoot.
  RootIndex difference(RootIndex a, RootIndex b) const { return sum(a, negate(b)); }

  bool is_positive(RootIndex a) const { return a < num_positive_; }
  int height(RootIndex a) const { return heights_[a]; }
  int coeff(RootIndex a, int i) const { return roots_[a].coeffs()[i]; }

  /// cartan_matrix()[i][j] = <alpha_i, alpha_j^vee>, so that
  /// s_j(alpha_i) = alpha_i - cartan_matrix()[i][j] alpha_j.
  const IntMatrix& cartan_matrix() const { return cartan_; }

  /// Simple roots in the orthonormal epsilon basis (n+1 coordinates for A_n,
  /// n otherwise). Only the matrix realizations need this.
  const IntMatrix& simple_roots_eps() const { return simple_eps_; }
  std::vector<int> eps_coords(RootIndex a) const;

  /// beta <= alpha: alpha - beta is zero or a nonnegative simple-root combination.
  bool dominance_leq(RootIndex beta, RootIndex alpha) const;

  /// Index of s_i(a) for the simple reflection s_i.
  RootIndex reflect(int i, RootIndex a) const { return reflections_[i][a]; }

 private:
  RootSystem(LieType type, int rank);

  LieType type_;
  int rank_;
  int num_positive_ = 0;
  IntMatrix cartan_;
  IntMatrix simple_eps_;
  std::vector<Root> roots_;
  std::vector<int> heights_;
  std::vector<RootIndex> simple_;
  std::vector<RootIndex> sum_table_;
  std::vector<std::vector<RootIndex>> reflections_;
  std::map<std::vector<int>, RootIndex> lookup_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

inline RootSystemPtr build_root_system(LieType type, int rank) {
  return RootSystem::build(type, rank);
}

bool dominance_leq(const RootSystem& rs, const Root& beta, const Root& alpha);

/// Expected |Phi+| for the type and rank.
int positive_root_count(LieType type, int rank);

}  // namespace hessenpave
