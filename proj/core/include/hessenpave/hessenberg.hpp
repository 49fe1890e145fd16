#pragma once

#include <span>
#include <vector>

#include "hessenpave/error.hpp"
#include "hessenpave/root_system.hpp"

namespace hessenpave {

/// A Hessenberg space H, i.e. b plus a set of negative root spaces closed
/// under bracketing with b. Only the negative part of Phi_H is stored;
/// Phi+ is always contained in Phi_H.
class HessenbergSpace {
 public:
  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }

  /// Membership of any root (positive or negative) in Phi_H.
  bool contains(RootIndex a) const { return member_[a] != 0; }
  /// Phi_H ∩ Phi-, ordered by the positive-root order of the negatives.
  std::vector<RootIndex> negative_part() const;
  int negative_count() const;

  /// Phi_H ⊆ Phi_H' as root sets.
  bool is_contained_in(const HessenbergSpace& other) const;

  friend bool operator==(const HessenbergSpace& a, const HessenbergSpace& b) {
    return a.rs_->name() == b.rs_->name() && a.member_ == b.member_;
  }

 private:
  friend HessenbergSpace make_hessenberg_unchecked(RootSystemPtr rs, std::span<const RootIndex> negatives);
  HessenbergSpace(RootSystemPtr rs, std::vector<char> member)
      : rs_(std::move(rs)), member_(std::move(member)) {}

  RootSystemPtr rs_;
  std::vector<char> member_;
};

/// Raised when a proposed negative part is not closed under adding simple roots.
class ClosureViolation : public ValidationError {
 public:
  ClosureViolation(const std::string& what, RootIndex beta, int simple_index)
      : ValidationError(what), beta_(beta), simple_index_(simple_index) {}
  RootIndex beta() const { return beta_; }
  int simple_index() const { return simple_index_; }

 private:
  RootIndex beta_;
  int simple_index_;
};

/// Phi_H^c = Phi- minus the negative part of Phi_H.
struct ComplementIdeal {
  std::vector<RootIndex> roots;
};

HessenbergSpace from_negative_roots(const RootSystemPtr& rs, std::span<const RootIndex> negatives);
HessenbergSpace from_negative_roots(const RootSystemPtr& rs, const std::vector<Root>& negatives);

/// Type A_{n-1} space for a Hessenberg function h: {1..n} -> {1..n}
/// (1-based values): eps_i - eps_j with i > j lies in Phi_H iff i <= h(j).
HessenbergSpace from_function(int n, std::span<const int> h);
/// Reads the Hessenberg function back from a type-A space.
std::vector<int> to_function(const HessenbergSpace& space);
/// Checks h(i) >= i, nondecreasing, h(i) <= n.
bool is_hessenberg_function(std::span<const int> h);

/// Every Hessenberg space of rs, ordered by |negative part| and then
/// lexicographically on the negative part.
std::vector<HessenbergSpace> enumerate_hessenberg(const RootSystemPtr& rs);

HessenbergSpace borel_space(const RootSystemPtr& rs);
HessenbergSpace full_space(const RootSystemPtr& rs);
/// b plus the negative simple root spaces.
HessenbergSpace peterson_space(const RootSystemPtr& rs);

ComplementIdeal complement_ideal(const HessenbergSpace& space);

/// Closure against all positive roots (not only simple ones); test-time
/// cross-check of the constructor's simple-root test.
bool closed_under_positive_roots(const HessenbergSpace& space);

}  // namespace hessenpave
