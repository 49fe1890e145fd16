#include "hessenpave/hessenberg.hpp"

#include <algorithm>

namespace hessenpave {

namespace {

std::string root_text(const RootSystem& rs, RootIndex a) {
  std::string out;
  const auto& c = rs.root(a).coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out;
}

std::vector<char> membership(const RootSystem& rs, std::span<const RootIndex> negatives) {
  std::vector<char> member(rs.num_roots(), 0);
  for (RootIndex a = 0; a < rs.num_positive(); ++a) member[a] = 1;
  for (RootIndex b : negatives) {
    if (b < 0 || b >= rs.num_roots() || rs.is_positive(b))
      throw ValidationError("Hessenberg negative part must consist of negative roots");
    member[b] = 1;
  }
  return member;
}

}  // namespace

HessenbergSpace make_hessenberg_unchecked(RootSystemPtr rs, std::span<const RootIndex> negatives) {
  auto member = membership(*rs, negatives);
  return HessenbergSpace(std::move(rs), std::move(member));
}

std::vector<RootIndex> HessenbergSpace::negative_part() const {
  std::vector<RootIndex> out;
  for (RootIndex b = rs_->num_positive(); b < rs_->num_roots(); ++b)
    if (member_[b]) out.push_back(b);
  return out;
}

int HessenbergSpace::negative_count() const {
  return static_cast<int>(std::count(member_.begin() + rs_->num_positive(), member_.end(), 1));
}

bool HessenbergSpace::is_contained_in(const HessenbergSpace& other) const {
  for (std::size_t a = 0; a < member_.size(); ++a)
    if (member_[a] && !other.member_[a]) return false;
  return true;
}

HessenbergSpace from_negative_roots(const RootSystemPtr& rs, std::span<const RootIndex> negatives) {
  auto space = make_hessenberg_unchecked(rs, negatives);
  for (RootIndex b : negatives)
    for (int i = 0; i < rs->rank(); ++i) {
      RootIndex up = rs->sum(b, rs->simple(i));
      if (up != kNoRoot && !space.contains(up))
        throw ClosureViolation("not a Hessenberg space: " + root_text(*rs, b) + " is in Phi_H but adding alpha_" +
                                   std::to_string(i + 1) + " gives " + root_text(*rs, up) + ", which is not",
                               b, i);
    }
  return space;
}

HessenbergSpace from_negative_roots(const RootSystemPtr& rs, const std::vector<Root>& negatives) {
  std::vector<RootIndex> indices;
  indices.reserve(negatives.size());
  for (const auto& r : negatives) indices.push_back(rs->index_of(r));
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return from_negative_roots(rs, indices);
}

bool is_hessenberg_function(std::span<const int> h) {
  const int n = static_cast<int>(h.size());
  for (int i = 0; i < n; ++i) {
    if (h[i] < i + 1 || h[i] > n) return false;
    if (i > 0 && h[i] < h[i - 1]) return false;
  }
  return true;
}

HessenbergSpace from_function(int n, std::span<const int> h) {
  if (n < 2) throw ValidationError("Hessenberg functions need n >= 2");
  if (static_cast<int>(h.size()) != n)
    throw ValidationError("Hessenberg function has " + std::to_string(h.size()) + " values, expected " +
                          std::to_string(n));
  if (!is_hessenberg_function(h))
    throw ValidationError("not a Hessenberg function: values must be nondecreasing with i <= h(i) <= n");
  auto rs = build_root_system(LieType::A, n - 1);
  std::vector<RootIndex> negatives;
  // Matrix position (i, j), i > j, carries eps_i - eps_j = -(alpha_j + ... + alpha_{i-1}).
  for (int j = 1; j <= n; ++j)
    for (int i = j + 1; i <= h[j - 1]; ++i) {
      std::vector<int> c(n - 1, 0);
      for (int k = j; k <= i - 1; ++k) c[k - 1] = -1;
      negatives.push_back(*rs->find(c));
    }
  std::sort(negatives.begin(), negatives.end());
  return from_negative_roots(rs, negatives);
}

std::vector<int> to_function(const HessenbergSpace& space) {
  const auto& rs = space.root_system();
  if (rs.type() != LieType::A) throw ValidationError("Hessenberg functions exist only in type A");
  const int n = rs.rank() + 1;
  std::vector<int> h(n);
  for (int j = 1; j <= n; ++j) {
    int value = j;
    for (int i = j + 1; i <= n; ++i) {
      std::vector<int> c(n - 1, 0);
      for (int k = j; k <= i - 1; ++k) c[k - 1] = -1;
      if (space.contains(*rs.find(c))) value = i;
    }
    h[j - 1] = value;
  }
  return h;
}

std::vector<HessenbergSpace> enumerate_hessenberg(const RootSystemPtr& rs) {
  // Negative roots from -simple downward; including beta requires every
  // beta + alpha_i that is still negative to be included already.
  std::vector<RootIndex> order;
  for (RootIndex a = 0; a < rs->num_positive(); ++a) order.push_back(rs->negate(a));

  std::vector<std::vector<RootIndex>> found;
  std::vector<char> chosen(rs->num_roots(), 0);
  std::vector<RootIndex> current;
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      found.push_back(current);
      return;
    }
    const RootIndex beta = order[pos];
    self(self, pos + 1);
    for (int i = 0; i < rs->rank(); ++i) {
      RootIndex up = rs->sum(beta, rs->simple(i));
      if (up != kNoRoot && !rs->is_positive(up) && !chosen[up]) return;
    }
    chosen[beta] = 1;
    current.push_back(beta);
    self(self, pos + 1);
    current.pop_back();
    chosen[beta] = 0;
  };
  recurse(recurse, 0);

  for (auto& negatives : found) std::sort(negatives.begin(), negatives.end());
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<HessenbergSpace> out;
  out.reserve(found.size());
  for (const auto& negatives : found) out.push_back(from_negative_roots(rs, negatives));
  return out;
}

HessenbergSpace borel_space(const RootSystemPtr& rs) { return from_negative_roots(rs, std::span<const RootIndex>{}); }

HessenbergSpace full_space(const RootSystemPtr& rs) {
  std::vector<RootIndex> all;
  for (RootIndex b = rs->num_positive(); b < rs->num_roots(); ++b) all.push_back(b);
  return from_negative_roots(rs, all);
}

HessenbergSpace peterson_space(const RootSystemPtr& rs) {
  std::vector<RootIndex> simples;
  for (int i = 0; i < rs->rank(); ++i) simples.push_back(rs->negate(rs->simple(i)));
  std::sort(simples.begin(), simples.end());
  return from_negative_roots(rs, simples);
}

ComplementIdeal complement_ideal(const HessenbergSpace& space) {
  const auto& rs = space.root_system();
  ComplementIdeal out;
  for (RootIndex b = rs.num_positive(); b < rs.num_roots(); ++b)
    if (!space.contains(b)) out.roots.push_back(b);
  return out;
}

bool closed_under_positive_roots(const HessenbergSpace& space) {
  const auto& rs = space.root_system();
  for (RootIndex b = 0; b < rs.num_roots(); ++b) {
    if (!space.contains(b)) continue;
    for (RootIndex a = 0; a < rs.num_positive(); ++a) {
      RootIndex s = rs.sum(b, a);
      if (s != kNoRoot && !space.contains(s)) return false;
    }
  }
  return true;
}

}  // namespace hessenpave
