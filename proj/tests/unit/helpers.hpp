#pragma once

#include <set>
#include <vector>

#include "hessenpave/root_system.hpp"
#include "hessenpave/weyl_group.hpp"

namespace hessenpave::testing {

inline RootIndex idx(const RootSystem& rs, std::vector<int> coeffs) {
  auto found = rs.find(coeffs);
  if (!found) throw std::runtime_error("test asked for a non-root");
  return *found;
}

inline std::set<std::vector<int>> coeff_set(const RootSystem& rs, const std::vector<RootIndex>& roots) {
  std::set<std::vector<int>> out;
  for (RootIndex a : roots) out.insert(rs.root(a).coeffs());
  return out;
}

struct TypeRank {
  LieType type;
  int rank;
};

/// Every classical system with rank in [1, max_rank] that the library accepts.
inline std::vector<TypeRank> systems_up_to(int max_rank) {
  std::vector<TypeRank> out;
  for (int n = 1; n <= max_rank; ++n) {
    out.push_back({LieType::A, n});
    if (n >= 2) out.push_back({LieType::B, n});
    if (n >= 2) out.push_back({LieType::C, n});
    if (n >= 3) out.push_back({LieType::D, n});
  }
  return out;
}

/// w = s_{word[0]} s_{word[1]} ... with 1-based letters.
inline WeylElement word1(const RootSystemPtr& rs, std::vector<int> letters) {
  for (int& i : letters) --i;
  return from_word(rs, letters);
}

}  // namespace hessenpave::testing
