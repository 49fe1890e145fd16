#include "hessenpave/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hessenpave/error.hpp"

namespace hessenpave {

namespace {

int min_rank(LieType type) {
  switch (type) {
    case LieType::A: return 1;
    case LieType::B:
    case LieType::C: return 2;
    case LieType::D: return 3;
  }
  return 1;
}

IntMatrix simple_roots_in_eps(LieType type, int n) {
  const int dim = type == LieType::A ? n + 1 : n;
  IntMatrix simple(n, std::vector<int>(dim, 0));
  for (int i = 0; i + 1 < n; ++i) {
    simple[i][i] = 1;
    simple[i][i + 1] = -1;
  }
  auto& last = simple[n - 1];
  switch (type) {
    case LieType::A:
      last[n - 1] = 1;
      last[n] = -1;
      break;
    case LieType::B:
      last[n - 1] = 1;
      break;
    case LieType::C:
      last[n - 1] = 2;
      break;
    case LieType::D:
      last[n - 2] = 1;
      last[n - 1] = 1;
      break;
  }
  return simple;
}

int dot(const std::vector<int>& a, const std::vector<int>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

}  // namespace

char lie_type_letter(LieType type) {
  switch (type) {
    case LieType::A: return 'A';
    case LieType::B: return 'B';
    case LieType::C: return 'C';
    case LieType::D: return 'D';
  }
  return '?';
}

LieType parse_lie_type(std::string_view text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'A': case 'a': return LieType::A;
      case 'B': case 'b': return LieType::B;
      case 'C': case 'c': return LieType::C;
      case 'D': case 'd': return LieType::D;
      default: break;
    }
  }
  throw ValidationError("unknown Lie type '" + std::string(text) + "' (expected A, B, C or D)");
}

int Root::height() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

bool Root::is_positive() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c >= 0; });
}

int positive_root_count(LieType type, int rank) {
  switch (type) {
    case LieType::A: return rank * (rank + 1) / 2;
    case LieType::B:
    case LieType::C: return rank * rank;
    case LieType::D: return rank * (rank - 1);
  }
  return 0;
}

RootSystem::RootSystem(LieType type, int rank) : type_(type), rank_(rank) {
  const int n = rank;
  simple_eps_ = simple_roots_in_eps(type, n);
  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cartan_[i][j] = 2 * dot(simple_eps_[i], simple_eps_[j]) / dot(simple_eps_[j], simple_eps_[j]);

  // Close the simple roots under the simple reflections.
  auto reflect_coeffs = [&](int j, const std::vector<int>& beta) {
    int pairing = 0;
    for (int i = 0; i < n; ++i) pairing += beta[i] * cartan_[i][j];
    std::vector<int> out = beta;
    out[j] -= pairing;
    return out;
  };
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    found.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier)
      for (int j = 0; j < n; ++j) {
        auto image = reflect_coeffs(j, beta);
        if (found.insert(image).second) next.push_back(std::move(image));
      }
    frontier = std::move(next);
  }

  std::vector<std::vector<int>> positives;
  for (const auto& c : found)
    if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) positives.push_back(c);
  // Height ascending, then lexicographically descending, so alpha_1 precedes alpha_2.
  std::sort(positives.begin(), positives.end(), [](const auto& a, const auto& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  if (2 * positives.size() != found.size())
    throw ConsistencyError("root closure is not symmetric under negation");

  num_positive_ = static_cast<int>(positives.size());
  for (const auto& c : positives) roots_.push_back(Root(c));
  for (const auto& c : positives) {
    std::vector<int> neg(c.size());
    std::transform(c.begin(), c.end(), neg.begin(), [](int x) { return -x; });
    roots_.push_back(Root(std::move(neg)));
  }
  for (RootIndex a = 0; a < num_roots(); ++a) {
    lookup_.emplace(roots_[a].coeffs(), a);
    heights_.push_back(roots_[a].height());
  }
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    simple_.push_back(lookup_.at(e));
  }

  const std::size_t count = roots_.size();
  sum_table_.assign(count * count, kNoRoot);
  std::vector<int> s(n);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      for (int i = 0; i < n; ++i) s[i] = roots_[a].coeffs()[i] + roots_[b].coeffs()[i];
      if (auto it = lookup_.find(s); it != lookup_.end()) sum_table_[a * count + b] = it->second;
    }

  reflections_.assign(n, std::vector<RootIndex>(count));
  for (int j = 0; j < n; ++j)
    for (std::size_t a = 0; a < count; ++a)
      reflections_[j][a] = lookup_.at(reflect_coeffs(j, roots_[a].coeffs()));
}

std::shared_ptr<const RootSystem> RootSystem::build(LieType type, int rank) {
  if (rank < min_rank(type))
    throw ValidationError(std::string("rank ") + std::to_string(rank) + " is out of range for type " +
                          lie_type_letter(type) + " (minimum " + std::to_string(min_rank(type)) + ")");
  if (rank > 8) throw ValidationError("rank " + std::to_string(rank) + " exceeds the supported maximum of 8");
  return std::shared_ptr<const RootSystem>(new RootSystem(type, rank));
}

std::string RootSystem::name() const { return lie_type_letter(type_) + std::to_string(rank_); }

std::optional<RootIndex> RootSystem::find(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) != rank_) return std::nullopt;
  auto it = lookup_.find(std::vector<int>(coeffs.begin(), coeffs.end()));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

RootIndex RootSystem::index_of(const Root& root) const {
  auto index = find(root.coeffs());
  if (!index) throw ValidationError("root does not belong to " + name());
  return *index;
}

Root RootSystem::make_root(std::vector<int> coeffs) const {
  if (!find(coeffs)) {
    std::string text;
    for (std::size_t i = 0; i < coeffs.size(); ++i) text += (i ? "," : "") + std::to_string(coeffs[i]);
    throw ValidationError("(" + text + ") is not a root of " + name());
  }
  return Root(std::move(coeffs));
}

std::vector<int> RootSystem::eps_coords(RootIndex a) const {
  std::vector<int> out(simple_eps_.front().size(), 0);
  for (int i = 0; i < rank_; ++i)
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += roots_[a].coeffs()[i] * simple_eps_[i][k];
  return out;
}

bool RootSystem::dominance_leq(RootIndex beta, RootIndex alpha) const {
  const auto& b = roots_[beta].coeffs();
  const auto& a = roots_[alpha].coeffs();
  for (int i = 0; i < rank_; ++i)
    if (a[i] < b[i]) return false;
  return true;
}

bool dominance_leq(const RootSystem& rs, const Root& beta, const Root& alpha) {
  return rs.dominance_leq(rs.index_of(beta), rs.index_of(alpha));
}

}  // namespace hessenpave
