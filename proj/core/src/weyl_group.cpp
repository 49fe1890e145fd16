#include "hessenpave/weyl_group.hpp"

#include <algorithm>
#include <set>

#include "hessenpave/error.hpp"

namespace hessenpave {

namespace {

std::vector<RootIndex> invert_permutation(std::span<const RootIndex> perm) {
  std::vector<RootIndex> inv(perm.size());
  for (std::size_t a = 0; a < perm.size(); ++a) inv[perm[a]] = static_cast<RootIndex>(a);
  return inv;
}

// Greedy left descent: strip the smallest s_i with w^{-1} alpha_i < 0 until
// the identity is reached. The result is the lex-least reduced word.
std::vector<int> reduced_word(const RootSystem& rs, std::vector<RootIndex> perm) {
  std::vector<int> word;
  auto inv = invert_permutation(perm);
  for (;;) {
    int descent = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (!rs.is_positive(inv[rs.simple(i)])) {
        descent = i;
        break;
      }
    if (descent < 0) break;
    word.push_back(descent);
    // w <- s_i w, so w^{-1} <- w^{-1} s_i.
    std::vector<RootIndex> next(inv.size());
    for (std::size_t a = 0; a < inv.size(); ++a) next[a] = inv[rs.reflect(descent, static_cast<RootIndex>(a))];
    inv = std::move(next);
  }
  return word;
}

void require_same_system(const WeylElement& a, const WeylElement& b) {
  if (a.root_system_ptr() != b.root_system_ptr() &&
      a.root_system().name() != b.root_system().name())
    throw ValidationError("Weyl elements belong to different root systems (" + a.root_system().name() +
                          " vs " + b.root_system().name() + ")");
}

}  // namespace

WeylElement::WeylElement(RootSystemPtr rs, std::vector<RootIndex> perm)
    : rs_(std::move(rs)), perm_(std::move(perm)) {
  word_ = reduced_word(*rs_, perm_);
}

WeylElement WeylElement::identity(RootSystemPtr rs) {
  std::vector<RootIndex> perm(rs->num_roots());
  for (RootIndex a = 0; a < rs->num_roots(); ++a) perm[a] = a;
  return WeylElement(std::move(rs), std::move(perm));
}

WeylElement WeylElement::from_root_permutation(RootSystemPtr rs, std::vector<RootIndex> perm) {
  if (static_cast<int>(perm.size()) != rs->num_roots())
    throw ValidationError("root permutation has the wrong size");
  return WeylElement(std::move(rs), std::move(perm));
}

Root WeylElement::apply(const Root& root) const { return rs_->root(perm_[rs_->index_of(root)]); }

IntMatrix WeylElement::matrix() const {
  const int n = rs_->rank();
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j) {
    const auto& image = rs_->root(perm_[rs_->simple(j)]).coeffs();
    for (int i = 0; i < n; ++i) m[i][j] = image[i];
  }
  return m;
}

WeylElement simple_reflection(const RootSystemPtr& rs, int i) {
  if (i < 0 || i >= rs->rank())
    throw ValidationError("simple reflection index " + std::to_string(i + 1) + " is out of range for " +
                          rs->name());
  std::vector<RootIndex> perm(rs->num_roots());
  for (RootIndex a = 0; a < rs->num_roots(); ++a) perm[a] = rs->reflect(i, a);
  return WeylElement::from_root_permutation(rs, std::move(perm));
}

WeylElement from_word(const RootSystemPtr& rs, std::span<const int> word) {
  std::vector<RootIndex> perm(rs->num_roots());
  for (RootIndex a = 0; a < rs->num_roots(); ++a) perm[a] = a;
  for (int i : word) {
    if (i < 0 || i >= rs->rank())
      throw ValidationError("simple reflection index " + std::to_string(i + 1) + " is out of range for " +
                            rs->name());
    // perm <- perm o s_i
    std::vector<RootIndex> next(perm.size());
    for (RootIndex a = 0; a < rs->num_roots(); ++a) next[a] = perm[rs->reflect(i, a)];
    perm = std::move(next);
  }
  return WeylElement::from_root_permutation(rs, std::move(perm));
}

WeylElement compose(const WeylElement& w1, const WeylElement& w2) {
  require_same_system(w1, w2);
  std::vector<RootIndex> perm(w1.root_permutation().size());
  for (std::size_t a = 0; a < perm.size(); ++a) perm[a] = w1.apply(w2.apply(static_cast<RootIndex>(a)));
  return WeylElement::from_root_permutation(w1.root_system_ptr(), std::move(perm));
}

WeylElement inverse(const WeylElement& w) {
  return WeylElement::from_root_permutation(w.root_system_ptr(), invert_permutation(w.root_permutation()));
}

Root apply_by_matrix(const WeylElement& w, const Root& root) {
  const auto m = w.matrix();
  const int n = static_cast<int>(m.size());
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i][j] * root.coeffs()[j];
  return w.root_system().make_root(std::move(out));
}

std::vector<WeylElement> enumerate_weyl(const RootSystemPtr& rs) {
  std::set<std::vector<RootIndex>> seen;
  std::vector<std::vector<RootIndex>> frontier;
  std::vector<RootIndex> id(rs->num_roots());
  for (RootIndex a = 0; a < rs->num_roots(); ++a) id[a] = a;
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<std::vector<RootIndex>> next;
    for (const auto& perm : frontier)
      for (int i = 0; i < rs->rank(); ++i) {
        std::vector<RootIndex> left(perm.size());
        for (std::size_t a = 0; a < perm.size(); ++a) left[a] = rs->reflect(i, perm[a]);
        if (seen.insert(left).second) next.push_back(std::move(left));
      }
    frontier = std::move(next);
  }
  std::vector<WeylElement> elements;
  elements.reserve(seen.size());
  for (const auto& perm : seen) elements.push_back(WeylElement::from_root_permutation(rs, perm));
  std::sort(elements.begin(), elements.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word() < b.word();
  });
  return elements;
}

std::vector<RootIndex> inversion_set(const WeylElement& w) {
  const auto& rs = w.root_system();
  auto inv = invert_permutation(w.root_permutation());
  std::vector<RootIndex> out;
  for (RootIndex a = 0; a < rs.num_positive(); ++a)
    if (!rs.is_positive(inv[a])) out.push_back(a);
  return out;
}

long long weyl_group_order(LieType type, int rank) {
  long long fact = 1;
  for (int k = 2; k <= rank; ++k) fact *= k;
  switch (type) {
    case LieType::A: return fact * (rank + 1);
    case LieType::B:
    case LieType::C: return fact << rank;
    case LieType::D: return fact << (rank - 1);
  }
  return 0;
}

}  // namespace hessenpave
