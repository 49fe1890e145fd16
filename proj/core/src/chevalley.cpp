#include "hessenpave/chevalley.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "hessenpave/error.hpp"

namespace hessenpave {

namespace {

using Sparse = std::map<std::pair<int, int>, long>;

Sparse to_sparse(const QMatrix& m) {
  Sparse out;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) out[{r, c}] = m(r, c).get_num().get_si();
  return out;
}

Sparse sparse_commutator(const Sparse& a, const Sparse& b) {
  Sparse out;
  auto accumulate = [&out](const Sparse& x, const Sparse& y, long sign) {
    for (const auto& [xi, xv] : x)
      for (const auto& [yi, yv] : y)
        if (xi.second == yi.first) out[{xi.first, yi.second}] += sign * xv * yv;
  };
  accumulate(a, b, 1);
  accumulate(b, a, -1);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string root_label(const RootSystem& rs, RootIndex a) {
  std::ostringstream out;
  out << "(";
  const auto& c = rs.root(a).coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
  return out.str() + ")";
}

int dim_rep_of(const RootSystem& rs) {
  switch (rs.type()) {
    case LieType::A: return rs.rank() + 1;
    case LieType::B: return 2 * rs.rank() + 1;
    default: return 2 * rs.rank();
  }
}

// Weight of the standard basis vector at position p, in epsilon coordinates.
std::vector<int> position_weight(const RootSystem& rs, int p) {
  const int n = rs.rank();
  if (rs.type() == LieType::A) {
    std::vector<int> w(n + 1, 0);
    w[p] = 1;
    return w;
  }
  const int size = dim_rep_of(rs);
  std::vector<int> w(n, 0);
  if (p < n) w[p] = 1;
  else if (size - 1 - p < n) w[size - 1 - p] = -1;
  return w;
}

QMatrix unit(int size, int r, int c) {
  QMatrix m(size, size);
  m(r, c) = 1;
  return m;
}

std::pair<int, int> first_nonzero(const QMatrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) return {r, c};
  throw ConsistencyError("root vector is zero");
}

// Divides by the gcd of the entries and makes the first nonzero entry positive.
void normalize_integer(QMatrix& m) {
  mpz_class g = 0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      if (m(r, c).get_den() != 1) throw ConsistencyError("root vector with non-integer entry");
      g = gcd(g, m(r, c).get_num());
    }
  auto [pr, pc] = first_nonzero(m);
  Rational scale(1, 1);
  scale /= Rational(g);
  if (sgn(m(pr, pc)) < 0) scale = -scale;
  m *= scale;
}

// Solves A x = b over GF(2); nullopt if inconsistent. Free variables are 0.
std::optional<std::vector<int>> solve_gf2(std::vector<std::vector<int>> a, std::vector<int> b, int vars) {
  std::vector<int> pivot_cols;
  std::size_t row = 0;
  for (int col = 0; col < vars && row < a.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[row]);
    std::swap(b[pivot], b[row]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      for (int c = 0; c < vars; ++c) a[r][c] ^= a[row][c];
      b[r] ^= b[row];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < a.size(); ++r)
    if (b[r] != 0) return std::nullopt;
  std::vector<int> x(vars, 0);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = b[k];
  return x;
}

}  // namespace

QMatrix invariant_form(const RootSystem& rs) {
  const int size = dim_rep_of(rs);
  if (rs.type() == LieType::A) return QMatrix::identity(size);
  QMatrix j(size, size);
  for (int p = 0; p < size; ++p) {
    const int q = size - 1 - p;
    j(p, q) = (rs.type() == LieType::C && p >= size / 2) ? -1 : 1;
  }
  return j;
}

ChevalleyRealization::ChevalleyRealization(RootSystemPtr rs, std::vector<QMatrix> root_vectors)
    : rs_(std::move(rs)), dim_rep_(dim_rep_of(*rs_)), root_vectors_(std::move(root_vectors)) {
  const RootSystem& r = *rs_;
  const int count = r.num_roots();
  if (static_cast<int>(root_vectors_.size()) != count) throw ConsistencyError("one root vector per root required");

  const QMatrix form = invariant_form(r);
  std::vector<Sparse> sparse(count);
  for (RootIndex a = 0; a < count; ++a) {
    const QMatrix& e = root_vectors_[a];
    if (e.rows() != dim_rep_ || e.cols() != dim_rep_) throw ConsistencyError("root vector has the wrong size");
    if (r.type() != LieType::A && !(e.transpose() * form + form * e).is_zero())
      throw ConsistencyError("root vector " + root_label(r, a) + " does not preserve the form");
    if (r.is_positive(a) && !e.is_strictly_upper_triangular())
      throw ConsistencyError("positive root vector " + root_label(r, a) + " is not strictly upper triangular");
    sparse[a] = to_sparse(e);
    pivots_.push_back(first_nonzero(e));
  }

  for (int i = 0; i < r.rank(); ++i)
    cartan_basis_.push_back(commutator(root_vectors_[r.simple(i)], root_vectors_[r.negate(r.simple(i))]));

  constants_ = StructureConstantTable(count);
  for (RootIndex a = 0; a < count; ++a) {
    for (RootIndex b = 0; b < count; ++b) {
      const Sparse br = sparse_commutator(sparse[a], sparse[b]);
      const RootIndex c = r.sum(a, b);
      const std::string where = "[E" + root_label(r, a) + ", E" + root_label(r, b) + "]";
      if (c == kNoRoot) {
        if (b == r.negate(a)) {
          if (br.empty() || std::any_of(br.begin(), br.end(), [](const auto& kv) { return kv.first.first != kv.first.second; }))
            throw ConsistencyError(where + " is not a nonzero Cartan element");
        } else if (!br.empty()) {
          throw ConsistencyError(where + " should vanish");
        }
        continue;
      }
      const auto [pr, pc] = pivots_[c];
      const long pivot = sparse[c].at({pr, pc});
      const auto it = br.find({pr, pc});
      if (it == br.end() || it->second % pivot != 0)
        throw ConsistencyError(where + " is not a nonzero integer multiple of E" + root_label(r, c));
      const long m = it->second / pivot;
      Sparse expected;
      for (const auto& [pos, v] : sparse[c]) expected[pos] = m * v;
      if (br != expected) throw ConsistencyError(where + " is not proportional to E" + root_label(r, c));
      constants_.at(a, b) = static_cast<int>(m);
    }
  }
  for (RootIndex a = 0; a < count; ++a)
    for (RootIndex b = 0; b < count; ++b)
      if (constants_(a, b) != -constants_(b, a)) throw ConsistencyError("structure constants are not antisymmetric");

  for (RootIndex a = 0; a < r.num_positive(); ++a)
    for (RootIndex b = 0; b < r.num_positive(); ++b)
      if (constants_(a, b) != 0) positive_terms_.push_back({a, b, r.sum(a, b), constants_(a, b)});
}

Expansion ChevalleyRealization::expand(const QMatrix& m) const {
  if (m.rows() != dim_rep_ || m.cols() != dim_rep_) throw ValidationError("expand: matrix has the wrong size");
  Expansion out;
  out.coeffs.assign(rs_->num_roots(), Rational(0));
  QMatrix residual = m;
  for (RootIndex a = 0; a < rs_->num_roots(); ++a) {
    const auto [pr, pc] = pivots_[a];
    if (sgn(m(pr, pc)) == 0) continue;
    const QMatrix& e = root_vectors_[a];
    out.coeffs[a] = m(pr, pc) / e(pr, pc);
    for (int r = 0; r < dim_rep_; ++r)
      for (int c = 0; c < dim_rep_; ++c)
        if (sgn(e(r, c)) != 0) residual(r, c) -= out.coeffs[a] * e(r, c);
  }
  if (!residual.is_diagonal()) throw ValidationError("matrix is not expressible in the root-vector basis plus Cartan");
  out.cartan_part = std::move(residual);
  return out;
}

QMatrix ChevalleyRealization::from_positive(const std::vector<Rational>& coeffs) const {
  QMatrix out(dim_rep_, dim_rep_);
  for (RootIndex a = 0; a < rs_->num_positive() && a < static_cast<int>(coeffs.size()); ++a) {
    if (sgn(coeffs[a]) == 0) continue;
    const QMatrix& e = root_vectors_[a];
    for (int r = 0; r < dim_rep_; ++r)
      for (int c = r + 1; c < dim_rep_; ++c)
        if (sgn(e(r, c)) != 0) out(r, c) += coeffs[a] * e(r, c);
  }
  return out;
}

ChevalleyRealization build_chevalley(RootSystemPtr rs) {
  const RootSystem& r = *rs;
  const int size = dim_rep_of(r);
  const QMatrix form = invariant_form(r);
  const QMatrix form_t = form.transpose();

  std::vector<QMatrix> vectors(r.num_roots());
  for (RootIndex a = 0; a < r.num_positive(); ++a) {
    const auto target = r.eps_coords(a);
    bool found = false;
    for (int p = 0; p < size && !found; ++p) {
      for (int q = 0; q < size && !found; ++q) {
        if (p == q) continue;
        auto wp = position_weight(r, p);
        const auto wq = position_weight(r, q);
        for (std::size_t k = 0; k < wp.size(); ++k) wp[k] -= wq[k];
        if (wp != target) continue;
        QMatrix e = unit(size, p, q);
        if (r.type() != LieType::A) e -= form_t * unit(size, q, p) * form;
        if (e.is_zero()) continue;
        normalize_integer(e);
        vectors[a] = std::move(e);
        found = true;
      }
    }
    if (!found) throw ConsistencyError("no matrix entry carries the weight of root " + root_label(r, a));
    vectors[r.negate(a)] = vectors[a].transpose();
  }
  return ChevalleyRealization(std::move(rs), std::move(vectors));
}

std::vector<std::pair<RootIndex, RootIndex>> type_d_normalized_pairs(const RootSystem& rs) {
  if (rs.type() != LieType::D) throw ValidationError("type D only");
  const int n = rs.rank();
  auto root = [&](std::vector<int> c) {
    auto idx = rs.find(c);
    if (!idx) throw ConsistencyError("normalization root missing");
    return *idx;
  };
  // 1-based interval sums, optionally with alpha_n added.
  auto sum = [&](int lo, int hi, bool plus_n) {
    std::vector<int> c(n, 0);
    for (int j = lo; j <= hi; ++j) c[j - 1] += 1;
    if (plus_n) c[n - 1] += 1;
    return root(c);
  };
  const RootIndex a_n1 = rs.simple(n - 2);
  const RootIndex a_n = rs.simple(n - 1);
  std::vector<std::pair<RootIndex, RootIndex>> out;
  for (int i = 1; i <= n - 2; ++i) {
    out.emplace_back(sum(i, n - 2, false), a_n1);
    out.emplace_back(sum(i, n - 2, false), a_n);
    out.emplace_back(rs.simple(i - 1), sum(i + 1, n - 1, false));
    if (i + 1 <= n - 2) out.emplace_back(rs.simple(i - 1), sum(i + 1, n - 2, true));
    else out.emplace_back(rs.simple(i - 1), a_n);
  }
  for (int i = 1; i <= n - 3; ++i) {
    out.emplace_back(sum(i + 1, n - 1, false), a_n);
    out.emplace_back(sum(i + 1, n - 2, true), a_n1);
  }
  return out;
}

ChevalleyRealization normalize_type_D(const ChevalleyRealization& real) {
  const RootSystem& rs = real.rs();
  const auto pairs = type_d_normalized_pairs(rs);
  const int vars = rs.num_positive();
  std::vector<std::vector<int>> a;
  std::vector<int> b;
  for (const auto& [x, y] : pairs) {
    const int m = real.m(x, y);
    if (m != 1 && m != -1) throw ConsistencyError("normalization needs unit structure constants");
    std::vector<int> row(vars, 0);
    row[x] ^= 1;
    row[y] ^= 1;
    row[rs.sum(x, y)] ^= 1;
    a.push_back(std::move(row));
    b.push_back(m < 0 ? 1 : 0);
  }
  const auto flips = solve_gf2(std::move(a), std::move(b), vars);
  if (!flips) throw ConsistencyError("no sign normalization makes the type-D constants equal to 1");

  std::vector<QMatrix> vectors = real.root_vectors();
  for (RootIndex x = 0; x < vars; ++x) {
    if ((*flips)[x] == 0) continue;
    vectors[x] *= Rational(-1);
    vectors[rs.negate(x)] *= Rational(-1);
  }
  ChevalleyRealization out(real.rs_ptr(), std::move(vectors));
  for (const auto& [x, y] : pairs)
    if (out.m(x, y) != 1) throw ConsistencyError("type-D normalization did not take effect");
  return out;
}

}  // namespace hessenpave
