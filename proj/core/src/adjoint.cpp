#include "hessenpave/adjoint.hpp"

#include <algorithm>

#include "hessenpave/error.hpp"

namespace hessenpave {

bool NilpotentElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& x) { return sgn(x) == 0; });
}

NilpotentElement& NilpotentElement::operator+=(const NilpotentElement& other) {
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += other.coeffs[k];
  return *this;
}

NilpotentElement& NilpotentElement::operator-=(const NilpotentElement& other) {
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] -= other.coeffs[k];
  return *this;
}

NilpotentElement& NilpotentElement::operator*=(const Rational& s) {
  for (auto& c : coeffs) c *= s;
  return *this;
}

bool is_regular(const RootSystem& rs, const NilpotentElement& n) {
  for (int i = 0; i < rs.rank(); ++i)
    if (sgn(n[rs.simple(i)]) == 0) return false;
  return true;
}

NilpotentElement default_nilpotent(const RootSystem& rs) {
  auto n = NilpotentElement::zero(rs);
  for (int i = 0; i < rs.rank(); ++i) n[rs.simple(i)] = 1;
  return n;
}

namespace {

int draw(std::mt19937_64& gen, bool nonzero) {
  std::uniform_int_distribution<int> dist(-5, nonzero ? 4 : 5);
  int v = dist(gen);
  if (nonzero && v >= 0) ++v;
  return v;
}

}  // namespace

NilpotentElement random_nilpotent(const RootSystem& rs, std::mt19937_64& gen, bool regular) {
  auto n = NilpotentElement::zero(rs);
  for (RootIndex a = 0; a < rs.num_positive(); ++a) n[a] = draw(gen, regular && rs.height(a) == 1);
  return n;
}

NilpotentElement random_supported(const RootSystem& rs, std::span<const RootIndex> support, std::mt19937_64& gen) {
  auto n = NilpotentElement::zero(rs);
  for (RootIndex a : support) n[a] = draw(gen, false);
  return n;
}

QMatrix bracket(const QMatrix& a, const QMatrix& b) { return commutator(a, b); }

NilpotentElement bracket(const ChevalleyRealization& real, const NilpotentElement& x, const NilpotentElement& y) {
  auto out = NilpotentElement::zero(real.rs());
  for (const auto& t : real.positive_terms()) {
    if (sgn(x[t.a]) == 0 || sgn(y[t.b]) == 0) continue;
    out[t.c] += t.m * x[t.a] * y[t.b];
  }
  return out;
}

NilpotentElement ad_exp(const ChevalleyRealization& real, const NilpotentElement& x, const NilpotentElement& n) {
  NilpotentElement sum = n;
  NilpotentElement term = n;
  for (int k = 1; k <= real.rs().num_positive() + 1; ++k) {
    term = bracket(real, x, term);
    if (term.is_zero()) return sum;
    term *= Rational(1, k);
    sum += term;
  }
  throw ConsistencyError("ad_exp: series did not terminate");
}

NilpotentElement nilpotent_from_matrix(const ChevalleyRealization& real, const QMatrix& m) {
  const Expansion e = real.expand(m);
  const RootSystem& rs = real.rs();
  if (!e.cartan_part.is_zero()) throw ConsistencyError("matrix has a Cartan component; not in n");
  for (RootIndex a = rs.num_positive(); a < rs.num_roots(); ++a)
    if (sgn(e.coeffs[a]) != 0) throw ConsistencyError("matrix has a negative root component; not in n");
  return {std::vector<Rational>(e.coeffs.begin(), e.coeffs.begin() + rs.num_positive())};
}

NilpotentElement ad_exp_matrix(const ChevalleyRealization& real, const NilpotentElement& x,
                               const NilpotentElement& n) {
  const QMatrix xm = real.from_positive(x.coeffs);
  const QMatrix g = exp_nilpotent(xm);
  const QMatrix g_inv = exp_nilpotent(Rational(-1) * xm);
  return nilpotent_from_matrix(real, g * real.from_positive(n.coeffs) * g_inv);
}

NilpotentElement project_row(const RowDecomposition& rows, const NilpotentElement& x, int i) {
  NilpotentElement out{std::vector<Rational>(x.coeffs.size(), Rational(0))};
  for (RootIndex a : rows.rows.at(i)) out[a] = x[a];
  return out;
}

PsiMatrix psi_matrix(const ChevalleyRealization& real, const RowDecomposition& rows, const NilpotentElement& n,
                     int i) {
  const RootSystem& rs = real.rs();
  PsiMatrix out;
  out.order = descending_order(rs, rows.rows.at(i));
  const int size = static_cast<int>(out.order.size());
  out.matrix = QMatrix(size, size);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) {
      const RootIndex diff = rs.difference(out.order[r], out.order[c]);
      if (diff != kNoRoot && rs.is_positive(diff))
        out.matrix(r, c) = real.m(diff, out.order[c]) * n[diff];
    }

  const QMatrix nm = real.from_positive(n.coeffs);
  for (int c = 0; c < size; ++c) {
    const auto image = nilpotent_from_matrix(real, bracket(nm, real.root_vector(out.order[c])));
    for (int r = 0; r < size; ++r)
      if (image[out.order[r]] != out.matrix(r, c))
        throw ConsistencyError("psi matrix: structure-constant formula disagrees with matrix brackets");
  }
  return out;
}

NilpotentElement theta_row(const ChevalleyRealization& real, const RowDecomposition& rows,
                           const NilpotentElement& n, const NilpotentElement& x, int i) {
  int support_row = -1;
  for (RootIndex a = 0; a < static_cast<int>(x.coeffs.size()); ++a) {
    if (sgn(x[a]) == 0) continue;
    if (support_row >= 0 && rows.row_of[a] != support_row)
      throw ValidationError("theta_row: X is not supported on a single row");
    support_row = rows.row_of[a];
  }
  return project_row(rows, ad_exp(real, x, n), i);
}

}  // namespace hessenpave
