#include "hessenpave/witness.hpp"

#include <algorithm>

#include "hessenpave/error.hpp"
#include "hessenpave/paving.hpp"
#include "hessenpave/rows.hpp"

namespace hessenpave {

namespace {

struct Stage {
  std::vector<RootIndex> inner;  // applied first
  std::vector<RootIndex> outer;
  std::vector<RootIndex> outputs;
};

std::vector<Stage> stage_layout(const RootSystem& rs, const RowDecomposition& rows) {
  std::vector<Stage> out;
  if (rs.type() != LieType::D) {
    for (const auto& row : rows.rows) out.push_back({{}, row, row});
    return out;
  }
  const int n = rs.rank();
  for (int s = 0; s < n; ++s) {
    Stage stage;
    if (s >= 1) stage.outer = rows.type_d_parts[s - 1].zero;
    const auto& next = rows.type_d_parts[s];
    stage.inner = next.one;
    stage.inner.insert(stage.inner.end(), next.two.begin(), next.two.end());
    out.push_back(std::move(stage));
  }
  const auto d_stages = type_d_stages(rows);
  for (int s = 0; s < n; ++s) out[s].outputs = d_stages[s].rows;
  return out;
}

// F(z) = output coefficients of Ad(exp outer(z)) Ad(exp inner(z)) (N).
class StageMap {
 public:
  StageMap(const ChevalleyRealization& real, const NilpotentElement& n, std::vector<RootIndex> vars,
           const std::vector<RootIndex>& inner, std::vector<RootIndex> outputs)
      : real_(real), n_(n), vars_(std::move(vars)), outputs_(std::move(outputs)) {
    for (RootIndex a : vars_) is_inner_.push_back(std::find(inner.begin(), inner.end(), a) != inner.end());
  }

  int num_vars() const { return static_cast<int>(vars_.size()); }
  int num_outputs() const { return static_cast<int>(outputs_.size()); }

  std::pair<NilpotentElement, NilpotentElement> split(const std::vector<Rational>& z) const {
    auto inner = NilpotentElement::zero(real_.rs());
    auto outer = NilpotentElement::zero(real_.rs());
    for (std::size_t k = 0; k < vars_.size(); ++k) (is_inner_[k] ? inner : outer)[vars_[k]] = z[k];
    return {inner, outer};
  }

  NilpotentElement apply(const std::vector<Rational>& z) const {
    const auto [inner, outer] = split(z);
    return ad_exp(real_, outer, ad_exp(real_, inner, n_));
  }

  std::vector<Rational> operator()(const std::vector<Rational>& z) const {
    const auto image = apply(z);
    std::vector<Rational> out;
    for (RootIndex a : outputs_) out.push_back(image[a]);
    return out;
  }

 private:
  const ChevalleyRealization& real_;
  const NilpotentElement& n_;
  std::vector<RootIndex> vars_;
  std::vector<char> is_inner_;
  std::vector<RootIndex> outputs_;
};

// F(z) = c + A z + sum_{j<=k} Q[j][k] z_j z_k, per output.
struct QuadraticModel {
  std::vector<Rational> constant;
  std::vector<std::vector<Rational>> linear;                  // [output][var]
  std::vector<std::vector<std::vector<Rational>>> quadratic;  // [output][j][k], j <= k

  std::vector<Rational> eval(const std::vector<Rational>& z) const {
    std::vector<Rational> out = constant;
    for (std::size_t o = 0; o < out.size(); ++o)
      for (std::size_t j = 0; j < z.size(); ++j) {
        out[o] += linear[o][j] * z[j];
        for (std::size_t k = j; k < z.size(); ++k) out[o] += quadratic[o][j][k] * z[j] * z[k];
      }
    return out;
  }

  bool output_is_affine(int o) const {
    for (const auto& row : quadratic[o])
      for (const auto& q : row)
        if (sgn(q) != 0) return false;
    return true;
  }

  bool var_in_quadratic_terms(int v) const {
    for (const auto& out : quadratic)
      for (std::size_t j = 0; j < out.size(); ++j)
        for (std::size_t k = j; k < out.size(); ++k)
          if (sgn(out[j][k]) != 0 && (static_cast<int>(j) == v || static_cast<int>(k) == v)) return true;
    return false;
  }

  QMatrix jacobian(const std::vector<Rational>& z) const {
    const int m = static_cast<int>(constant.size());
    const int k = static_cast<int>(z.size());
    QMatrix jac(m, k);
    for (int o = 0; o < m; ++o)
      for (int j = 0; j < k; ++j) {
        Rational d = linear[o][j];
        for (int l = 0; l < k; ++l) {
          const auto& q = quadratic[o][std::min(j, l)][std::max(j, l)];
          d += (l == j ? 2 : 1) * q * z[l];
        }
        jac(o, j) = d;
      }
    return jac;
  }
};

QuadraticModel fit(const StageMap& f) {
  const int k = f.num_vars();
  const int m = f.num_outputs();
  auto point = [k](std::initializer_list<std::pair<int, int>> entries) {
    std::vector<Rational> z(k, Rational(0));
    for (auto [j, v] : entries) z[j] += v;
    return z;
  };
  QuadraticModel model;
  model.constant = f(point({}));
  model.linear.assign(m, std::vector<Rational>(k));
  model.quadratic.assign(m, std::vector<std::vector<Rational>>(k, std::vector<Rational>(k)));
  std::vector<std::vector<Rational>> at_one(k);
  for (int j = 0; j < k; ++j) {
    at_one[j] = f(point({{j, 1}}));
    const auto at_two = f(point({{j, 2}}));
    for (int o = 0; o < m; ++o) {
      model.linear[o][j] = (4 * at_one[j][o] - 3 * model.constant[o] - at_two[o]) / 2;
      model.quadratic[o][j][j] = (at_two[o] - 2 * at_one[j][o] + model.constant[o]) / 2;
    }
  }
  for (int j = 0; j < k; ++j)
    for (int l = j + 1; l < k; ++l) {
      const auto both = f(point({{j, 1}, {l, 1}}));
      for (int o = 0; o < m; ++o)
        model.quadratic[o][j][l] = both[o] + model.constant[o] - at_one[j][o] - at_one[l][o];
    }

  std::vector<Rational> probe(k);
  for (int j = 0; j < k; ++j) probe[j] = make_rational((j % 2 ? -1 : 1) * (j + 2), 3);
  if (f(probe) != model.eval(probe)) throw ConsistencyError("stage map is not quadratic in the stage coordinates");
  return model;
}

// Zero of the model with free coordinates set to 0; nullopt if none exists
// by the affine-then-pivot route.
std::optional<std::vector<Rational>> solve_stage(const QuadraticModel& model, int k) {
  const int m = static_cast<int>(model.constant.size());
  std::vector<int> affine;
  std::vector<int> curved;
  for (int o = 0; o < m; ++o) (model.output_is_affine(o) ? affine : curved).push_back(o);

  // Each curved output is solved last through a coordinate that enters it
  // linearly and enters nothing else.
  std::vector<int> pivot_of(curved.size(), -1);
  std::vector<char> reserved(k, 0);
  for (std::size_t c = 0; c < curved.size(); ++c) {
    for (int v = 0; v < k && pivot_of[c] < 0; ++v) {
      if (reserved[v] || sgn(model.linear[curved[c]][v]) == 0 || model.var_in_quadratic_terms(v)) continue;
      bool elsewhere = false;
      for (int o = 0; o < m; ++o)
        if (o != curved[c] && sgn(model.linear[o][v]) != 0) elsewhere = true;
      if (elsewhere) continue;
      pivot_of[c] = v;
      reserved[v] = 1;
    }
    if (pivot_of[c] < 0) return std::nullopt;
  }

  QMatrix a(static_cast<int>(affine.size()), k);
  std::vector<Rational> b;
  for (std::size_t r = 0; r < affine.size(); ++r) {
    for (int v = 0; v < k; ++v)
      if (!reserved[v]) a(static_cast<int>(r), v) = model.linear[affine[r]][v];
    b.push_back(-model.constant[affine[r]]);
  }
  const auto solution = solve_linear(a, b);
  if (!solution) return std::nullopt;
  std::vector<Rational> z = solution->particular;

  for (std::size_t c = 0; c < curved.size(); ++c) {
    const int v = pivot_of[c];
    z[v] = 0;
    const Rational residual = model.eval(z)[curved[c]];
    z[v] = -residual / model.linear[curved[c]][v];
  }
  return z;
}

}  // namespace

WitnessResult find_witness(const ChevalleyRealization& real, const WeylElement& w, const HessenbergSpace& space,
                           const NilpotentElement& n) {
  const RootSystem& rs = real.rs();
  if (rs.name() != space.root_system().name() || rs.name() != w.root_system().name())
    throw ValidationError("find_witness: realization, Weyl element and Hessenberg space disagree on the root system");
  if (!is_regular(rs, n)) throw ValidationError("find_witness: N is not regular");
  if (!cell_nonempty(w, space)) throw ValidationError("find_witness: the cell is empty");

  const RowDecomposition row_data = rows(rs);
  const auto stages = stage_layout(rs, row_data);
  const auto in_wh = twisted_membership(w, space);
  const auto phi_w = inversion_set(w);
  auto in_phi_w = [&](RootIndex a) { return std::binary_search(phi_w.begin(), phi_w.end(), a); };

  WitnessResult result;
  result.stage_solutions.assign(stages.size(), NilpotentElement::zero(rs));
  result.stage_kernel_dims.assign(stages.size(), 0);

  NilpotentElement current = n;
  for (int s = static_cast<int>(stages.size()) - 1; s >= 0; --s) {
    const Stage& stage = stages[s];
    std::vector<RootIndex> vars;
    for (const auto* part : {&stage.inner, &stage.outer})
      for (RootIndex a : *part)
        if (in_phi_w(a)) vars.push_back(a);
    std::vector<RootIndex> outputs;
    for (RootIndex a : stage.outputs)
      if (!in_wh[a]) outputs.push_back(a);

    const StageMap map(real, current, vars, stage.inner, outputs);
    const QuadraticModel model = fit(map);
    const auto z = solve_stage(model, map.num_vars());
    if (!z) throw ConsistencyError("witness stage " + std::to_string(s + 1) + " has no solution");
    if (map(*z) != std::vector<Rational>(outputs.size(), Rational(0)))
      throw ConsistencyError("witness stage " + std::to_string(s + 1) + " solution does not vanish");
    const int r = rank(model.jacobian(*z));
    if (r != map.num_outputs())
      throw ConsistencyError("witness stage " + std::to_string(s + 1) + " is not a submersion");
    result.stage_kernel_dims[s] = map.num_vars() - r;

    const auto [inner, outer] = map.split(*z);
    result.stage_solutions[s] = inner + outer;
    current = map.apply(*z);
  }

  // u = prod_s exp(outer_s) exp(inner_s), ascending s.
  const int size = real.dim_rep();
  QMatrix u = QMatrix::identity(size);
  QMatrix u_inv = QMatrix::identity(size);
  for (std::size_t s = 0; s < stages.size(); ++s) {
    NilpotentElement inner = NilpotentElement::zero(rs);
    NilpotentElement outer = NilpotentElement::zero(rs);
    for (RootIndex a : stages[s].inner) inner[a] = result.stage_solutions[s][a];
    for (RootIndex a : stages[s].outer) outer[a] = result.stage_solutions[s][a];
    const QMatrix out_step = real.from_positive(outer.coeffs);
    const QMatrix in_step = real.from_positive(inner.coeffs);
    u = u * exp_nilpotent(out_step) * exp_nilpotent(in_step);
    u_inv = exp_nilpotent(Rational(-1) * in_step) * exp_nilpotent(Rational(-1) * out_step) * u_inv;
  }
  if (!(u * u_inv == QMatrix::identity(size))) throw ConsistencyError("witness: group element inverse mismatch");
  result.conjugated = nilpotent_from_matrix(real, u * real.from_positive(n.coeffs) * u_inv);
  if (result.conjugated != current)
    throw ConsistencyError("witness: matrix conjugation disagrees with the stagewise computation");
  for (RootIndex a = 0; a < rs.num_positive(); ++a)
    if (!in_wh[a] && sgn(result.conjugated[a]) != 0)
      throw ConsistencyError("witness: Ad(u)(N) has a nonzero coefficient outside Ad w(H)");

  if (result.stage_kernel_dims != row_dimension_profile(w, space, row_data))
    throw ConsistencyError("witness: stage kernel dimensions differ from the row dimension profile");
  result.verified = true;
  return result;
}

}  // namespace hessenpave
