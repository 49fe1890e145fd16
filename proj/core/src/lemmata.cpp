#include "hessenpave/lemmata.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "hessenpave/adjoint.hpp"
#include "hessenpave/error.hpp"
#include "hessenpave/hessenberg.hpp"
#include "hessenpave/paving.hpp"
#include "hessenpave/rows.hpp"
#include "hessenpave/weyl_group.hpp"

namespace hessenpave {

namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

std::string fmt_root(const RootSystem& rs, RootIndex a) {
  std::ostringstream out;
  out << "(";
  const auto& c = rs.root(a).coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
  return out.str() + ")";
}

std::string fmt_element(const RootSystem& rs, const NilpotentElement& x) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (RootIndex a = 0; a < static_cast<int>(x.coeffs.size()); ++a) {
    if (sgn(x[a]) == 0) continue;
    out << (first ? "" : ", ") << fmt_root(rs, a) << ": " << x[a].get_str();
    first = false;
  }
  return out.str() + "}";
}

std::string fmt_word(const WeylElement& w) {
  std::ostringstream out;
  out << "[";
  for (std::size_t k = 0; k < w.word().size(); ++k) out << (k ? "," : "") << w.word()[k] + 1;
  return out.str() + "]";
}

std::string fmt_negatives(const HessenbergSpace& h) {
  const auto& rs = h.root_system();
  std::ostringstream out;
  out << "[";
  bool first = true;
  for (RootIndex a : h.negative_part()) {
    out << (first ? "" : ", ") << fmt_root(rs, a);
    first = false;
  }
  return out.str() + "]";
}

enum CheckId : unsigned { kRowStructure = 1, kNearLinearity, kPsiInvariance, kDCoefficients, kContainment, kDBlock };

std::mt19937_64 stream(std::uint64_t seed, unsigned check, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), check,
                    static_cast<unsigned>(trial)};
  return std::mt19937_64(seq);
}

void fail(LemmaCheck& check, Fields fields) {
  if (!check.passed) return;
  check.passed = false;
  check.counterexample = std::move(fields);
}

std::vector<int> nonempty_rows(const RowDecomposition& rows) {
  std::vector<int> out;
  for (int i = 0; i < rows.size(); ++i)
    if (!rows.rows[i].empty()) out.push_back(i);
  return out;
}

int pick(std::mt19937_64& gen, const std::vector<int>& from) {
  return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(gen)];
}

// Only the coefficients on `roots` may be nonzero.
bool supported_on(const NilpotentElement& x, const std::vector<RootIndex>& roots) {
  for (RootIndex a = 0; a < static_cast<int>(x.coeffs.size()); ++a)
    if (sgn(x[a]) != 0 && std::find(roots.begin(), roots.end(), a) == roots.end()) return false;
  return true;
}

LemmaCheck check_row_structure(const ChevalleyRealization& real, const RowDecomposition& rows, int trials,
                               std::uint64_t seed) {
  const RootSystem& rs = real.rs();
  LemmaCheck check{"row_structure", true, std::nullopt, ""};
  std::ostringstream detail;
  for (int i = 0; i < rows.size(); ++i) {
    const auto& row = rows.rows[i];
    std::optional<RootIndex> gamma;
    if (rs.type() == LieType::C) gamma = rows.type_c_long_roots[i];
    bool derived_nonzero = false;
    for (RootIndex a : row)
      for (RootIndex b : row) {
        const auto br = nilpotent_from_matrix(real, bracket(real.root_vector(a), real.root_vector(b)));
        if (br.is_zero()) continue;
        if (gamma && supported_on(br, {*gamma})) {
          derived_nonzero = true;
          continue;
        }
        fail(check, {{"row", std::to_string(i + 1)}, {"alpha", fmt_root(rs, a)}, {"beta", fmt_root(rs, b)},
                     {"bracket", fmt_element(rs, br)}});
      }
    if (gamma && !derived_nonzero)
      fail(check, {{"row", std::to_string(i + 1)}, {"reason", "derived algebra is zero, expected g_gamma"}});

    if (gamma) {
      std::vector<RootIndex> rest;
      std::copy_if(row.begin(), row.end(), std::back_inserter(rest), [&](RootIndex a) { return a != *gamma; });
      for (int t = 0; t < trials; ++t) {
        auto gen = stream(seed, kRowStructure, t * rows.size() + i);
        NilpotentElement x;
        do x = random_supported(rs, row, gen);
        while (supported_on(x, {*gamma}));
        const QMatrix xm = real.from_positive(x.coeffs);
        bool hits_gamma = false;
        for (RootIndex b : row) {
          const auto image = project_row(rows, nilpotent_from_matrix(real, bracket(xm, real.root_vector(b))), i);
          if (!supported_on(image, {*gamma}))
            fail(check, {{"row", std::to_string(i + 1)}, {"X", fmt_element(rs, x)}, {"beta", fmt_root(rs, b)},
                         {"image", fmt_element(rs, image)}});
          if (!image.is_zero()) hits_gamma = true;
        }
        if (!hits_gamma)
          fail(check, {{"row", std::to_string(i + 1)}, {"X", fmt_element(rs, x)},
                       {"reason", "ad X does not reach g_gamma"}});
      }
    }
    detail << (i ? "; " : "") << "row " << i + 1 << " " << (row.empty() ? "empty" : gamma ? "Heisenberg" : "abelian");
  }
  check.detail = detail.str();
  return check;
}

LemmaCheck check_row_count(const RootSystem& rs, const RowDecomposition& rows) {
  LemmaCheck check{"row_count", true, std::nullopt, ""};
  std::size_t total = 0;
  std::vector<int> seen(rs.num_positive(), 0);
  for (const auto& row : rows.rows) {
    total += row.size();
    for (RootIndex a : row) ++seen[a];
  }
  for (RootIndex a = 0; a < rs.num_positive(); ++a)
    if (seen[a] != 1) fail(check, {{"root", fmt_root(rs, a)}, {"occurrences", std::to_string(seen[a])}});
  if (static_cast<int>(total) != rs.num_positive())
    fail(check, {{"sum", std::to_string(total)}, {"positive_roots", std::to_string(rs.num_positive())}});
  check.detail = "sum of row sizes " + std::to_string(total) + ", |Phi+| " + std::to_string(rs.num_positive());
  return check;
}

LemmaCheck check_near_linearity(const ChevalleyRealization& real, const RowDecomposition& rows, int trials,
                                std::uint64_t seed) {
  const RootSystem& rs = real.rs();
  LemmaCheck check{"near_linearity", true, std::nullopt, ""};
  const auto candidates = nonempty_rows(rows);
  int comparisons = 0;
  for (int t = 0; t < trials && check.passed; ++t) {
    auto gen = stream(seed, kNearLinearity, t);
    const int j = pick(gen, candidates);
    const auto x = random_supported(rs, rows.rows[j], gen);
    const auto n = random_nilpotent(rs, gen, false);

    const auto by_matrix = ad_exp_matrix(real, x, n);
    if (by_matrix != ad_exp(real, x, n)) {
      fail(check, {{"X", fmt_element(rs, x)}, {"N", fmt_element(rs, n)},
                   {"reason", "matrix and structure-constant exponentials differ"}});
      break;
    }
    const auto xn = bracket(real, x, n);
    const auto xxn = bracket(real, x, xn);
    for (int i = 0; i < rows.size(); ++i) {
      NilpotentElement expected;
      if (i < j || (i == j && rs.type() == LieType::C)) expected = n + xn + Rational(1, 2) * xxn;
      else if (i == j) expected = n + xn;
      else expected = n;
      const auto lhs = project_row(rows, by_matrix, i);
      const auto rhs = project_row(rows, expected, i);
      ++comparisons;
      if (lhs != rhs) {
        fail(check, {{"i", std::to_string(i + 1)}, {"j", std::to_string(j + 1)}, {"X", fmt_element(rs, x)},
                     {"N", fmt_element(rs, n)}, {"theta", fmt_element(rs, lhs)}, {"formula", fmt_element(rs, rhs)}});
        break;
      }
      if (i == j && rs.type() == LieType::C) {
        std::vector<RootIndex> allowed;
        if (rows.type_c_long_roots[i]) allowed.push_back(*rows.type_c_long_roots[i]);
        if (!supported_on(project_row(rows, xxn, i), allowed)) {
          fail(check, {{"i", std::to_string(i + 1)}, {"X", fmt_element(rs, x)}, {"N", fmt_element(rs, n)},
                       {"reason", "rho_i ad^2(X)(N) leaves g_gamma"}});
          break;
        }
      }
    }
  }
  check.detail = std::to_string(comparisons) + " row projections compared";
  return check;
}

LemmaCheck check_psi_invariance(const ChevalleyRealization& real, const RowDecomposition& rows, int trials,
                                std::uint64_t seed) {
  const RootSystem& rs = real.rs();
  LemmaCheck check{"psi_invariance", true, std::nullopt, ""};
  std::vector<int> targets;
  for (int i : nonempty_rows(rows))
    for (int r = 0; r < i; ++r)
      if (!rows.rows[r].empty()) {
        targets.push_back(i);
        break;
      }
  if (targets.empty()) {
    check.detail = "vacuous";
    return check;
  }
  for (int t = 0; t < trials && check.passed; ++t) {
    auto gen = stream(seed, kPsiInvariance, t);
    const int i = pick(gen, targets);
    std::vector<int> lower;
    for (int r = 0; r < i; ++r)
      if (!rows.rows[r].empty()) lower.push_back(r);
    const int r = pick(gen, lower);
    const auto x = random_supported(rs, rows.rows[r], gen);
    const auto n = random_nilpotent(rs, gen, true);
    const auto before = psi_matrix(real, rows, n, i);
    const auto after = psi_matrix(real, rows, ad_exp(real, x, n), i);
    if (!(before.matrix == after.matrix))
      fail(check, {{"i", std::to_string(i + 1)}, {"X_row", std::to_string(r + 1)}, {"X", fmt_element(rs, x)},
                   {"N", fmt_element(rs, n)}, {"psi_before", before.matrix.to_string()},
                   {"psi_after", after.matrix.to_string()}});
  }
  check.detail = std::to_string(trials) + " trials";
  return check;
}

// The two coefficient statements for X in row i+1, alpha in row i with
// coefficient of alpha_{i+1} at most 1. Rows here follow the first-nonzero
// definition, which keeps alpha_{n-1} and alpha_n in separate rows.
LemmaCheck check_d_coefficients(const ChevalleyRealization& real, int trials, std::uint64_t seed) {
  const RootSystem& rs = real.rs();
  LemmaCheck check{"type_d_coefficients", true, std::nullopt, ""};
  if (rs.type() != LieType::D) {
    check.detail = "vacuous";
    return check;
  }
  const auto rows = rows_by_definition(rs);
  const int n = rs.rank();
  int comparisons = 0;
  for (int t = 0; t < trials && check.passed; ++t) {
    auto gen = stream(seed, kDCoefficients, t);
    const int i = std::uniform_int_distribution<int>(0, n - 2)(gen);
    const auto& upper = rows[i + 1];
    const auto x = random_supported(rs, upper, gen);
    const auto n_elem = random_nilpotent(rs, gen, true);
    const auto image = ad_exp_matrix(real, x, n_elem);
    for (RootIndex alpha : rows[i]) {
      if (rs.coeff(alpha, i + 1) > 1) continue;
      Rational expected = n_elem[alpha];
      for (RootIndex beta = 0; beta < rs.num_positive(); ++beta) {
        const RootIndex diff = rs.difference(alpha, beta);
        if (diff == kNoRoot || std::find(upper.begin(), upper.end(), diff) == upper.end()) continue;
        expected += real.m(diff, beta) * x[diff] * n_elem[beta];
      }
      ++comparisons;
      if (image[alpha] != expected) {
        fail(check, {{"part", "1"}, {"i", std::to_string(i + 1)}, {"alpha", fmt_root(rs, alpha)},
                     {"X", fmt_element(rs, x)}, {"N", fmt_element(rs, n_elem)},
                     {"coefficient", image[alpha].get_str()}, {"formula", expected.get_str()}});
        break;
      }

      auto truncated = x;
      for (RootIndex beta : upper)
        if (beta != alpha && rs.dominance_leq(beta, alpha)) truncated[beta] = 0;
      const auto image2 = ad_exp_matrix(real, truncated, n_elem);
      ++comparisons;
      if (image2[alpha] != n_elem[alpha]) {
        fail(check, {{"part", "2"}, {"i", std::to_string(i + 1)}, {"alpha", fmt_root(rs, alpha)},
                     {"X", fmt_element(rs, truncated)}, {"N", fmt_element(rs, n_elem)},
                     {"coefficient", image2[alpha].get_str()}, {"expected", n_elem[alpha].get_str()}});
        break;
      }
    }
  }
  check.detail = std::to_string(comparisons) + " coefficients compared";
  return check;
}

LemmaCheck check_containment(const ChevalleyRealization& real, const RowDecomposition& rows, int trials,
                             std::uint64_t seed) {
  const RootSystem& rs = real.rs();
  LemmaCheck check{"containment", true, std::nullopt, ""};
  const auto weyl = enumerate_weyl(real.rs_ptr());
  const auto spaces = enumerate_hessenberg(real.rs_ptr());
  const int streams = std::max(trials, 1);

  std::vector<std::vector<PsiMatrix>> psi(streams);
  std::vector<NilpotentElement> elems(streams);
  for (int t = 0; t < streams; ++t) {
    auto gen = stream(seed, kContainment, t);
    elems[t] = random_nilpotent(rs, gen, true);
    for (int i = 0; i < rows.size(); ++i) psi[t].push_back(psi_matrix(real, rows, elems[t], i));
  }

  long pair_index = 0;
  long checked_pairs = 0;
  long checked_rows = 0;
  for (const auto& space : spaces) {
    for (const auto& w : weyl) {
      if (!check.passed) break;
      if (!cell_nonempty(w, space)) continue;
      const int t = static_cast<int>(pair_index++ % streams);
      ++checked_pairs;
      const auto in_wh = twisted_membership(w, space);
      const auto inv = inversion_set(w);
      auto in_phi_w = [&](RootIndex a) { return std::binary_search(inv.begin(), inv.end(), a); };
      for (int i = 0; i < rows.size() && check.passed; ++i) {
        const auto& p = psi[t][i];
        const int size = static_cast<int>(p.order.size());
        for (int r = 0; r < size; ++r) {
          const RootIndex alpha = p.order[r];
          if (in_wh[alpha]) continue;
          ++checked_rows;
          Fields where{{"w", fmt_word(w)}, {"H_negative", fmt_negatives(space)}, {"N", fmt_element(rs, elems[t])},
                       {"row", std::to_string(i + 1)}, {"alpha", fmt_root(rs, alpha)}};
          int first = -1;
          for (int c = 0; c < size; ++c)
            if (sgn(p.matrix(r, c)) != 0) {
              first = c;
              break;
            }
          if (first < 0) {
            where.emplace_back("reason", "row of psi_i is zero");
            fail(check, where);
            break;
          }
          const RootIndex beta = p.order[first];
          const RootIndex diff = rs.difference(alpha, beta);
          if (diff == kNoRoot || !rs.is_positive(diff) || rs.height(diff) != 1 ||
              p.matrix(r, first) != real.m(diff, beta) * elems[t][diff]) {
            where.emplace_back("first_column", fmt_root(rs, beta));
            where.emplace_back("entry", p.matrix(r, first).get_str());
            fail(check, where);
            break;
          }
          for (int c = 0; c < size; ++c) {
            const RootIndex d = rs.difference(alpha, p.order[c]);
            if (d != kNoRoot && rs.is_positive(d) && rs.height(d) == 1 && !in_phi_w(p.order[c])) {
              where.emplace_back("beta_outside_Phi_w", fmt_root(rs, p.order[c]));
              fail(check, where);
              break;
            }
          }
          if (!check.passed) break;
        }
      }
    }
  }
  check.detail = std::to_string(checked_pairs) + " nonempty cells, " + std::to_string(checked_rows) +
                 " rows outside Ad w(H)";
  return check;
}

LemmaCheck check_d_block(const ChevalleyRealization& normalized, int trials, std::uint64_t seed) {
  const RootSystem& rs = normalized.rs();
  LemmaCheck check{"type_d_block", true, std::nullopt, ""};
  if (rs.type() != LieType::D) {
    check.detail = "vacuous";
    return check;
  }
  const int n = rs.rank();
  if (n < 4) {
    check.detail = "vacuous";
    return check;
  }
  auto root = [&](int lo, int hi, bool plus_n) {
    std::vector<int> c(n, 0);
    for (int j = lo; j <= hi; ++j) c[j - 1] += 1;
    if (plus_n) c[n - 1] += 1;
    return *rs.find(c);
  };
  int blocks = 0;
  for (int t = 0; t < trials && check.passed; ++t) {
    auto gen = stream(seed, kDBlock, t);
    const auto n_elem = random_nilpotent(rs, gen, true);
    const QMatrix nm = normalized.from_positive(n_elem.coeffs);
    for (int i = 1; i <= n - 3; ++i) {
      const std::vector<RootIndex> block_rows{root(i + 1, n, false), root(i, n - 1, false), root(i, n - 2, true)};
      const std::vector<RootIndex> block_cols{root(i + 1, n - 1, false), root(i + 1, n - 2, true),
                                              root(i, n - 2, false)};
      QMatrix block(3, 3);
      for (int c = 0; c < 3; ++c) {
        const auto image = nilpotent_from_matrix(normalized, bracket(normalized.root_vector(block_cols[c]), nm));
        for (int r = 0; r < 3; ++r) block(r, c) = image[block_rows[r]];
      }
      const Rational ni = n_elem[rs.simple(i - 1)];
      const Rational nn1 = n_elem[rs.simple(n - 2)];
      const Rational nn = n_elem[rs.simple(n - 1)];
      QMatrix expected(3, 3);
      expected(0, 0) = nn;
      expected(0, 1) = nn1;
      expected(1, 0) = -ni;
      expected(1, 2) = nn1;
      expected(2, 1) = -ni;
      expected(2, 2) = nn;
      const Rational det = determinant(block);
      ++blocks;
      if (!(block == expected) || det != 2 * ni * nn1 * nn || sgn(det) == 0) {
        fail(check, {{"i", std::to_string(i)}, {"N", fmt_element(rs, n_elem)}, {"block", block.to_string()},
                     {"expected", expected.to_string()}, {"determinant", det.get_str()}});
        break;
      }
    }
  }
  check.detail = std::to_string(blocks) + " blocks, determinant 2 n_i n_{n-1} n_n";
  return check;
}

}  // namespace

bool LemmaReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
}

const LemmaCheck& LemmaReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw ValidationError("no lemma check named " + name);
}

LemmaReport verify_lemmata(const ChevalleyRealization& input, int trials, std::uint64_t seed) {
  if (trials < 0) throw ValidationError("trial count must be nonnegative");
  const ChevalleyRealization real = input.rs().type() == LieType::D ? normalize_type_D(input) : input;
  const RootSystem& rs = real.rs();
  const RowDecomposition row_data = rows(rs);

  LemmaReport report;
  report.seed = seed;
  report.trials = trials;
  report.checks.push_back(check_row_structure(real, row_data, trials, seed));
  report.checks.push_back(check_row_count(rs, row_data));
  report.checks.push_back(check_near_linearity(real, row_data, trials, seed));
  report.checks.push_back(check_psi_invariance(real, row_data, trials, seed));
  report.checks.push_back(check_d_coefficients(real, trials, seed));
  report.checks.push_back(check_containment(real, row_data, trials, seed));
  report.checks.push_back(check_d_block(real, trials, seed));
  return report;
}

}  // namespace hessenpave
