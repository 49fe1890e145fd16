#include "hessenpave/rows.hpp"

#include <algorithm>
#include <sstream>

#include "hessenpave/error.hpp"

namespace hessenpave {

namespace {

// Coefficient vector of alpha_lo + ... + alpha_hi (0-based, inclusive).
std::vector<int> interval_sum(int n, int lo, int hi) {
  std::vector<int> c(n, 0);
  for (int j = lo; j <= hi; ++j) c[j] += 1;
  return c;
}

std::vector<int> add(std::vector<int> a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

RootIndex require_root(const RootSystem& rs, const std::vector<int>& c) {
  auto index = rs.find(c);
  if (!index || !rs.is_positive(*index)) {
    std::ostringstream msg;
    msg << "closed-form row entry (";
    for (std::size_t i = 0; i < c.size(); ++i) msg << (i ? "," : "") << c[i];
    msg << ") is not a positive root of " << rs.name();
    throw ConsistencyError(msg.str());
  }
  return *index;
}

std::vector<RootIndex> sorted_unique(std::vector<RootIndex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string describe(const RootSystem& rs, const std::vector<RootIndex>& row) {
  std::ostringstream out;
  out << "{";
  for (std::size_t k = 0; k < row.size(); ++k) {
    out << (k ? " " : "") << "(";
    const auto& c = rs.root(row[k]).coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
    out << ")";
  }
  return out.str() + "}";
}

}  // namespace

std::vector<std::vector<RootIndex>> rows_by_definition(const RootSystem& rs) {
  std::vector<std::vector<RootIndex>> out(rs.rank());
  for (RootIndex a = 0; a < rs.num_positive(); ++a) {
    const auto& c = rs.root(a).coeffs();
    const auto first = std::find_if(c.begin(), c.end(), [](int x) { return x != 0; });
    out[first - c.begin()].push_back(a);
  }
  return out;
}

std::vector<std::vector<RootIndex>> rows_by_table(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<std::vector<RootIndex>> out(n);
  // 1-based indices below follow the usual closed forms; the helpers are 0-based.
  auto sum = [n](int lo, int hi) { return interval_sum(n, lo - 1, hi - 1); };
  for (int i = 1; i <= n; ++i) {
    auto& row = out[i - 1];
    switch (rs.type()) {
      case LieType::A:
        for (int k = i; k <= n; ++k) row.push_back(require_root(rs, sum(i, k)));
        break;
      case LieType::B:
        for (int k = i; k <= n; ++k) row.push_back(require_root(rs, sum(i, k)));
        for (int k = i + 1; k <= n; ++k) row.push_back(require_root(rs, add(sum(k, n), sum(i, n))));
        break;
      case LieType::C:
        for (int k = i; k <= n; ++k) row.push_back(require_root(rs, sum(i, k)));
        for (int k = i; k <= n - 1; ++k) row.push_back(require_root(rs, add(sum(k, n - 1), sum(i, n))));
        break;
      case LieType::D: {
        for (int k = i; k <= n - 1; ++k) row.push_back(require_root(rs, sum(i, k)));
        auto alpha_n = sum(n, n);
        for (int k = i + 1; k <= n; ++k) row.push_back(require_root(rs, add(add(sum(i, n - 2), alpha_n), sum(k, n - 1))));
        break;
      }
    }
    row = sorted_unique(std::move(row));
  }
  return out;
}

RowDecomposition rows(const RootSystem& rs) {
  const int n = rs.rank();
  auto table = rows_by_table(rs);
  auto definition = rows_by_definition(rs);

  // The definitional rows in type D split row n-1 of the table into
  // {alpha_{n-1}} and {alpha_n}; compare against the merged form.
  auto expected = definition;
  if (rs.type() == LieType::D) {
    auto merged = definition[n - 2];
    merged.insert(merged.end(), definition[n - 1].begin(), definition[n - 1].end());
    expected[n - 2] = sorted_unique(std::move(merged));
    expected[n - 1].clear();
  }
  for (int i = 0; i < n; ++i)
    if (table[i] != expected[i])
      throw ConsistencyError("row " + std::to_string(i + 1) + " of " + rs.name() + ": closed form " +
                             describe(rs, table[i]) + " differs from definition " + describe(rs, expected[i]));

  RowDecomposition out;
  out.rows = std::move(table);
  out.row_of.assign(rs.num_positive(), -1);
  for (int i = 0; i < n; ++i)
    for (RootIndex a : out.rows[i]) {
      if (out.row_of[a] != -1) throw ConsistencyError("rows of " + rs.name() + " overlap");
      out.row_of[a] = i;
    }
  if (std::count(out.row_of.begin(), out.row_of.end(), -1) != 0)
    throw ConsistencyError("rows of " + rs.name() + " do not cover the positive roots");

  if (rs.type() == LieType::C) {
    out.type_c_long_roots.assign(n, std::nullopt);
    for (int i = 1; i <= n - 1; ++i) {
      auto gamma = interval_sum(n, i - 1, n - 2);
      for (auto& c : gamma) c *= 2;
      gamma[n - 1] = 1;
      out.type_c_long_roots[i - 1] = require_root(rs, gamma);
    }
  }

  if (rs.type() == LieType::D) {
    out.type_d_parts.resize(n);
    for (int i = 1; i <= n; ++i) {
      auto& parts = out.type_d_parts[i - 1];
      const auto& row = out.rows[i - 1];
      if (row.empty()) continue;
      // Upper bound alpha_i + ... + alpha_{n-2} for part 0 and lower bound
      // alpha_i + ... + alpha_n for part 2; the part-1 pair is explicit.
      auto low = interval_sum(n, i - 1, n - 3);
      auto high = interval_sum(n, i - 1, n - 1);
      auto one_a = interval_sum(n, i - 1, n - 2);
      auto one_b = low;
      one_b[n - 1] += 1;
      auto leq = [&](const std::vector<int>& x, const std::vector<int>& y) {
        for (int j = 0; j < n; ++j)
          if (x[j] > y[j]) return false;
        return true;
      };
      for (RootIndex a : row) {
        const auto& c = rs.root(a).coeffs();
        if (c == one_a || c == one_b)
          parts.one.push_back(a);
        else if (leq(c, low))
          parts.zero.push_back(a);
        else if (leq(high, c))
          parts.two.push_back(a);
        else
          throw ConsistencyError("type-D parts do not cover row " + std::to_string(i) + " of " + rs.name());
      }
      if (parts.one.size() != 2)
        throw ConsistencyError("type-D part one of row " + std::to_string(i) + " is not a pair");
    }
  }
  return out;
}

std::vector<RootIndex> descending_order(const RootSystem& rs, std::span<const RootIndex> roots) {
  std::vector<RootIndex> out(roots.begin(), roots.end());
  std::sort(out.begin(), out.end(), [&](RootIndex a, RootIndex b) {
    if (rs.height(a) != rs.height(b)) return rs.height(a) > rs.height(b);
    return rs.root(a).coeffs() > rs.root(b).coeffs();
  });
  return out;
}

}  // namespace hessenpave
