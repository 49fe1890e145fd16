#include "hessenpave/fforacle.hpp"

#include <algorithm>
#include <sstream>

#include "hessenpave/error.hpp"
#include "hessenpave/hessenberg.hpp"
#include "hessenpave/paving.hpp"

namespace hessenpave {

namespace {

bool is_small_prime(int q) { return q == 2 || q == 3 || q == 5 || q == 7; }

int inverse_mod(int a, int q) {
  for (int x = 1; x < q; ++x)
    if (a * x % q == 1) return x;
  throw ConsistencyError("no inverse modulo q");
}

long long power(long long base, int exp) {
  long long out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

void check_bounds(int n, int q) {
  if (n < 2 || n > 5) throw ValidationError("flag enumeration needs 2 <= n <= 5");
  if (q != 2 && q != 3 && q != 5) throw ValidationError("flag enumeration needs q in {2, 3, 5}");
}

}  // namespace

PrimeFieldMatrix::PrimeFieldMatrix(int q, int rows, int cols)
    : q_(q), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
  if (!is_small_prime(q)) throw ValidationError("field size must be a prime <= 7");
}

void PrimeFieldMatrix::set(int r, int c, long value) {
  data_[static_cast<std::size_t>(r) * cols_ + c] = static_cast<int>(((value % q_) + q_) % q_);
}

PrimeFieldMatrix PrimeFieldMatrix::columns(int first, int count) const {
  PrimeFieldMatrix out(q_, rows_, count);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < count; ++c) out.set(r, c, get(r, first + c));
  return out;
}

PrimeFieldMatrix PrimeFieldMatrix::concat(const PrimeFieldMatrix& other) const {
  PrimeFieldMatrix out(q_, rows_, cols_ + other.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.set(r, c, get(r, c));
    for (int c = 0; c < other.cols_; ++c) out.set(r, cols_ + c, other.get(r, c));
  }
  return out;
}

int PrimeFieldMatrix::rank() const {
  std::vector<int> m = data_;
  auto at = [&](int r, int c) -> int& { return m[static_cast<std::size_t>(r) * cols_ + c]; };
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pivot = row;
    while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (int c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(row, c));
    const int inv = inverse_mod(at(row, col), q_);
    for (int c = 0; c < cols_; ++c) at(row, c) = at(row, c) * inv % q_;
    for (int r = row + 1; r < rows_; ++r) {
      const int factor = at(r, col);
      if (factor == 0) continue;
      for (int c = 0; c < cols_; ++c) at(r, c) = ((at(r, c) - factor * at(row, c)) % q_ + q_) % q_;
    }
    ++row;
  }
  return row;
}

PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
  if (a.q_ != b.q_ || a.cols_ != b.rows_) throw ValidationError("matrix shapes or fields do not match");
  PrimeFieldMatrix out(a.q_, a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int c = 0; c < b.cols_; ++c) {
      long sum = 0;
      for (int k = 0; k < a.cols_; ++k) sum += a.get(r, k) * b.get(k, c);
      out.set(r, c, sum);
    }
  return out;
}

std::vector<int> permutation_of(const WeylElement& w) {
  const RootSystem& rs = w.root_system();
  if (rs.type() != LieType::A) throw ValidationError("permutations are only defined for type A");
  const int n = rs.rank() + 1;
  std::vector<int> perm(n);
  for (int j = 0; j < n; ++j) perm[j] = j;
  // perm = t_{word[0]} o t_{word[1]} o ..., each t_i swapping i and i+1.
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it)
    for (int& p : perm)
      if (p == *it) p = *it + 1;
      else if (p == *it + 1) p = *it;
  return perm;
}

void enumerate_cell_flags(int n, int q, std::span<const int> perm,
                          const std::function<void(const BruhatFlag&)>& visit) {
  check_bounds(n, q);
  if (static_cast<int>(perm.size()) != n) throw ValidationError("permutation has the wrong size");
  std::vector<int> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (int j = 0; j < n; ++j)
    if (sorted[j] != j) throw ValidationError("not a permutation of 0..n-1");

  std::vector<std::pair<int, int>> free;
  for (int j = 0; j < n; ++j)
    for (int p = 0; p < perm[j]; ++p) {
      const bool earlier_pivot = std::find(perm.begin(), perm.begin() + j, p) != perm.begin() + j;
      if (!earlier_pivot) free.emplace_back(p, j);
    }

  BruhatFlag flag{std::vector<int>(perm.begin(), perm.end()), PrimeFieldMatrix(q, n, n)};
  for (int j = 0; j < n; ++j) flag.matrix.set(perm[j], j, 1);
  std::vector<int> digits(free.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < free.size(); ++k) flag.matrix.set(free[k].first, free[k].second, digits[k]);
    visit(flag);
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
    if (k == digits.size()) break;
  }
}

PrimeFieldMatrix jordan_block(int n, int q) {
  PrimeFieldMatrix m(q, n, n);
  for (int i = 0; i + 1 < n; ++i) m.set(i, i + 1, 1);
  return m;
}

bool hessenberg_check(const BruhatFlag& flag, const PrimeFieldMatrix& n, std::span<const int> h) {
  const int size = flag.matrix.rows();
  if (static_cast<int>(h.size()) != size) throw ValidationError("Hessenberg function has the wrong length");
  const PrimeFieldMatrix image = n * flag.matrix;
  for (int i = 1; i <= size; ++i) {
    const PrimeFieldMatrix target = flag.matrix.columns(0, h[i - 1]);
    if (target.concat(image.columns(0, i)).rank() != h[i - 1]) return false;
  }
  return true;
}

bool PointCount::consistent() const {
  if (total != betti_eval) return false;
  return std::all_of(cells.begin(), cells.end(), [](const CellPointCount& c) { return c.count == c.predicted; });
}

PointCount tally_points(int n, int q, std::span<const int> h) {
  check_bounds(n, q);
  const HessenbergSpace space = from_function(n, h);
  const auto& rs = space.root_system_ptr();
  const auto elements = enumerate_weyl(rs);
  const auto cells = compute_paving(elements, space, rows(*rs));
  const PrimeFieldMatrix nilpotent = jordan_block(n, q);

  PointCount out;
  out.n = n;
  out.q = q;
  out.h.assign(h.begin(), h.end());
  for (const auto& cell : cells) {
    CellPointCount c;
    c.perm = permutation_of(cell.w);
    c.word = cell.w.word();
    c.predicted = cell.nonempty ? power(q, *cell.dim) : 0;
    enumerate_cell_flags(n, q, c.perm, [&](const BruhatFlag& flag) {
      if (hessenberg_check(flag, nilpotent, h)) ++c.count;
    });
    out.total += c.count;
    out.cells.push_back(std::move(c));
  }
  out.betti_eval = betti_from_cells(cells).evaluate(q);
  return out;
}

PointCount count_points(int n, int q, std::span<const int> h) {
  PointCount out = tally_points(n, q, h);
  for (const auto& c : out.cells)
    if (c.count != c.predicted) {
      std::ostringstream msg;
      msg << "point count " << c.count << " differs from the predicted " << c.predicted << " for permutation ";
      for (int p : c.perm) msg << p + 1;
      throw ConsistencyError(msg.str());
    }
  if (out.total != out.betti_eval)
    throw ConsistencyError("total point count " + std::to_string(out.total) + " differs from the Betti evaluation " +
                           std::to_string(out.betti_eval));
  return out;
}

}  // namespace hessenpave
