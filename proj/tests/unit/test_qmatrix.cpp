#include <doctest.h>

#include <random>

#include "hessenpave/error.hpp"
#include "hessenpave/qmatrix.hpp"

using namespace hessenpave;

namespace {

QMatrix from_rows(std::vector<std::vector<long>> rows) {
  QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) = Rational(rows[r][c]);
  return m;
}

std::vector<Rational> times(const QMatrix& a, const std::vector<Rational>& z) {
  std::vector<Rational> out(a.rows(), Rational(0));
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out[r] += a(r, c) * z[c];
  return out;
}

}  // namespace

TEST_SUITE("qmatrix") {
  TEST_CASE("rank and determinant") {
    CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(from_rows({{0, 0, 0}, {0, 0, 0}})) == 0);
    CHECK(rank(QMatrix::identity(5)) == 5);
    CHECK(determinant(from_rows({{2, 1}, {1, 1}})) == 1);
    // Vandermonde in 1, 2, 4: (2-1)(4-1)(4-2) = 6
    CHECK(determinant(from_rows({{1, 1, 1}, {1, 2, 4}, {1, 4, 16}})) == 6);
    CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == 0);
  }

  TEST_CASE("determinant is multiplicative and rank agrees with it") {
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<long> dist(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
      QMatrix a(4, 4), b(4, 4);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
          a(r, c) = Rational(dist(gen));
          b(r, c) = Rational(dist(gen));
        }
      CHECK(determinant(a * b) == determinant(a) * determinant(b));
      CHECK((rank(a) == 4) == (determinant(a) != 0));
      CHECK(rank(a) == rank(a.transpose()));
    }
  }

  TEST_CASE("linear solve") {
    auto a = from_rows({{1, 1, 0, 2}, {0, 1, 1, 1}, {1, 2, 1, 3}});
    std::vector<Rational> b{Rational(3), Rational(2), Rational(5)};
    auto sol = solve_linear(a, b);
    REQUIRE(sol.has_value());
    CHECK(sol->rank == 2);
    CHECK(times(a, sol->particular) == b);
    CHECK(sol->kernel.size() == 2);
    for (const auto& k : sol->kernel) CHECK(times(a, k) == std::vector<Rational>(3, Rational(0)));
    std::vector<std::vector<Rational>> kernel_rows = sol->kernel;
    QMatrix kmat(2, 4);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 4; ++c) kmat(r, c) = kernel_rows[r][c];
    CHECK(rank(kmat) == 2);

    std::vector<Rational> bad{Rational(3), Rational(2), Rational(6)};
    CHECK_FALSE(solve_linear(a, bad).has_value());

    auto half = solve_linear(from_rows({{2}}), std::vector<Rational>{Rational(1)});
    REQUIRE(half.has_value());
    CHECK(half->particular[0] == make_rational(1, 2));
    CHECK(half->kernel.empty());
  }

  TEST_CASE("nilpotent exponential") {
    auto x = from_rows({{0, 1, 3}, {0, 0, 2}, {0, 0, 0}});
    auto ex = exp_nilpotent(x);
    CHECK(ex == from_rows({{1, 1, 4}, {0, 1, 2}, {0, 0, 1}}));
    CHECK(ex * exp_nilpotent(x * Rational(-1)) == QMatrix::identity(3));
    CHECK(exp_nilpotent(QMatrix(3, 3)) == QMatrix::identity(3));
    CHECK_THROWS_AS(exp_nilpotent(QMatrix::identity(2)), ValidationError);
  }

  TEST_CASE("shape predicates and commutator") {
    auto u = from_rows({{0, 1}, {0, 0}});
    auto l = u.transpose();
    CHECK(u.is_strictly_upper_triangular());
    CHECK_FALSE(l.is_strictly_upper_triangular());
    CHECK(commutator(u, l) == from_rows({{1, 0}, {0, -1}}));
    CHECK(commutator(u, l).is_diagonal());
    CHECK(commutator(u, u).is_zero());
  }
}
