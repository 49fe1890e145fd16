#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hessenpave/adjoint.hpp"
#include "hessenpave/error.hpp"

using namespace hessenpave;
using namespace hessenpave::testing;

namespace {

NilpotentElement single(const RootSystem& rs, RootIndex a, long value = 1) {
  auto x = NilpotentElement::zero(rs);
  x[a] = value;
  return x;
}

}  // namespace

TEST_SUITE("adjoint") {
  TEST_CASE("ad_exp examples") {
    auto rs = build_root_system(LieType::A, 2);
    auto real = build_chevalley(rs);
    const RootIndex a1 = idx(*rs, {1, 0}), a2 = idx(*rs, {0, 1}), a12 = idx(*rs, {1, 1});
    auto n = default_nilpotent(*rs);
    CHECK(ad_exp(real, NilpotentElement::zero(*rs), n) == n);

    auto expected = single(*rs, a1);
    expected[a12] = real.m(a2, a1);
    CHECK(ad_exp(real, single(*rs, a2), single(*rs, a1)) == expected);
    CHECK(ad_exp_matrix(real, single(*rs, a2), single(*rs, a1)) == expected);

    for (RootIndex a = 0; a < rs->num_positive(); ++a)
      CHECK(bracket(real.root_vector(a), real.root_vector(rs->negate(a))).is_diagonal());
  }

  TEST_CASE("structure-constant and matrix routes agree") {
    std::mt19937_64 gen(11);
    for (auto [type, n] : systems_up_to(4)) {
      auto rs = build_root_system(type, n);
      auto real = build_chevalley(rs);
      for (int trial = 0; trial < 10; ++trial) {
        auto x = random_nilpotent(*rs, gen, false);
        auto y = random_nilpotent(*rs, gen, true);
        CHECK(bracket(real, x, y) ==
              nilpotent_from_matrix(real, bracket(real.from_positive(x.coeffs), real.from_positive(y.coeffs))));
        CHECK(ad_exp(real, x, y) == ad_exp_matrix(real, x, y));
      }
    }
  }

  TEST_CASE("regular elements stay regular under the adjoint action") {
    std::mt19937_64 gen(12);
    for (auto [type, n] : systems_up_to(5)) {
      auto rs = build_root_system(type, n);
      auto real = build_chevalley(rs);
      for (int trial = 0; trial < 10; ++trial) {
        auto nreg = random_nilpotent(*rs, gen, true);
        REQUIRE(is_regular(*rs, nreg));
        CHECK(is_regular(*rs, ad_exp(real, random_nilpotent(*rs, gen, false), nreg)));
      }
    }
    auto rs = build_root_system(LieType::B, 3);
    auto n = default_nilpotent(*rs);
    CHECK(is_regular(*rs, n));
    n[rs->simple(1)] = 0;
    CHECK_FALSE(is_regular(*rs, n));
  }

  TEST_CASE("leaving n is reported") {
    auto rs = build_root_system(LieType::C, 2);
    auto real = build_chevalley(rs);
    CHECK_THROWS_AS(nilpotent_from_matrix(real, real.root_vector(rs->negate(0))), ConsistencyError);
    CHECK_THROWS_AS(nilpotent_from_matrix(real, real.cartan_basis()[0]), ConsistencyError);
  }

  TEST_CASE("psi examples") {
    auto rs = build_root_system(LieType::A, 2);
    auto real = build_chevalley(rs);
    auto rd = rows(*rs);
    auto psi = psi_matrix(real, rd, default_nilpotent(*rs), 0);
    REQUIRE(psi.order == std::vector<RootIndex>{idx(*rs, {1, 1}), idx(*rs, {1, 0})});
    CHECK(psi.matrix.is_strictly_upper_triangular());
    CHECK(psi.matrix(0, 1) == real.m(idx(*rs, {0, 1}), idx(*rs, {1, 0})));
    CHECK(psi.matrix(0, 1) != 0);

    auto c2 = build_root_system(LieType::C, 2);
    auto realc = build_chevalley(c2);
    auto psic = psi_matrix(realc, rows(*c2), default_nilpotent(*c2), 0);
    CHECK(psic.matrix.rows() == 3);
    CHECK(psic.matrix.is_strictly_upper_triangular());
    CHECK(psic.matrix(0, 1) != 0);
    CHECK(psic.matrix(1, 2) != 0);
  }

  TEST_CASE("psi shape for regular and for non-regular N") {
    std::mt19937_64 gen(13);
    for (auto [type, n] : systems_up_to(4)) {
      auto rs = build_root_system(type, n);
      auto real = build_chevalley(rs);
      auto rd = rows(*rs);
      for (int trial = 0; trial < 5; ++trial) {
        auto nreg = random_nilpotent(*rs, gen, true);
        auto nsing = random_nilpotent(*rs, gen, false);
        for (int i = 0; i < n; ++i) nsing[rs->simple(i)] = 0;
        for (int i = 0; i < rd.size(); ++i) {
          auto reg = psi_matrix(real, rd, nreg, i).matrix;
          auto sing = psi_matrix(real, rd, nsing, i).matrix;
          CHECK(sing.is_strictly_upper_triangular());
          for (int k = 0; k + 1 < sing.rows(); ++k) CHECK(sing(k, k + 1) == 0);
          if (type == LieType::D) continue;
          CHECK(reg.is_strictly_upper_triangular());
          for (int k = 0; k + 1 < reg.rows(); ++k) CHECK(reg(k, k + 1) != 0);
        }
      }
    }
  }

  TEST_CASE("theta cases") {
    std::mt19937_64 gen(14);
    for (auto [type, n] : systems_up_to(4)) {
      auto rs = build_root_system(type, n);
      auto real = build_chevalley(rs);
      auto rd = rows(*rs);
      auto nreg = random_nilpotent(*rs, gen, true);
      for (int j = 0; j < rd.size(); ++j) {
        if (rd.rows[j].empty()) continue;
        auto x = random_supported(*rs, rd.rows[j], gen);
        for (int i = 0; i < rd.size(); ++i) {
          auto value = theta_row(real, rd, nreg, x, i);
          CHECK(theta_row(real, rd, nreg, NilpotentElement::zero(*rs), i) == project_row(rd, nreg, i));
          if (i > j) CHECK(value == project_row(rd, nreg, i));
          if (i == j && type == LieType::A) CHECK(value == project_row(rd, nreg + bracket(real, x, nreg), i));
        }
      }
    }
    auto rs = build_root_system(LieType::A, 3);
    auto real = build_chevalley(rs);
    auto x = default_nilpotent(*rs);
    CHECK_THROWS_AS(theta_row(real, rows(*rs), default_nilpotent(*rs), x, 0), ValidationError);
  }

  TEST_CASE("theta is quadratic along lines") {
    std::mt19937_64 gen(15);
    for (auto [type, n] : systems_up_to(4)) {
      auto rs = build_root_system(type, n);
      auto real = build_chevalley(rs);
      auto rd = rows(*rs);
      auto nreg = random_nilpotent(*rs, gen, true);
      for (int j = 0; j < rd.size(); ++j) {
        if (rd.rows[j].empty()) continue;
        auto base = random_supported(*rs, rd.rows[j], gen);
        auto dir = random_supported(*rs, rd.rows[j], gen);
        for (int i = 0; i <= j; ++i) {
          std::vector<NilpotentElement> f;
          for (int t = 0; t < 4; ++t) f.push_back(theta_row(real, rd, nreg, base + Rational(t) * dir, i));
          auto third = f[3] - Rational(3) * f[2] + Rational(3) * f[1] - f[0];
          CHECK(third.is_zero());
        }
      }
    }
  }
}
