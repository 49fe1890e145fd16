#include <doctest.h>

#include "helpers.hpp"
#include "hessenpave/chevalley.hpp"
#include "hessenpave/error.hpp"

using namespace hessenpave;
using namespace hessenpave::testing;

namespace {

QMatrix unit(int size, int r, int c) {
  QMatrix m(size, size);
  m(r, c) = 1;
  return m;
}

}  // namespace

TEST_SUITE("chevalley") {
  TEST_CASE("A1 and A2 matrix units") {
    auto a1 = build_chevalley(build_root_system(LieType::A, 1));
    CHECK(a1.dim_rep() == 2);
    CHECK(a1.root_vector(0) == unit(2, 0, 1));

    auto rs = build_root_system(LieType::A, 2);
    auto a2 = build_chevalley(rs);
    const RootIndex a = idx(*rs, {1, 0}), b = idx(*rs, {0, 1}), ab = idx(*rs, {1, 1});
    CHECK(a2.root_vector(a) == unit(3, 0, 1));
    CHECK(a2.root_vector(b) == unit(3, 1, 2));
    CHECK(commutator(unit(3, 0, 1), unit(3, 1, 2)) == unit(3, 0, 2));
    CHECK(std::abs(a2.m(a, b)) == 1);
    CHECK(commutator(a2.root_vector(a), a2.root_vector(b)) == a2.root_vector(ab) * Rational(a2.m(a, b)));
  }

  TEST_CASE("C2 realization") {
    auto rs = build_root_system(LieType::C, 2);
    auto c2 = build_chevalley(rs);
    CHECK(c2.dim_rep() == 4);
    const RootIndex gamma = idx(*rs, {2, 1});
    CHECK_FALSE(c2.root_vector(gamma).is_zero());
    CHECK(c2.root_vector(gamma).is_strictly_upper_triangular());
  }

  TEST_CASE("dimensions of the representations") {
    for (auto [type, n] : systems_up_to(6)) {
      auto real = build_chevalley(build_root_system(type, n));
      const int expected = type == LieType::A ? n + 1 : type == LieType::B ? 2 * n + 1 : 2 * n;
      CHECK(real.dim_rep() == expected);
      CHECK(real.cartan_basis().size() == static_cast<std::size_t>(n));
    }
  }

  TEST_CASE("bracket relations hold with dense matrices") {
    for (auto [type, n] : systems_up_to(4)) {
      auto rs = build_root_system(type, n);
      auto real = build_chevalley(rs);
      const QMatrix form = invariant_form(*rs);
      CAPTURE(rs->name());
      for (RootIndex a = 0; a < rs->num_roots(); ++a) {
        const QMatrix& ea = real.root_vector(a);
        CHECK(ea.is_strictly_upper_triangular() == rs->is_positive(a));
        CHECK(real.root_vector(rs->negate(a)) == ea.transpose());
        if (type != LieType::A) CHECK((ea.transpose() * form + form * ea).is_zero());
        for (RootIndex b = 0; b < rs->num_roots(); ++b) {
          const QMatrix br = commutator(ea, real.root_vector(b));
          const RootIndex c = rs->sum(a, b);
          if (b == rs->negate(a)) {
            CHECK(br.is_diagonal());
            CHECK_FALSE(br.is_zero());
          } else if (c == kNoRoot) {
            CHECK(br.is_zero());
            CHECK(real.m(a, b) == 0);
          } else {
            CHECK(real.m(a, b) != 0);
            CHECK(real.m(a, b) == -real.m(b, a));
            CHECK(br == real.root_vector(c) * Rational(real.m(a, b)));
          }
        }
      }
      for (const QMatrix& h : real.cartan_basis()) {
        CHECK(h.is_diagonal());
        for (RootIndex a = 0; a < rs->num_roots(); ++a) {
          auto e = real.expand(commutator(h, real.root_vector(a)));
          CHECK(e.cartan_part.is_zero());
          for (RootIndex b = 0; b < rs->num_roots(); ++b)
            if (b != a) CHECK(e.coeffs[b] == 0);
        }
      }
    }
  }

  TEST_CASE("expansion recovers coefficients") {
    for (auto [type, n] : systems_up_to(3)) {
      auto rs = build_root_system(type, n);
      auto real = build_chevalley(rs);
      QMatrix m(real.dim_rep(), real.dim_rep());
      std::vector<Rational> coeffs(rs->num_roots());
      for (RootIndex a = 0; a < rs->num_roots(); ++a) {
        coeffs[a] = make_rational(a % 7 - 3, 1 + a % 2);
        m += real.root_vector(a) * coeffs[a];
      }
      m += real.cartan_basis()[0] * Rational(5);
      auto e = real.expand(m);
      CHECK(e.coeffs == coeffs);
      CHECK(e.cartan_part == real.cartan_basis()[0] * Rational(5));
    }
    auto b2 = build_chevalley(build_root_system(LieType::B, 2));
    // position (0, 4) has weight 2 eps_1, which is not a root of B2
    CHECK_THROWS_AS(b2.expand(unit(5, 0, 4)), ValidationError);
  }

  TEST_CASE("type D normalization") {
    auto rs = build_root_system(LieType::D, 4);
    auto real = normalize_type_D(build_chevalley(rs));
    CHECK(real.m(idx(*rs, {1, 1, 0, 0}), idx(*rs, {0, 0, 1, 0})) == 1);
    CHECK(real.m(idx(*rs, {0, 1, 1, 0}), idx(*rs, {0, 0, 0, 1})) == 1);

    auto twice = normalize_type_D(real);
    CHECK(twice.constants() == real.constants());
    CHECK(twice.root_vectors() == real.root_vectors());

    for (int n = 4; n <= 7; ++n) {
      auto d = build_root_system(LieType::D, n);
      auto norm = normalize_type_D(build_chevalley(d));
      for (auto [a, b] : type_d_normalized_pairs(*d)) CHECK(norm.m(a, b) == 1);
    }
    CHECK_THROWS_AS(normalize_type_D(build_chevalley(build_root_system(LieType::C, 3))), ValidationError);
  }

  TEST_CASE("a corrupted realization is rejected") {
    auto rs = build_root_system(LieType::A, 2);
    auto vectors = build_chevalley(rs).root_vectors();
    vectors[idx(*rs, {1, 1})] *= Rational(2);
    CHECK_THROWS_AS(ChevalleyRealization(rs, vectors), ConsistencyError);
  }
}
