#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "hessenpave/hessenberg.hpp"

using namespace hessenpave;
using namespace hessenpave::testing;

namespace {

// Brute force over all n^n maps {1..n} -> {1..n}.
std::vector<std::vector<int>> all_hessenberg_functions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> h(n, 1);
  while (true) {
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      if (h[i] < i + 1) ok = false;
      if (i > 0 && h[i] < h[i - 1]) ok = false;
    }
    if (ok) out.push_back(h);
    int k = n - 1;
    while (k >= 0 && h[k] == n) h[k--] = 1;
    if (k < 0) break;
    ++h[k];
  }
  return out;
}

std::set<RootIndex> negative_set(const HessenbergSpace& space) {
  auto neg = space.negative_part();
  return {neg.begin(), neg.end()};
}

}  // namespace

TEST_SUITE("hessenberg") {
  TEST_CASE("construction from negative roots") {
    auto a2 = build_root_system(LieType::A, 2);
    auto b = from_negative_roots(a2, std::vector<Root>{});
    CHECK(b == borel_space(a2));
    for (RootIndex a = 0; a < a2->num_roots(); ++a) CHECK(b.contains(a) == a2->is_positive(a));

    auto pet = from_negative_roots(a2, std::vector<Root>{a2->make_root({-1, 0}), a2->make_root({0, -1})});
    CHECK(pet == peterson_space(a2));

    try {
      from_negative_roots(a2, std::vector<Root>{a2->make_root({-1, -1})});
      FAIL("closure violation not raised");
    } catch (const ClosureViolation& e) {
      CHECK(a2->root(e.beta()).coeffs() == std::vector<int>{-1, -1});
      CHECK(e.simple_index() == 0);
    }
    CHECK_THROWS_AS(from_negative_roots(a2, std::vector<RootIndex>{0}), ValidationError);
  }

  TEST_CASE("enumeration counts") {
    CHECK(enumerate_hessenberg(build_root_system(LieType::A, 2)).size() == 5);
    CHECK(enumerate_hessenberg(build_root_system(LieType::B, 2)).size() == 6);
    CHECK(enumerate_hessenberg(build_root_system(LieType::A, 3)).size() == 14);
    for (int n = 2; n <= 6; ++n)
      CHECK(enumerate_hessenberg(build_root_system(LieType::A, n - 1)).size() == all_hessenberg_functions(n).size());
  }

  TEST_CASE("Hessenberg functions") {
    auto id = from_function(3, std::vector<int>{1, 2, 3});
    CHECK(id == borel_space(id.root_system_ptr()));
    auto full = from_function(3, std::vector<int>{3, 3, 3});
    CHECK(full == full_space(full.root_system_ptr()));
    auto h233 = from_function(3, std::vector<int>{2, 3, 3});
    const auto& rs = h233.root_system();
    CHECK(complement_ideal(h233).roots == std::vector<RootIndex>{idx(rs, {-1, -1})});
    CHECK(h233 == peterson_space(h233.root_system_ptr()));

    CHECK_THROWS_AS(from_function(3, std::vector<int>{1, 1, 3}), ValidationError);
    CHECK_THROWS_AS(from_function(3, std::vector<int>{3, 2, 3}), ValidationError);
    CHECK_THROWS_AS(from_function(3, std::vector<int>{2, 3, 4}), ValidationError);
    CHECK_FALSE(is_hessenberg_function(std::vector<int>{2, 1, 3}));

    for (int n = 2; n <= 6; ++n) {
      std::set<std::vector<int>> images;
      for (const auto& h : all_hessenberg_functions(n)) {
        auto space = from_function(n, h);
        CHECK(to_function(space) == h);
        images.insert(space.negative_part());
      }
      CHECK(images.size() == all_hessenberg_functions(n).size());
    }
  }

  TEST_CASE("function model matches the matrix positions") {
    // eps_i - eps_j (i > j) is the (i, j) entry; it lies in H iff i <= h(j).
    for (int n = 2; n <= 5; ++n)
      for (const auto& h : all_hessenberg_functions(n)) {
        auto space = from_function(n, h);
        const auto& rs = space.root_system();
        for (RootIndex a = rs.num_positive(); a < rs.num_roots(); ++a) {
          auto eps = rs.eps_coords(a);
          int i = -1, j = -1;
          for (int k = 0; k < n; ++k) {
            if (eps[k] == 1) i = k;
            if (eps[k] == -1) j = k;
          }
          REQUIRE(i > j);
          CHECK(space.contains(a) == (i + 1 <= h[j]));
        }
      }
  }

  TEST_CASE("complement ideal") {
    auto a2 = build_root_system(LieType::A, 2);
    CHECK(complement_ideal(full_space(a2)).roots.empty());
    CHECK(coeff_set(*a2, complement_ideal(borel_space(a2)).roots) ==
          std::set<std::vector<int>>{{-1, 0}, {0, -1}, {-1, -1}});
    CHECK(coeff_set(*a2, complement_ideal(peterson_space(a2)).roots) == std::set<std::vector<int>>{{-1, -1}});
  }

  TEST_CASE("closure and lattice properties") {
    for (auto [type, n] : systems_up_to(4)) {
      auto rs = build_root_system(type, n);
      auto spaces = enumerate_hessenberg(rs);
      CAPTURE(rs->name());
      CHECK(spaces.front() == borel_space(rs));
      CHECK(spaces.back() == full_space(rs));
      std::set<std::set<RootIndex>> seen;
      for (const auto& s : spaces) {
        CHECK(closed_under_positive_roots(s));
        for (RootIndex a = 0; a < rs->num_positive(); ++a) CHECK(s.contains(a));
        auto comp = complement_ideal(s).roots;
        CHECK(static_cast<int>(comp.size()) + s.negative_count() == rs->num_positive());
        // complement is an ideal of b^-: closed under adding negative roots
        for (RootIndex c : comp)
          for (RootIndex b = rs->num_positive(); b < rs->num_roots(); ++b) {
            RootIndex sum = rs->sum(c, b);
            if (sum != kNoRoot) CHECK_FALSE(s.contains(sum));
          }
        seen.insert(negative_set(s));
      }
      CHECK(seen.size() == spaces.size());

      for (const auto& s : spaces)
        for (const auto& t : spaces) {
          std::set<RootIndex> uni = negative_set(s), inter;
          auto ns = negative_set(s), nt = negative_set(t);
          uni.insert(nt.begin(), nt.end());
          std::set_intersection(ns.begin(), ns.end(), nt.begin(), nt.end(), std::inserter(inter, inter.end()));
          CHECK(seen.count(uni) == 1);
          CHECK(seen.count(inter) == 1);
          CHECK(s.is_contained_in(t) == std::includes(nt.begin(), nt.end(), ns.begin(), ns.end()));
        }
    }
  }
}
