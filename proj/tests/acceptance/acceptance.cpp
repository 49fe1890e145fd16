// One line per acceptance criterion; exit status 1 if any line is FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hessenpave/fforacle.hpp"
#include "hessenpave/lemmata.hpp"
#include "hessenpave/paving.hpp"
#include "hessenpave/witness.hpp"

using namespace hessenpave;

namespace {

struct System {
  LieType type;
  int rank;
};

std::vector<System> rank_four_sweep() {
  std::vector<System> out;
  for (int n = 1; n <= 4; ++n) {
    out.push_back({LieType::A, n});
    if (n >= 2) out.push_back({LieType::B, n});
    if (n >= 2) out.push_back({LieType::C, n});
    if (n >= 3) out.push_back({LieType::D, n});
  }
  return out;
}

struct Verdict {
  bool passed = true;
  std::string summary;
  std::string failure;

  void fail(const std::string& what) {
    if (passed) failure = what;
    passed = false;
  }
};

std::string label(const RootSystem& rs) { return rs.name(); }

std::string word_text(const WeylElement& w) {
  std::string out;
  for (int i : w.word()) out += (out.empty() ? "" : " ") + std::to_string(i + 1);
  return out.empty() ? "e" : out;
}

std::string vec_text(const std::vector<long long>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + "]";
}

// Poincare polynomial of the flag variety from the degrees of the basic
// invariants: prod_i (1 + q + ... + q^{d_i - 1}).
std::vector<long long> flag_variety_betti(LieType type, int n) {
  std::vector<int> degrees;
  for (int i = 1; i <= n; ++i) {
    switch (type) {
      case LieType::A: degrees.push_back(i + 1); break;
      case LieType::B:
      case LieType::C: degrees.push_back(2 * i); break;
      case LieType::D: degrees.push_back(i < n ? 2 * i : n); break;
    }
  }
  std::vector<long long> poly{1};
  for (int d : degrees) {
    std::vector<long long> next(poly.size() + d - 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k)
      for (int j = 0; j < d; ++j) next[k + j] += poly[k];
    poly = next;
  }
  return poly;
}

Verdict dimension_agreement() {
  Verdict v;
  auto systems = rank_four_sweep();
  systems.push_back({LieType::A, 5});
  long long cells = 0;
  for (auto [type, n] : systems) {
    auto rs = build_root_system(type, n);
    auto weyl = enumerate_weyl(rs);
    for (const auto& h : enumerate_hessenberg(rs))
      for (const auto& w : weyl) {
        if (!cell_nonempty(w, h)) continue;
        ++cells;
        const int a = cell_dimension(w, h), b = cell_dimension_lie(w, h);
        if (a != b)
          v.fail(label(*rs) + " w=" + word_text(w) + ": " + std::to_string(a) + " vs " + std::to_string(b));
      }
  }
  v.summary = std::to_string(cells) + " nonempty cells, rank <= 4 and A5";
  return v;
}

Verdict telescoping() {
  Verdict v;
  long long cells = 0;
  for (auto [type, n] : rank_four_sweep()) {
    auto rs = build_root_system(type, n);
    auto weyl = enumerate_weyl(rs);
    auto rd = rows(*rs);
    for (const auto& h : enumerate_hessenberg(rs))
      for (const auto& w : weyl) {
        if (!cell_nonempty(w, h)) continue;
        ++cells;
        int sum = 0;
        for (int x : row_dimension_profile(w, h, rd)) sum += x;
        if (sum != cell_dimension(w, h)) v.fail(label(*rs) + " w=" + word_text(w));
      }
  }
  v.summary = std::to_string(cells) + " nonempty cells, rank <= 4 including D4";
  return v;
}

Verdict finite_field() {
  Verdict v;
  int runs = 0;
  long long flags = 0;
  for (int n : {3, 4}) {
    auto rs = build_root_system(LieType::A, n - 1);
    auto spaces = enumerate_hessenberg(rs);
    const std::size_t expected_spaces = n == 3 ? 5 : 14;
    if (spaces.size() != expected_spaces) v.fail("wrong number of Hessenberg functions for n=" + std::to_string(n));
    for (int q : {2, 3})
      for (const auto& h : spaces) {
        const auto fn = to_function(h);
        const auto pc = tally_points(n, q, fn);
        ++runs;
        long long total = 0;
        for (const auto& cell : pc.cells) {
          flags += cell.count;
          total += cell.count;
          const auto w = from_word(rs, cell.word);
          long long expect = 0;
          if (cell_nonempty(w, h)) {
            expect = 1;
            for (int k = 0; k < cell_dimension(w, h); ++k) expect *= q;
          }
          if (cell.count != expect)
            v.fail("n=" + std::to_string(n) + " q=" + std::to_string(q) + " w=" + word_text(w) + ": counted " +
                   std::to_string(cell.count) + ", expected " + std::to_string(expect));
        }
        if (total != pc.total || total != poincare_polynomial(rs, h).evaluate(q) || !pc.consistent())
          v.fail("n=" + std::to_string(n) + " q=" + std::to_string(q) + ": total " + std::to_string(total));
      }
  }
  v.summary = std::to_string(runs) + " (n, q, h) runs, " + std::to_string(flags) + " F_q points";
  return v;
}

Verdict golden_specializations() {
  Verdict v;
  int checked = 0;
  for (auto [type, n] : rank_four_sweep()) {
    auto rs = build_root_system(type, n);
    const auto borel = poincare_polynomial(rs, borel_space(rs)).coefficients;
    if (borel != std::vector<long long>{1}) v.fail(label(*rs) + " borel " + vec_text(borel));
    const auto full = poincare_polynomial(rs, full_space(rs)).coefficients;
    std::vector<long long> by_length(rs->num_positive() + 1, 0);
    for (const auto& w : enumerate_weyl(rs)) ++by_length[w.length()];
    if (full != by_length || full != flag_variety_betti(type, n)) v.fail(label(*rs) + " full " + vec_text(full));
    checked += 2;
  }
  auto a2 = build_root_system(LieType::A, 2);
  const auto pet = poincare_polynomial(a2, peterson_space(a2));
  if (pet.coefficients != std::vector<long long>{1, 2, 1} || pet.top_degree() != a2->rank())
    v.fail("A2 Peterson " + vec_text(pet.coefficients));
  ++checked;
  v.summary = std::to_string(checked) + " specializations";
  return v;
}

Verdict lemmata() {
  Verdict v;
  std::string names;
  for (auto [type, n] : std::vector<System>{{LieType::A, 3}, {LieType::B, 3}, {LieType::C, 3}, {LieType::D, 4}}) {
    auto rs = build_root_system(type, n);
    const auto report = verify_lemmata(build_chevalley(rs), 200, cli::kDefaultSeed);
    for (const auto& c : report.checks)
      if (!c.passed) v.fail(label(*rs) + " " + c.name);
    if (report.checks.size() != 7) v.fail(label(*rs) + " ran " + std::to_string(report.checks.size()) + " checks");
    names += (names.empty() ? "" : ", ") + label(*rs);
  }
  v.summary = "7 checks x 200 trials on " + names;
  return v;
}

Verdict witnesses() {
  Verdict v;
  long long cells = 0;
  std::mt19937_64 gen(cli::kDefaultSeed);
  for (auto [type, n] : std::vector<System>{{LieType::A, 3}, {LieType::B, 3}, {LieType::C, 3}, {LieType::D, 4}}) {
    auto rs = build_root_system(type, n);
    auto real = build_chevalley(rs);
    if (type == LieType::D) real = normalize_type_D(real);
    auto weyl = enumerate_weyl(rs);
    auto rd = rows(*rs);
    for (const auto& h : enumerate_hessenberg(rs)) {
      const auto nreg = random_nilpotent(*rs, gen, true);
      for (const auto& w : weyl) {
        if (!cell_nonempty(w, h)) continue;
        ++cells;
        try {
          const auto wr = find_witness(real, w, h, nreg);
          if (!wr.verified || wr.stage_kernel_dims != row_dimension_profile(w, h, rd))
            v.fail(label(*rs) + " w=" + word_text(w) + ": unverified or profile mismatch");
        } catch (const std::exception& e) {
          v.fail(label(*rs) + " w=" + word_text(w) + ": " + e.what());
        }
      }
    }
  }
  v.summary = std::to_string(cells) + " nonempty cells across A3, B3, C3, D4";
  return v;
}

Verdict monotonicity() {
  Verdict v;
  long long pairs = 0;
  for (auto [type, n] : rank_four_sweep()) {
    auto rs = build_root_system(type, n);
    auto weyl = enumerate_weyl(rs);
    auto spaces = enumerate_hessenberg(rs);
    // dims[s][k] = dimension of cell k for space s, or -1 when empty
    std::vector<std::vector<int>> dims(spaces.size(), std::vector<int>(weyl.size(), -1));
    for (std::size_t s = 0; s < spaces.size(); ++s)
      for (std::size_t k = 0; k < weyl.size(); ++k) {
        if (!cell_nonempty(weyl[k], spaces[s])) continue;
        const int d = cell_dimension(weyl[k], spaces[s]);
        dims[s][k] = d;
        if (d > std::min(weyl[k].length(), spaces[s].negative_count()))
          v.fail(label(*rs) + " w=" + word_text(weyl[k]) + ": dimension above bound");
      }
    for (std::size_t s = 0; s < spaces.size(); ++s)
      for (std::size_t t = 0; t < spaces.size(); ++t) {
        if (!spaces[s].is_contained_in(spaces[t])) continue;
        ++pairs;
        for (std::size_t k = 0; k < weyl.size(); ++k)
          if (dims[s][k] >= 0 && dims[t][k] < dims[s][k])
            v.fail(label(*rs) + " w=" + word_text(weyl[k]) + ": not monotone");
      }
  }
  v.summary = std::to_string(pairs) + " nested pairs of Hessenberg spaces, rank <= 4";
  return v;
}

Verdict determinism() {
  Verdict v;
  std::size_t bytes = 0;
  for (const char* type : {"A", "B", "C", "D"}) {
    const std::vector<std::string> args{"sweep", "--type", type, "--rank", "4", "--witness", "--seed", "17"};
    std::ostringstream out1, out2, err;
    const int c1 = cli::run(args, out1, err);
    const int c2 = cli::run(args, out2, err);
    if (c1 != 0 || c2 != 0)
      v.fail(std::string("sweep ") + type + " exited " + std::to_string(c1) + "/" + std::to_string(c2));
    if (out1.str() != out2.str()) v.fail(std::string("sweep ") + type + " output differs between runs");
    bytes += out1.str().size();
  }
  v.summary = "sweeps of A4, B4, C4, D4 with witnesses, " + std::to_string(bytes) + " bytes compared";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"dimension formulas agree", dimension_agreement},
      {"row profiles telescope", telescoping},
      {"finite-field point counts", finite_field},
      {"golden specializations", golden_specializations},
      {"structural lemma checks", lemmata},
      {"constructive witnesses", witnesses},
      {"monotonicity and bounds", monotonicity},
      {"deterministic sweep output", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s: %s (%.1f s)%s%s\n", v.passed ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                v.summary.c_str(), secs, v.passed ? "" : "; first failure: ", v.failure.c_str());
    std::fflush(stdout);
    failures += v.passed ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
