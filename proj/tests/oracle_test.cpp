#include <gtest/gtest.h>

#include <numeric>

#include "dnbranch/oracle.hpp"

using namespace dnbranch;
using namespace dnbranch::oracle;

namespace {

Bipartition bp(std::string_view s) { return parse_bipartition(s); }

const CrystalParams B4 = CrystalParams::regime_b(4);
const CrystalParams A_INF = CrystalParams::regime_a(Modulus::infinite());

// Standard bitableaux by brute force: fill 1..n in every order and keep the
// fillings whose rows and columns increase in both components.
std::size_t count_bitableaux(const Bipartition& b) {
  std::vector<std::tuple<int, int, int>> cells;
  for (int c = 1; c <= 2; ++c)
    for (std::size_t r = 1; r <= b.component(c).length(); ++r)
      for (int col = 1; col <= b.component(c).part(r); ++col) cells.emplace_back(c, static_cast<int>(r), col);
  std::vector<int> fill(cells.size());
  std::iota(fill.begin(), fill.end(), 1);
  std::size_t count = 0;
  do {
    std::map<std::tuple<int, int, int>, int> at;
    for (std::size_t k = 0; k < cells.size(); ++k) at[cells[k]] = fill[k];
    bool ok = true;
    for (const auto& [cell, v] : at) {
      const auto [c, r, col] = cell;
      if (auto it = at.find({c, r, col + 1}); it != at.end() && it->second < v) ok = false;
      if (auto it = at.find({c, r + 1, col}); it != at.end() && it->second < v) ok = false;
    }
    count += ok ? 1 : 0;
  } while (std::next_permutation(fill.begin(), fill.end()));
  return count;
}

}  // namespace

TEST(AllPaths, Examples) {
  const auto lat = build_lattice(4, B4);
  const auto empty = all_paths(Bipartition{}, lat);
  ASSERT_EQ(empty.paths.size(), 1u);
  EXPECT_TRUE(empty.paths[0].residues.empty());

  auto pair = all_paths(bp("1|1"), lat);
  std::vector<std::string> got;
  for (const auto& p : pair.paths) got.push_back(p.to_string());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::string>{"[0,2]", "[2,0]"}));
  EXPECT_FALSE(pair.truncated);

  const auto a2 = build_lattice(2, CrystalParams::regime_a(Modulus(2)));
  EXPECT_EQ(all_paths(bp("1,1|-"), a2).paths.size(), 1u);
}

TEST(AllPaths, CapMakesSuitesInconclusive) {
  const auto lat = build_lattice(6, A_INF);
  const auto capped = all_paths(bp("2,1|2,1"), lat, 3);
  EXPECT_TRUE(capped.truncated);
  EXPECT_EQ(capped.paths.size(), 3u);
  const auto report = verify_h_path_independence(6, B4, 2);
  EXPECT_TRUE(report.truncated);
  EXPECT_EQ(report.verdict(), Verdict::inconclusive);
  EXPECT_FALSE(report.passed());
}

TEST(NaiveOracle, AgreesWithEngineLattice) {
  for (const auto& params : {B4, CrystalParams::regime_b(6), CrystalParams::regime_a(Modulus(3)), A_INF}) {
    const auto engine = build_lattice(6, params);
    const auto naive = naive_lattice(6, params);
    EXPECT_TRUE(engine == naive) << params.describe();
  }
}

TEST(NaiveOracle, ReplayAgrees) {
  const auto lat = build_lattice(6, B4);
  for (std::size_t m = 0; m <= 6; ++m)
    for (const auto& b : lat.level(m)) {
      const auto p = canonical_path(b, lat);
      EXPECT_EQ(naive_replay(p, B4), replay_path(p, B4));
      EXPECT_EQ(naive_replay(p.shifted(2), B4), replay_path(p.shifted(2), B4));
    }
}

TEST(Dimension, Examples) {
  EXPECT_EQ(bipartition_dimension(bp("2|-")), 1);
  EXPECT_EQ(bipartition_dimension(bp("1|1")), 2);
  EXPECT_EQ(bipartition_dimension(bp("2,1|1,1")), 20);
  EXPECT_EQ(bipartition_dimension(bp("2,1|2,1")), 80);
  EXPECT_EQ(bipartition_dimension(bp("-|-")), 1);
}

TEST(Dimension, MatchesBruteForceEnumeration) {
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& b : all_bipartitions(n)) EXPECT_EQ(bipartition_dimension(b), count_bitableaux(b)) << b.to_string();
}

TEST(Dimension, RemovalRecurrence) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& b : all_bipartitions(n)) {
      BigInt sum = 0;
      for (const auto& node : removable_nodes(b)) sum += bipartition_dimension(b.with_removed(node));
      EXPECT_EQ(sum, bipartition_dimension(b)) << b.to_string();
    }
}

TEST(Dimension, ExampleTotals) {
  const auto lat5 = build_lattice(5, A_INF);
  const auto soc = socle_restriction(IrreducibleLabel::unsplit(bp("2,1|1,1")), lat5);
  std::vector<BigInt> dims;
  for (const auto& s : soc.summands) dims.push_back(label_dimension(s));
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<BigInt>{3, 3, 6, 8}));
  EXPECT_EQ(label_dimension(soc.source), 20);

  const auto lat6 = build_lattice(6, A_INF);
  const auto split = socle_restriction(IrreducibleLabel::split(bp("2,1|2,1"), Sign::plus), lat6);
  EXPECT_EQ(label_dimension(split.source), 40);
  BigInt sum = 0;
  for (const auto& s : split.summands) {
    EXPECT_EQ(label_dimension(s), 20);
    sum += label_dimension(s);
  }
  EXPECT_EQ(sum, 40);
}

TEST(Suites, PathIndependence) {
  for (int e : {4, 6}) {
    const auto r = verify_h_path_independence(6, CrystalParams::regime_b(e));
    EXPECT_TRUE(r.passed()) << e;
    EXPECT_GT(r.cases, 0u);
  }
  const auto vacuous = verify_h_path_independence(5, A_INF);
  EXPECT_TRUE(vacuous.passed());
  EXPECT_EQ(vacuous.cases, 0u);
}

TEST(Suites, Involution) {
  for (int e : {4, 6}) EXPECT_TRUE(verify_h_involution(8, CrystalParams::regime_b(e)).passed());
  EXPECT_TRUE(verify_h_involution(6, A_INF).passed());
}

TEST(Suites, FixedPoints) {
  for (int e : {4, 6}) {
    const auto r = verify_fixed_points(8, CrystalParams::regime_b(e));
    EXPECT_TRUE(r.passed());
    EXPECT_GT(r.cases, 0u);
  }
  EXPECT_TRUE(verify_fixed_points(6, A_INF).passed());
}

TEST(Suites, Uniqueness) {
  EXPECT_TRUE(verify_uniqueness_and_distinctness(8, B4).passed());
  EXPECT_TRUE(verify_uniqueness_and_distinctness(7, A_INF).passed());
  EXPECT_TRUE(verify_uniqueness_and_distinctness(2, B4).passed());
}

TEST(Suites, Decoupling) {
  for (int l : {2, 3}) EXPECT_TRUE(verify_regimeA_decoupling(8, Modulus(l)).passed());
  EXPECT_TRUE(verify_regimeA_decoupling(6, Modulus::infinite()).passed());
}

TEST(Suites, LevelOne) {
  for (int e : {2, 3, 4}) EXPECT_TRUE(verify_level_one_calibration(10, Modulus(e)).passed());
}

TEST(Suites, CrystalAxioms) {
  for (int e : {2, 4}) {
    const auto r = verify_crystal_axioms(7, classify_regime(7, Modulus(e)));
    EXPECT_TRUE(r.passed()) << e;
  }
  EXPECT_TRUE(verify_crystal_axioms(5, CrystalParams::regime_a(Modulus(3))).passed());
}

TEST(Suites, MultiplicityFree) {
  for (const auto& params : {B4, CrystalParams::regime_b(6), A_INF}) EXPECT_TRUE(verify_multiplicity_free(8, params).passed());
}

TEST(Suites, Semisimple) {
  EXPECT_TRUE(verify_semisimple_branching(7, A_INF).passed());
  EXPECT_TRUE(verify_semisimple_branching(2, A_INF).passed());
  EXPECT_TRUE(verify_semisimple_branching(7, classify_regime(7, Modulus(9))).passed());
  try {
    verify_semisimple_branching(5, B4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_semisimple);
  }
}

TEST(Suites, ByName) {
  for (const auto& name : suite_names()) {
    const Modulus e = name == "semisimple" ? Modulus::infinite() : Modulus(4);
    EXPECT_TRUE(run_suite(name, 5, e).passed()) << name;
  }
  EXPECT_THROW(run_suite("nope", 3, Modulus(4)), Error);
}

TEST(Report, VerdictFollowsFailures) {
  VerificationReport r;
  EXPECT_EQ(r.verdict(), Verdict::pass);
  r.truncated = true;
  EXPECT_EQ(r.verdict(), Verdict::inconclusive);
  r.fail("x", "y", "z");
  EXPECT_EQ(r.verdict(), Verdict::fail);
  EXPECT_EQ(verdict_name(r.verdict()), "FAIL");
}
