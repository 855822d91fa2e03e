// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dnbranch/dnbranch.hpp"

using namespace dnbranch;

namespace {

Bipartition bp(std::string_view s) { return parse_bipartition(s); }
IrreducibleLabel U(std::string_view s) { return IrreducibleLabel::unsplit(bp(s)); }
IrreducibleLabel Sp(std::string_view s, Sign sign) { return IrreducibleLabel::split(bp(s), sign); }

std::vector<IrreducibleLabel> sorted(std::vector<IrreducibleLabel> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Collects mismatches for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) problems_.push_back(what);
  }
  void report(const oracle::VerificationReport& r) {
    std::ostringstream s;
    s << r.suite << " " << r.params.describe() << " n<=" << r.n_max << ": " << oracle::verdict_name(r.verdict()) << " ("
      << r.cases << " cases";
    if (!r.failures.empty()) s << ", first failure " << r.failures.front().input;
    s << ")";
    expect(r.passed(), s.str());
    cases_ += r.cases;
  }
  const std::vector<std::string>& problems() const { return problems_; }
  std::size_t cases() const { return cases_; }

 private:
  std::vector<std::string> problems_;
  std::size_t cases_ = 0;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Check&)> body;
};

std::string show(const std::vector<IrreducibleLabel>& v) {
  std::string out;
  for (const auto& l : v) out += (out.empty() ? "" : " + ") + l.to_string();
  return out;
}

}  // namespace

int main() {
  const auto inf = CrystalParams::regime_a(Modulus::infinite());
  const auto b4 = CrystalParams::regime_b(4);

  const std::vector<Criterion> criteria{
      {1, "almost symmetric examples, l=inf n=5", 1.0,
       [&](Check& c) {
         const auto lat = build_lattice(5, inf);
         const auto a = almost_symmetric(bp("2,1|1,1"), lat);
         c.expect(a && *a == Node{1, 1, 2}, "2,1|1,1 special node " + (a ? a->to_string() : std::string("none")));
         c.expect(!almost_symmetric(bp("2|1,1,1"), lat), "2|1,1,1 should not be almost symmetric");
       }},
      {2, "socles at n=5, l=inf", 1.0,
       [&](Check& c) {
         const auto lat = build_lattice(5, inf);
         const auto first = socle_restriction(U("2,1|1,1"), lat).summands;
         const auto want1 = sorted({Sp("1,1|1,1", Sign::plus), Sp("1,1|1,1", Sign::minus), U("1,1|2"), U("1|2,1")});
         c.expect(first == want1, "got " + show(first));
         const auto second = socle_restriction(U("2|1,1,1"), lat).summands;
         const auto want2 = sorted({U("1|1,1,1"), U("1,1|2")});
         c.expect(second == want2, "got " + show(second));
       }},
      {3, "split socles at n=6, l=inf", 1.0,
       [&](Check& c) {
         const auto lat = build_lattice(6, inf);
         const auto want = sorted({U("2|2,1"), U("1,1|2,1")});
         for (Sign s : {Sign::plus, Sign::minus}) {
           const auto got = socle_restriction(Sp("2,1|2,1", s), lat).summands;
           c.expect(got == want, std::string(1, sign_char(s)) + " got " + show(got));
         }
       }},
      {4, "level 5 at e=4: membership and almost 2-symmetry", 5.0,
       [&](Check& c) {
         const auto lat = build_lattice(5, b4);
         c.expect(lat.contains(bp("1|2,2")), "1|2,2 missing from level 5");
         c.expect(lat.contains(bp("2|1,1,1")), "2|1,1,1 missing from level 5");
         const auto a = almost_symmetric(bp("1|2,2"), lat);
         c.expect(a && *a == Node{2, 2, 2}, "1|2,2 special node " + (a ? a->to_string() : std::string("none")));
         const auto rest = bp("1|2,2").with_removed({2, 2, 2});
         c.expect(rest == bp("1|2,1") && h(rest, lat) == rest, "1|2,1 should be h-fixed");
         c.expect(!almost_symmetric(bp("2|1,1,1"), lat), "2|1,1,1 should not be almost 2-symmetric");
       }},
      {5, "level-one calibration, e in {2,3,4}, n<=10", 10.0,
       [&](Check& c) {
         for (int e : {2, 3, 4}) c.report(oracle::verify_level_one_calibration(10, Modulus(e)));
       }},
      {6, "regime A decoupling, l in {2,3}, n<=8", 30.0,
       [&](Check& c) {
         for (int l : {2, 3}) c.report(oracle::verify_regimeA_decoupling(8, Modulus(l)));
       }},
      {7, "h path independence (n<=6) and involution (n<=8), e in {4,6}", 120.0,
       [&](Check& c) {
         for (int e : {4, 6}) {
           c.report(oracle::verify_h_path_independence(6, CrystalParams::regime_b(e)));
           c.report(oracle::verify_h_involution(8, CrystalParams::regime_b(e)));
         }
       }},
      {8, "fixed points at even n with balanced residues, e in {4,6}, n<=8", 60.0,
       [&](Check& c) {
         for (int e : {4, 6}) c.report(oracle::verify_fixed_points(8, CrystalParams::regime_b(e)));
       }},
      {9, "uniqueness and distinctness, e in {4,inf}, m<=8", 120.0,
       [&](Check& c) {
         c.report(oracle::verify_uniqueness_and_distinctness(8, b4));
         c.report(oracle::verify_uniqueness_and_distinctness(8, inf));
       }},
      {10, "multiplicity-free socles, levels 2..8, e in {4,6,inf}", 120.0,
       [&](Check& c) {
         for (const auto& p : {b4, CrystalParams::regime_b(6), inf}) c.report(oracle::verify_multiplicity_free(8, p));
       }},
      {11, "semisimple dimension bookkeeping, n<=7", 30.0,
       [&](Check& c) {
         for (const auto& e : {Modulus::infinite(), Modulus(9), Modulus(11), Modulus(14), Modulus(16)}) {
           c.expect(is_semisimple_D(7, e), "expected semisimple at e=" + e.to_string());
           c.report(oracle::verify_semisimple_branching(7, classify_regime(7, e)));
         }
         const auto lat5 = build_lattice(5, inf);
         const auto soc = socle_restriction(U("2,1|1,1"), lat5);
         std::vector<oracle::BigInt> parts;
         for (const auto& s : soc.summands) parts.push_back(oracle::label_dimension(s));
         std::sort(parts.begin(), parts.end());
         c.expect(oracle::label_dimension(soc.source) == 20 && parts == std::vector<oracle::BigInt>{3, 3, 6, 8},
                  "20 = 3+3+6+8 not reproduced");
         const auto lat6 = build_lattice(6, inf);
         const auto split = socle_restriction(Sp("2,1|2,1", Sign::plus), lat6);
         std::vector<oracle::BigInt> halves;
         for (const auto& s : split.summands) halves.push_back(oracle::label_dimension(s));
         c.expect(oracle::label_dimension(split.source) == 40 && halves == std::vector<oracle::BigInt>{20, 20},
                  "40 = 20+20 not reproduced");
       }},
      {12, "crystal axioms over all vertices, e in {2,4}, n<=7", 60.0,
       [&](Check& c) {
         for (int e : {2, 4}) c.report(oracle::verify_crystal_axioms(7, classify_regime(7, Modulus(e))));
       }},
  };

  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& ex) {
      check.expect(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(secs < crit.limit_seconds, "took longer than the limit");
    const bool ok = check.problems().empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << crit.id << ": " << crit.title << " (" << secs << " s, limit "
              << crit.limit_seconds << " s";
    if (check.cases()) std::cout << ", " << check.cases() << " cases";
    std::cout << ")\n";
    for (const auto& p : check.problems()) std::cout << "       " << p << "\n";
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : std::string("acceptance: all 12 criteria passed"))
            << "\n";
  return failed ? 1 : 0;
}
