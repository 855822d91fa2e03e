#ifndef DNBRANCH_ORACLE_HPP
#define DNBRANCH_ORACLE_HPP

// Brute-force verifiers for the crystal and branching engines.
//
// The oracle keeps its own notion of good nodes: diagrams are sets of cells,
// addable/removable cells are read off neighbourhoods, and a removable node
// is normal when every later stretch of the signature has at least as many
// removable as addable nodes (dually for conormal addable nodes). Nothing
// here calls the signature-cancellation code it is checking.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dnbranch/core.hpp"
#include "dnbranch/crystal.hpp"
#include "dnbranch/dmod.hpp"
#include "dnbranch/error.hpp"

namespace dnbranch::oracle {

using BigInt = boost::multiprecision::cpp_int;

enum class Verdict { pass, fail, inconclusive };

inline std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "FAIL";
}

struct Failure {
  std::string input;
  std::string expected;
  std::string got;

  friend bool operator==(const Failure&, const Failure&) = default;
};

/// Outcome of one suite. A run with failures is FAIL; a clean run that hit a
/// path cap is INCONCLUSIVE, never PASS.
struct VerificationReport {
  std::string suite;
  CrystalParams params;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  bool truncated = false;
  double elapsed_seconds = 0.0;

  Verdict verdict() const {
    if (!failures.empty()) return Verdict::fail;
    return truncated ? Verdict::inconclusive : Verdict::pass;
  }
  bool passed() const { return verdict() == Verdict::pass; }

  void fail(std::string input, std::string expected, std::string got) {
    failures.push_back({std::move(input), std::move(expected), std::move(got)});
  }
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Cell {
  int component;
  int row;
  int col;
  auto operator<=>(const Cell&) const = default;
};

inline std::set<Cell> cells_of(const Bipartition& b) {
  std::set<Cell> cells;
  for (int c = 1; c <= 2; ++c) {
    const auto parts = b.component(c).parts();
    for (std::size_t r = 0; r < parts.size(); ++r)
      for (int col = 1; col <= parts[r]; ++col) cells.insert({c, static_cast<int>(r) + 1, col});
  }
  return cells;
}

struct Marked {
  Cell cell;
  bool addable;
};

// Direct residue formula: content col - row, plus l on component 2 in regime B.
inline Residue cell_residue(const Cell& x, const CrystalParams& params) {
  const int content = x.col - x.row;
  if (params.regime == Regime::B) {
    const int e = params.e.value();
    const int shift = x.component == 2 ? e / 2 : 0;
    return Residue{(((content + shift) % e) + e) % e, params.e, 0};
  }
  if (params.l.is_infinite()) return Residue{content, params.l, x.component - 1};
  const int l = params.l.value();
  return Residue{((content % l) + l) % l, params.l, x.component - 1};
}

// All addable and removable cells of residue i in reading order.
inline std::vector<Marked> marked_cells(const Bipartition& b, const Residue& i, const CrystalParams& params) {
  const auto cells = cells_of(b);
  auto has = [&](int c, int r, int col) { return r >= 1 && col >= 1 && cells.count({c, r, col}) > 0; };
  std::vector<Marked> out;
  for (int c = 1; c <= 2; ++c) {
    const int rows = static_cast<int>(b.component(c).length());
    const int cols = b.component(c).part(1);
    for (int r = 1; r <= rows + 1; ++r) {
      for (int col = 1; col <= cols + 1; ++col) {
        const bool present = has(c, r, col);
        const bool addable = !present && (r == 1 || has(c, r - 1, col)) && (col == 1 || has(c, r, col - 1));
        const bool removable = present && !has(c, r + 1, col) && !has(c, r, col + 1);
        if (!addable && !removable) continue;
        const Cell x{c, r, col};
        if (cell_residue(x, params) == i) out.push_back({x, addable});
      }
    }
  }
  // Reading order is (component, row); one row never holds two cells of one residue.
  std::stable_sort(out.begin(), out.end(), [](const Marked& a, const Marked& b) {
    return std::tie(a.cell.component, a.cell.row) < std::tie(b.cell.component, b.cell.row);
  });
  return out;
}

}  // namespace detail

/// Leftmost normal removable i-node: a removable node at position p such that
/// every stretch (p, q] has no more addable than removable nodes.
inline std::optional<Node> naive_good_removable(const Bipartition& b, const Residue& i, const CrystalParams& params) {
  const auto seq = detail::marked_cells(b, i, params);
  for (std::size_t p = 0; p < seq.size(); ++p) {
    if (seq[p].addable) continue;
    bool normal = true;
    int removable = 0;
    int addable = 0;
    for (std::size_t q = p + 1; q < seq.size() && normal; ++q) {
      (seq[q].addable ? addable : removable) += 1;
      if (addable > removable) normal = false;
    }
    if (normal) return Node{seq[p].cell.component, seq[p].cell.row, seq[p].cell.col};
  }
  return std::nullopt;
}

/// Rightmost conormal addable i-node: an addable node at position p such that
/// every stretch [q, p) has no more removable than addable nodes.
inline std::optional<Node> naive_good_addable(const Bipartition& b, const Residue& i, const CrystalParams& params) {
  const auto seq = detail::marked_cells(b, i, params);
  for (std::size_t p = seq.size(); p-- > 0;) {
    if (!seq[p].addable) continue;
    bool conormal = true;
    int removable = 0;
    int addable = 0;
    for (std::size_t q = p; q-- > 0 && conormal;) {
      (seq[q].addable ? addable : removable) += 1;
      if (removable > addable) conormal = false;
    }
    if (conormal) return Node{seq[p].cell.component, seq[p].cell.row, seq[p].cell.col};
  }
  return std::nullopt;
}

/// Residues worth probing at `b`: every residue met in the bounding box of
/// each component grown by one row and one column.
inline std::vector<Residue> naive_residues(const Bipartition& b, const CrystalParams& params) {
  std::vector<Residue> out;
  for (int c = 1; c <= 2; ++c) {
    const int rows = static_cast<int>(b.component(c).length());
    const int cols = b.component(c).part(1);
    for (int r = 1; r <= rows + 1; ++r)
      for (int col = 1; col <= cols + 1; ++col) out.push_back(detail::cell_residue({c, r, col}, params));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Good removable nodes of `b`, sorted.
inline std::vector<Node> naive_good_nodes(const Bipartition& b, const CrystalParams& params) {
  std::vector<Node> out;
  for (const auto& r : naive_residues(b, params))
    if (auto n = naive_good_removable(b, r, params)) out.push_back(*n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::optional<Bipartition> naive_replay(const Path& path, const CrystalParams& params) {
  Bipartition cur;
  for (const auto& r : path.residues) {
    auto node = naive_good_addable(cur, r, params);
    if (!node) return std::nullopt;
    cur = cur.with_added(*node);
  }
  return cur;
}

/// The good lattice rebuilt from the naive good-addable rule.
inline Lattice naive_lattice(std::size_t n, const CrystalParams& params) {
  std::vector<std::vector<Bipartition>> levels{{Bipartition{}}};
  std::vector<std::tuple<std::size_t, Bipartition, Residue, Bipartition>> arrows;
  for (std::size_t m = 1; m <= n; ++m) {
    std::set<Bipartition> next;
    for (const auto& b : levels.back())
      for (const auto& r : naive_residues(b, params))
        if (auto node = naive_good_addable(b, r, params)) {
          auto t = b.with_added(*node);
          next.insert(t);
          arrows.emplace_back(m, b, r, std::move(t));
        }
    levels.emplace_back(next.begin(), next.end());
  }
  auto position = [&](std::size_t m, const Bipartition& b) {
    const auto& lv = levels[m];
    return static_cast<std::size_t>(std::lower_bound(lv.begin(), lv.end(), b) - lv.begin());
  };
  std::vector<Edge> edges;
  for (const auto& [m, from, r, to] : arrows) edges.push_back(Edge{m, position(m - 1, from), position(m, to), r});
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.level, x.source, x.residue, x.target) < std::tie(y.level, y.source, y.residue, y.target);
  });
  return Lattice::from_parts(params, std::move(levels), std::move(edges));
}

struct PathSet {
  std::vector<Path> paths;
  bool truncated = false;
};

/// Every residue sequence leading from the empty bipartition to `b` along
/// lattice edges, stopping after `cap` paths.
inline PathSet all_paths(const Bipartition& b, const Lattice& lattice, std::size_t cap = 100'000) {
  dnbranch::detail::require_in_lattice(b, lattice);
  PathSet out;
  std::vector<Residue> suffix;
  std::function<void(const Bipartition&)> walk = [&](const Bipartition& cur) {
    if (out.truncated) return;
    if (cur.size() == 0) {
      if (out.paths.size() == cap) {
        out.truncated = true;
        return;
      }
      out.paths.push_back(Path{std::vector<Residue>(suffix.rbegin(), suffix.rend())});
      return;
    }
    for (const auto& e : lattice.in_edges(cur)) {
      suffix.push_back(e.residue);
      walk(lattice.level(e.level - 1)[e.source]);
      suffix.pop_back();
    }
  };
  walk(b);
  return out;
}

namespace detail {

inline BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

// Hook length formula for the number of standard tableaux of shape p.
inline BigInt standard_tableaux(const Partition& p) {
  BigInt hooks = 1;
  for (std::size_t r = 1; r <= p.length(); ++r) {
    for (int c = 1; c <= p.part(r); ++c) {
      std::size_t leg = 0;
      while (p.part(r + leg + 1) >= c) ++leg;
      hooks *= static_cast<unsigned>(p.part(r) - c) + leg + 1;
    }
  }
  return factorial(p.size()) / hooks;
}

}  // namespace detail

/// Number of standard bitableaux: C(n, |first|) f(first) f(second).
inline BigInt bipartition_dimension(const Bipartition& b) {
  const std::size_t n = b.size();
  const BigInt binom = detail::factorial(n) / (detail::factorial(b.first().size()) * detail::factorial(b.second().size()));
  return binom * detail::standard_tableaux(b.first()) * detail::standard_tableaux(b.second());
}

namespace detail {

inline bool restricted_by_definition(const Partition& p, const Modulus& l) {
  if (l.is_infinite()) return true;
  const auto parts = p.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int next = i + 1 < parts.size() ? parts[i + 1] : 0;
    if (parts[i] - next >= l.value()) return false;
  }
  return true;
}

template <typename T>
std::string join(const std::vector<T>& items) {
  std::string out = "{";
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += ", ";
    out += items[k].to_string();
  }
  return out + "}";
}

inline VerificationReport start(std::string suite, const CrystalParams& params, std::size_t n_min, std::size_t n_max) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.params = params;
  r.n_min = n_min;
  r.n_max = n_max;
  return r;
}

}  // namespace detail

/// For every Kleshchev bipartition up to level n and every path to it, the
/// path shifted by l replays to one and the same bipartition h(lambda).
/// Paths come from the naive lattice; h comes from the engine. Regime A has
/// no shift (h is the component swap) and passes vacuously.
inline VerificationReport verify_h_path_independence(std::size_t n, const CrystalParams& params,
                                                      std::size_t cap = 100'000) {
  detail::Stopwatch clock;
  auto report = detail::start("path-independence", params, 0, n);
  if (params.regime == Regime::A) return report;
  const auto naive = naive_lattice(n, params);
  const auto engine = build_lattice(n, params);
  const int shift = params.l.value();
  for (std::size_t m = 0; m <= n; ++m) {
    for (const auto& lambda : naive.level(m)) {
      if (!engine.contains(lambda)) {
        report.fail(lambda.to_string(), "vertex of the engine lattice", "missing");
        continue;
      }
      const auto expected = h(lambda, engine);
      auto paths = all_paths(lambda, naive, cap);
      report.truncated = report.truncated || paths.truncated;
      for (const auto& p : paths.paths) {
        ++report.cases;
        const auto got = naive_replay(p.shifted(shift), params);
        if (!got || *got != expected)
          report.fail(lambda.to_string() + " via " + p.to_string(), expected.to_string(),
                      got ? got->to_string() : std::string("not replayable"));
      }
    }
  }
  if (engine.vertex_count() != naive.vertex_count())
    report.fail("vertex count", std::to_string(naive.vertex_count()), std::to_string(engine.vertex_count()));
  report.elapsed_seconds = clock.seconds();
  return report;
}

/// h(h(lambda)) = lambda on every level up to n, h stays inside the lattice,
/// and h is the component swap on every level m with no vanishing 1 + q^i
/// (i < m).
inline VerificationReport verify_h_involution(std::size_t n, const CrystalParams& params) {
  detail::Stopwatch clock;
  auto report = detail::start("involution", params, 0, n);
  const auto lattice = build_lattice(n, params);
  for (std::size_t m = 0; m <= n; ++m) {
    const bool swap_level = classify_regime(m, params.e).regime == Regime::A;
    for (const auto& lambda : lattice.level(m)) {
      ++report.cases;
      const auto image = h(lambda, lattice);
      if (!lattice.contains(image)) {
        report.fail(lambda.to_string(), "h(lambda) in the lattice", image.to_string());
        continue;
      }
      if (auto back = h(image, lattice); back != lambda) report.fail(lambda.to_string(), lambda.to_string(), back.to_string());
      if (swap_level && image != hat(lambda))
        report.fail(lambda.to_string() + " (swap level)", hat(lambda).to_string(), image.to_string());
    }
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

/// Every fixed point of h sits at even n. In regime B its residue counts
/// satisfy N_k = N_{k+l}; in regime A the fixed points are exactly the
/// bipartitions with equal components.
inline VerificationReport verify_fixed_points(std::size_t n, const CrystalParams& params) {
  detail::Stopwatch clock;
  auto report = detail::start("fixed-points", params, 1, n);
  const auto lattice = build_lattice(n, params);
  for (std::size_t m = 1; m <= n; ++m) {
    for (const auto& lambda : lattice.level(m)) {
      const bool fixed = h(lambda, lattice) == lambda;
      if (params.regime == Regime::A && fixed != (lambda.first() == lambda.second()))
        report.fail(lambda.to_string(), "fixed iff components equal", fixed ? "fixed" : "not fixed");
      if (!fixed) continue;
      ++report.cases;
      if (m % 2 != 0) report.fail(lambda.to_string(), "even size", std::to_string(m));
      if (params.regime == Regime::B) {
        // Count residues along the canonical path, independent of the node geometry.
        std::vector<std::size_t> counts(static_cast<std::size_t>(params.e.value()), 0);
        for (const auto& r : canonical_path(lambda, lattice).residues) ++counts[static_cast<std::size_t>(r.value)];
        const auto l = static_cast<std::size_t>(params.l.value());
        for (std::size_t k = 0; k < counts.size(); ++k)
          if (counts[k] != counts[(k + l) % counts.size()])
            report.fail(lambda.to_string(), "N_" + std::to_string(k) + " = N_" + std::to_string((k + l) % counts.size()),
                        std::to_string(counts[k]) + " vs " + std::to_string(counts[(k + l) % counts.size()]));
      }
    }
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

/// At most one good node A has lambda \ A fixed by h; if it exists, lambda is
/// not fixed and lambda \ B != h(lambda \ C) for all B and all C != A; if it
/// does not and lambda is not fixed, lambda \ B != h(lambda \ C) for all good
/// B != C. In regime A, B and C range over all removable nodes for the first
/// statement.
inline VerificationReport verify_uniqueness_and_distinctness(std::size_t n, const CrystalParams& params) {
  detail::Stopwatch clock;
  auto report = detail::start("uniqueness", params, 1, n);
  const auto lattice = build_lattice(n, params);
  auto involution = [&](const Bipartition& b) {
    return params.regime == Regime::A ? hat(b) : h(b, lattice);
  };
  for (std::size_t m = 1; m <= n; ++m) {
    for (const auto& lambda : lattice.level(m)) {
      ++report.cases;
      const auto good = naive_good_nodes(lambda, params);
      std::vector<Node> special;
      for (const auto& a : good)
        if (auto rest = lambda.with_removed(a); involution(rest) == rest) special.push_back(a);
      if (special.size() > 1) {
        report.fail(lambda.to_string(), "at most one special node", detail::join(special));
        continue;
      }
      const bool fixed = involution(lambda) == lambda;
      if (!special.empty()) {
        if (fixed) report.fail(lambda.to_string(), "almost symmetric implies not fixed", "fixed");
        const auto pool = params.regime == Regime::A ? removable_nodes(lambda) : good;
        for (const auto& b : pool)
          for (const auto& c : pool)
            if (c != special.front() && lambda.with_removed(b) == involution(lambda.with_removed(c)))
              report.fail(lambda.to_string(), "lambda\\B != h(lambda\\C) for C != A",
                          "B=" + b.to_string() + " C=" + c.to_string());
      } else if (!fixed) {
        for (const auto& b : good)
          for (const auto& c : good)
            if (b != c && lambda.with_removed(b) == involution(lambda.with_removed(c)))
              report.fail(lambda.to_string(), "distinct classes after removing good nodes",
                          "B=" + b.to_string() + " C=" + c.to_string());
      }
    }
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

/// Regime A with parameter l: lattice levels are exactly the pairs of
/// l-restricted partitions, and the good nodes of a bipartition are the good
/// nodes of its two components taken separately.
inline VerificationReport verify_regimeA_decoupling(std::size_t n, const Modulus& l) {
  detail::Stopwatch clock;
  const auto params = CrystalParams::regime_a(l);
  auto report = detail::start("decoupling", params, 0, n);
  const auto lattice = build_lattice(n, params);
  for (std::size_t m = 0; m <= n; ++m) {
    std::vector<Bipartition> expected;
    for (std::size_t k = 0; k <= m; ++k)
      for (const auto& a : all_partitions(k))
        for (const auto& b : all_partitions(m - k))
          if (detail::restricted_by_definition(a, l) && detail::restricted_by_definition(b, l)) expected.emplace_back(a, b);
    std::sort(expected.begin(), expected.end());
    const auto level = lattice.level(m);
    ++report.cases;
    if (!std::equal(expected.begin(), expected.end(), level.begin(), level.end()))
      report.fail("level " + std::to_string(m), std::to_string(expected.size()) + " restricted pairs",
                  std::to_string(level.size()) + " lattice vertices");

    // Good nodes of each component seen as a single partition in its own crystal.
    const auto single = CrystalParams::regime_a(l);
    for (const auto& lambda : level) {
      ++report.cases;
      std::vector<Node> componentwise;
      for (int c = 1; c <= 2; ++c) {
        for (auto node : naive_good_nodes(Bipartition(lambda.component(c), {}), single)) {
          node.component = c;
          componentwise.push_back(node);
        }
      }
      std::sort(componentwise.begin(), componentwise.end());
      std::vector<Node> engine;
      for (const auto& g : good_nodes(lambda, params)) engine.push_back(g.node);
      if (engine != componentwise) report.fail(lambda.to_string(), detail::join(componentwise), detail::join(engine));
    }
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

/// The level-1 engine on single partitions generates exactly the
/// e-restricted partitions at every size up to n.
inline VerificationReport verify_level_one_calibration(std::size_t n, const Modulus& e) {
  detail::Stopwatch clock;
  auto report = detail::start("level-one", CrystalParams::regime_a(e), 0, n);
  const auto levels = build_partition_levels(n, e);
  for (std::size_t m = 0; m <= n; ++m) {
    ++report.cases;
    std::vector<Partition> expected;
    for (const auto& p : all_partitions(m))
      if (detail::restricted_by_definition(p, e)) expected.push_back(p);
    std::sort(expected.begin(), expected.end());
    if (expected != levels[m])
      report.fail("size " + std::to_string(m), std::to_string(expected.size()) + " restricted partitions",
                  std::to_string(levels[m].size()) + " generated");
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

/// Crystal axioms over every vertex up to level n and every residue. The
/// engine's good nodes must match the naive rule; e~ must undo f~ while eps
/// and phi move by exactly one.
inline VerificationReport verify_crystal_axioms(std::size_t n, const CrystalParams& params) {
  detail::Stopwatch clock;
  auto report = detail::start("crystal-axioms", params, 0, n);
  const auto lattice = build_lattice(n, params);
  for (std::size_t m = 0; m <= n; ++m) {
    for (const auto& lambda : lattice.level(m)) {
      for (const auto& i : naive_residues(lambda, params)) {
        ++report.cases;
        const auto tag = lambda.to_string() + " i=" + i.to_string();
        const auto sig = i_signature(lambda, i, params);
        auto show = [](const std::optional<Node>& x) { return x ? x->to_string() : std::string("none"); };
        if (auto naive = naive_good_removable(lambda, i, params); naive != sig.good_removable())
          report.fail(tag + " good removable", show(naive), show(sig.good_removable()));
        if (auto naive = naive_good_addable(lambda, i, params); naive != sig.good_addable())
          report.fail(tag + " good addable", show(naive), show(sig.good_addable()));
        if (auto up = f_tilde(lambda, i, params)) {
          if (e_tilde(*up, i, params) != lambda) report.fail(tag + " e~f~", lambda.to_string(), "different");
          const auto s2 = i_signature(*up, i, params);
          if (s2.eps() != sig.eps() + 1 || s2.phi() + 1 != sig.phi())
            report.fail(tag + " eps/phi after f~", std::to_string(sig.eps() + 1) + "/" + std::to_string(sig.phi() - 1),
                        std::to_string(s2.eps()) + "/" + std::to_string(s2.phi()));
          if (m < n && !lattice.contains(*up)) report.fail(tag + " f~ leaves the lattice", "member", up->to_string());
        }
        if (auto down = e_tilde(lambda, i, params)) {
          if (f_tilde(*down, i, params) != lambda) report.fail(tag + " f~e~", lambda.to_string(), "different");
          const auto s2 = i_signature(*down, i, params);
          if (s2.eps() + 1 != sig.eps() || s2.phi() != sig.phi() + 1)
            report.fail(tag + " eps/phi after e~", std::to_string(sig.eps() - 1) + "/" + std::to_string(sig.phi() + 1),
                        std::to_string(s2.eps()) + "/" + std::to_string(s2.phi()));
        }
      }
    }
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

/// Every socle at levels 2..n is duplicate-free, its summands are labels of
/// level n-1, and the two split labels of a fixed point have equal socles.
inline VerificationReport verify_multiplicity_free(std::size_t n, const CrystalParams& params) {
  detail::Stopwatch clock;
  auto report = detail::start("multiplicity-free", params, 2, n);
  const auto lattice = build_lattice(n, params);
  for (std::size_t m = 2; m <= n; ++m) {
    const auto below = equivalence_classes(lattice.level(m - 1), lattice);
    const auto graph = branching_graph(m, lattice);
    for (std::size_t k = 0; k < graph.size(); ++k) {
      const auto& soc = graph[k];
      ++report.cases;
      if (!soc.duplicate_free()) report.fail(soc.source.to_string(), "duplicate-free", detail::join(soc.summands));
      for (const auto& s : soc.summands)
        if (!std::binary_search(below.begin(), below.end(), s))
          report.fail(soc.source.to_string(), "summands label level " + std::to_string(m - 1), s.to_string());
      if (soc.source.kind == LabelKind::split && soc.source.sign == Sign::plus) {
        const auto& minus = graph.at(k + 1);
        if (minus.source.rep != soc.source.rep || minus.summands != soc.summands)
          report.fail(soc.source.to_string(), detail::join(soc.summands), detail::join(minus.summands));
      }
    }
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

/// Dimension of the module carrying `label`: the bitableau count, halved for
/// split labels.
inline BigInt label_dimension(const IrreducibleLabel& label) {
  const auto d = bipartition_dimension(label.rep);
  return label.kind == LabelKind::split ? BigInt(d / 2) : d;
}

/// In the semisimple case the socle is the whole restriction, so the
/// dimensions of the summands must add up to the dimension of the label.
inline VerificationReport verify_semisimple_branching(std::size_t n, const CrystalParams& params) {
  if (!is_semisimple_D(n, params.e))
    throw Error(Errc::not_semisimple, "H(D_" + std::to_string(n) + ") is not semisimple for e=" + params.e.to_string());
  detail::Stopwatch clock;
  auto report = detail::start("semisimple", params, 2, n);
  const auto lattice = build_lattice(n, params);
  for (std::size_t m = 2; m <= n; ++m) {
    for (const auto& soc : branching_graph(m, lattice)) {
      ++report.cases;
      BigInt sum = 0;
      for (const auto& s : soc.summands) sum += label_dimension(s);
      const auto whole = label_dimension(soc.source);
      if (sum != whole) report.fail(soc.source.to_string(), whole.str(), sum.str());
    }
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"path-independence", "involution",   "fixed-points",
                                              "uniqueness",        "decoupling",   "level-one",
                                              "crystal-axioms",    "multiplicity-free", "semisimple"};
  return names;
}

/// Runs a suite by name. Parameters come from classify_regime(n, e), except
/// for "decoupling" (regime A with l = e) and "level-one" (partitions mod e).
inline VerificationReport run_suite(std::string_view name, std::size_t n, const Modulus& e) {
  if (name == "decoupling") return verify_regimeA_decoupling(n, e);
  if (name == "level-one") return verify_level_one_calibration(n, e);
  const auto params = classify_regime(n, e);
  if (name == "path-independence") return verify_h_path_independence(n, params);
  if (name == "involution") return verify_h_involution(n, params);
  if (name == "fixed-points") return verify_fixed_points(n, params);
  if (name == "uniqueness") return verify_uniqueness_and_distinctness(n, params);
  if (name == "crystal-axioms") return verify_crystal_axioms(n, params);
  if (name == "multiplicity-free") return verify_multiplicity_free(n, params);
  if (name == "semisimple") return verify_semisimple_branching(n, params);
  throw Error(Errc::invalid_argument, "unknown suite '" + std::string(name) + "'");
}

}  // namespace dnbranch::oracle

#endif  // DNBRANCH_ORACLE_HPP
