#ifndef DNBRANCH_CRYSTAL_HPP
#define DNBRANCH_CRYSTAL_HPP

// Good nodes and the Kashiwara operators on bipartitions.
//
// For a residue i, the i-signature lists the addable (A) and removable (R)
// i-nodes in reading order: component 1 before component 2, rows ascending.
// Adjacent pairs "R A" cancel repeatedly; what survives has the shape
// A...A R...R. The good removable node is the leftmost surviving R, the good
// addable node the rightmost surviving A.
//
// In regime B both components share one residue set Z/eZ (component 2 is
// offset by l). In regime A the components are decoupled: residues carry an
// orbit tag and each signature only sees the nodes of one component, so the
// good nodes of a bipartition are the union of the good nodes of its
// components.

#include <algorithm>
#include <cstddef>
#include <future>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dnbranch/core.hpp"
#include "dnbranch/error.hpp"

namespace dnbranch {

enum class Mark { addable, removable };

struct SignatureEntry {
  Node node;
  Mark mark = Mark::addable;

  friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
};

struct Signature {
  Residue residue;
  std::vector<SignatureEntry> entries;
  std::vector<SignatureEntry> reduced;

  std::size_t eps() const {
    return static_cast<std::size_t>(
        std::count_if(reduced.begin(), reduced.end(), [](const auto& s) { return s.mark == Mark::removable; }));
  }
  std::size_t phi() const { return reduced.size() - eps(); }

  std::optional<Node> good_removable() const {
    for (const auto& s : reduced)
      if (s.mark == Mark::removable) return s.node;
    return std::nullopt;
  }
  std::optional<Node> good_addable() const {
    for (auto it = reduced.rbegin(); it != reduced.rend(); ++it)
      if (it->mark == Mark::addable) return it->node;
    return std::nullopt;
  }
};

namespace detail {

inline std::vector<SignatureEntry> cancel_pairs(std::span<const SignatureEntry> entries) {
  std::vector<SignatureEntry> stack;
  stack.reserve(entries.size());
  for (const auto& s : entries) {
    if (s.mark == Mark::addable && !stack.empty() && stack.back().mark == Mark::removable) stack.pop_back();
    else stack.push_back(s);
  }
  if (!std::is_partitioned(stack.begin(), stack.end(), [](const auto& s) { return s.mark == Mark::addable; }))
    throw Error(Errc::invariant_violation, "reduced signature has a removable node before an addable one");
  return stack;
}

template <typename ResidueOf>
void collect_entries(const Partition& p, int component, const Residue& target, ResidueOf&& residue_of,
                     std::vector<SignatureEntry>& out) {
  std::vector<Node> add;
  std::vector<Node> rem;
  append_addable(p, component, add);
  append_removable(p, component, rem);
  // Merge by row; an addable and a removable cell in one row never share a residue.
  std::size_t a = 0;
  std::size_t r = 0;
  while (a < add.size() || r < rem.size()) {
    const bool take_add = r == rem.size() || (a < add.size() && add[a].row <= rem[r].row);
    const Node node = take_add ? add[a++] : rem[r++];
    if (residue_of(node) == target) out.push_back({node, take_add ? Mark::addable : Mark::removable});
  }
}

inline Signature finish(Residue residue, std::vector<SignatureEntry> entries) {
  Signature sig{std::move(residue), std::move(entries), {}};
  sig.reduced = cancel_pairs(sig.entries);
  return sig;
}

}  // namespace detail

/// The i-signature of a single partition (level-1 crystal, no offset).
inline Signature partition_signature(const Partition& p, int i, const Modulus& e) {
  const Residue target{e.reduce(i), e, 0};
  std::vector<SignatureEntry> entries;
  detail::collect_entries(p, 1, target,
                          [&](const Node& n) { return Residue{e.reduce(static_cast<long long>(n.col) - n.row), e, 0}; },
                          entries);
  return detail::finish(target, std::move(entries));
}

inline std::optional<Partition> partition_f_tilde(const Partition& p, int i, const Modulus& e) {
  if (auto node = partition_signature(p, i, e).good_addable()) return p.with_added(static_cast<std::size_t>(node->row));
  return std::nullopt;
}

inline std::optional<Partition> partition_e_tilde(const Partition& p, int i, const Modulus& e) {
  if (auto node = partition_signature(p, i, e).good_removable())
    return p.with_removed(static_cast<std::size_t>(node->row));
  return std::nullopt;
}

/// The i-signature of a bipartition under `params`.
inline Signature i_signature(const Bipartition& b, const Residue& i, const CrystalParams& params) {
  std::vector<SignatureEntry> entries;
  auto res = [&](const Node& n) { return residue(n, params); };
  if (params.regime == Regime::B) {
    detail::collect_entries(b.first(), 1, i, res, entries);
    detail::collect_entries(b.second(), 2, i, res, entries);
  } else {
    const int component = i.orbit + 1;
    if (component == 1 || component == 2) detail::collect_entries(b.component(component), component, i, res, entries);
  }
  return detail::finish(i, std::move(entries));
}

inline std::optional<Node> good_removable(const Bipartition& b, const Residue& i, const CrystalParams& params) {
  return i_signature(b, i, params).good_removable();
}

inline std::optional<Node> good_addable(const Bipartition& b, const Residue& i, const CrystalParams& params) {
  return i_signature(b, i, params).good_addable();
}

inline std::optional<Bipartition> e_tilde(const Bipartition& b, const Residue& i, const CrystalParams& params) {
  if (auto node = good_removable(b, i, params)) return b.with_removed(*node);
  return std::nullopt;
}

inline std::optional<Bipartition> f_tilde(const Bipartition& b, const Residue& i, const CrystalParams& params) {
  if (auto node = good_addable(b, i, params)) return b.with_added(*node);
  return std::nullopt;
}

/// Distinct residues of the given nodes, ascending.
inline std::vector<Residue> residues_of(std::span<const Node> nodes, const CrystalParams& params) {
  std::vector<Residue> out;
  out.reserve(nodes.size());
  for (const auto& n : nodes) out.push_back(residue(n, params));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct GoodNode {
  Node node;
  Residue residue;

  friend bool operator==(const GoodNode&, const GoodNode&) = default;
};

/// All good removable nodes, sorted by node. At most one per residue.
inline std::vector<GoodNode> good_nodes(const Bipartition& b, const CrystalParams& params) {
  std::vector<GoodNode> out;
  const auto removable = removable_nodes(b);
  for (const auto& r : residues_of(removable, params))
    if (auto node = good_removable(b, r, params)) out.push_back({*node, r});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.node < y.node; });
  return out;
}

/// A residue sequence i_1, ..., i_n read in the order nodes are added.
struct Path {
  std::vector<Residue> residues;

  Path shifted(int by) const {
    Path p;
    p.residues.reserve(residues.size());
    for (const auto& r : residues) p.residues.push_back(r.shifted(by));
    return p;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < residues.size(); ++k) {
      if (k) out += ',';
      out += residues[k].to_string();
    }
    return out + "]";
  }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Applies f~ for each residue in turn, starting from the empty bipartition.
inline std::optional<Bipartition> replay_path(const Path& path, const CrystalParams& params) {
  Bipartition cur;
  for (const auto& r : path.residues) {
    auto next = f_tilde(cur, r, params);
    if (!next) return std::nullopt;
    cur = std::move(*next);
  }
  return cur;
}

/// An arrow source -> target of the good lattice: `source` indexes level
/// `level - 1`, `target` indexes level `level`.
struct Edge {
  std::size_t level = 0;
  std::size_t source = 0;
  std::size_t target = 0;
  Residue residue;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct LatticeOptions {
  std::size_t vertex_budget = 5'000'000;
  unsigned threads = 1;
};

/// Kleshchev's good lattice truncated at level n. Levels are sorted in the
/// canonical bipartition order; edges are sorted by (level, source, residue,
/// target).
class Lattice {
 public:
  Lattice() = default;

  /// Assembles a lattice from explicit parts, checking its structure: level 0
  /// is the empty bipartition, levels are sorted and duplicate-free, every
  /// edge adds exactly one node whose residue is the edge label, and every
  /// vertex above level 0 has an incoming edge.
  static Lattice from_parts(CrystalParams params, std::vector<std::vector<Bipartition>> levels,
                            std::vector<Edge> edges) {
    Lattice lat;
    lat.params_ = std::move(params);
    lat.levels_ = std::move(levels);
    lat.edges_ = std::move(edges);
    lat.index();
    lat.validate();
    return lat;
  }

  const CrystalParams& params() const noexcept { return params_; }
  std::size_t max_level() const noexcept { return levels_.empty() ? 0 : levels_.size() - 1; }
  std::size_t level_count() const noexcept { return levels_.size(); }
  std::span<const Bipartition> level(std::size_t m) const { return levels_.at(m); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::size_t vertex_count() const noexcept {
    std::size_t total = 0;
    for (const auto& l : levels_) total += l.size();
    return total;
  }

  std::optional<std::size_t> index_of(const Bipartition& b) const {
    const std::size_t m = b.size();
    if (m >= index_.size()) return std::nullopt;
    auto it = index_[m].find(b.to_string());
    if (it == index_[m].end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Bipartition& b) const { return index_of(b).has_value(); }

  /// Edges ending at `b` (empty if `b` is not a vertex).
  std::vector<Edge> in_edges(const Bipartition& b) const {
    std::vector<Edge> out;
    if (auto idx = index_of(b); idx && b.size() > 0)
      for (auto e : incoming_[b.size()][*idx]) out.push_back(edges_[e]);
    return out;
  }

  Lattice truncated(std::size_t n) const {
    if (n >= max_level()) return *this;
    std::vector<std::vector<Bipartition>> levels(levels_.begin(), levels_.begin() + static_cast<std::ptrdiff_t>(n + 1));
    std::vector<Edge> edges;
    for (const auto& e : edges_)
      if (e.level <= n) edges.push_back(e);
    Lattice lat;
    lat.params_ = params_;
    lat.levels_ = std::move(levels);
    lat.edges_ = std::move(edges);
    lat.index();
    return lat;
  }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.params_ == b.params_ && a.levels_ == b.levels_ && a.edges_ == b.edges_;
  }

 private:
  friend Lattice build_lattice(std::size_t, const CrystalParams&, const LatticeOptions&);

  void index() {
    index_.assign(levels_.size(), {});
    incoming_.assign(levels_.size(), {});
    for (std::size_t m = 0; m < levels_.size(); ++m) {
      incoming_[m].assign(levels_[m].size(), {});
      for (std::size_t k = 0; k < levels_[m].size(); ++k) index_[m].emplace(levels_[m][k].to_string(), k);
    }
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const auto& e = edges_[k];
      if (e.level >= 1 && e.level < levels_.size() && e.target < levels_[e.level].size())
        incoming_[e.level][e.target].push_back(k);
    }
  }

  void validate() const {
    auto bad = [](const std::string& what) { throw Error(Errc::invariant_violation, "malformed lattice: " + what); };
    if (levels_.empty() || levels_[0].size() != 1 || levels_[0][0] != Bipartition{}) bad("level 0 must be {-|-}");
    for (std::size_t m = 0; m < levels_.size(); ++m) {
      for (std::size_t k = 0; k < levels_[m].size(); ++k) {
        if (levels_[m][k].size() != m) bad("vertex " + levels_[m][k].to_string() + " at level " + std::to_string(m));
        if (k > 0 && !(levels_[m][k - 1] < levels_[m][k])) bad("level " + std::to_string(m) + " not sorted");
      }
    }
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const auto& e = edges_[k];
      if (e.level == 0 || e.level >= levels_.size() || e.source >= levels_[e.level - 1].size() ||
          e.target >= levels_[e.level].size())
        bad("edge index out of range");
      const auto& from = levels_[e.level - 1][e.source];
      const auto& to = levels_[e.level][e.target];
      std::optional<Node> added;
      for (const auto& n : addable_nodes(from))
        if (from.with_added(n) == to) added = n;
      if (!added) bad("edge " + from.to_string() + " -> " + to.to_string() + " does not add one node");
      if (residue(*added, params_) != e.residue) bad("edge label differs from the added node's residue");
      if (k > 0) {
        const auto& p = edges_[k - 1];
        auto key = [](const Edge& x) { return std::tie(x.level, x.source, x.residue, x.target); };
        if (!(key(p) < key(e))) bad("edges not sorted");
      }
    }
    for (std::size_t m = 1; m < levels_.size(); ++m)
      for (std::size_t k = 0; k < levels_[m].size(); ++k)
        if (incoming_[m][k].empty()) bad(levels_[m][k].to_string() + " has no incoming edge");
  }

  CrystalParams params_;
  std::vector<std::vector<Bipartition>> levels_;
  std::vector<Edge> edges_;
  std::vector<std::unordered_map<std::string, std::size_t>> index_;
  std::vector<std::vector<std::vector<std::size_t>>> incoming_;
};

namespace detail {

struct Arrow {
  std::size_t source;
  Residue residue;
  Bipartition target;
};

inline std::vector<Arrow> expand(std::span<const Bipartition> level, std::size_t begin, std::size_t end,
                                 const CrystalParams& params) {
  std::vector<Arrow> out;
  for (std::size_t s = begin; s < end; ++s) {
    const auto addable = addable_nodes(level[s]);
    for (const auto& r : residues_of(addable, params))
      if (auto t = f_tilde(level[s], r, params)) out.push_back({s, r, std::move(*t)});
  }
  return out;
}

}  // namespace detail

/// Breadth-first construction of levels 0..n by good additions. The result
/// does not depend on `options.threads`.
inline Lattice build_lattice(std::size_t n, const CrystalParams& params, const LatticeOptions& options = {}) {
  Lattice lat;
  lat.params_ = params;
  lat.levels_.push_back({Bipartition{}});
  std::size_t total = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    const auto& prev = lat.levels_.back();
    std::vector<detail::Arrow> arrows;
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(prev.size())));
    if (threads == 1) {
      arrows = detail::expand(prev, 0, prev.size(), params);
    } else {
      std::vector<std::future<std::vector<detail::Arrow>>> parts;
      const std::size_t chunk = (prev.size() + threads - 1) / threads;
      for (std::size_t begin = 0; begin < prev.size(); begin += chunk)
        parts.push_back(std::async(std::launch::async, detail::expand, std::span<const Bipartition>(prev), begin,
                                   std::min(prev.size(), begin + chunk), std::cref(params)));
      for (auto& f : parts) {
        auto chunk_arrows = f.get();
        std::move(chunk_arrows.begin(), chunk_arrows.end(), std::back_inserter(arrows));
      }
    }

    std::vector<Bipartition> next;
    next.reserve(arrows.size());
    for (const auto& a : arrows) next.push_back(a.target);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    total += next.size();
    if (total > options.vertex_budget)
      throw Error(Errc::resource_limit, "lattice exceeds the vertex budget of " + std::to_string(options.vertex_budget) +
                                            " at level " + std::to_string(m));

    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t k = 0; k < next.size(); ++k) idx.emplace(next[k].to_string(), k);
    std::vector<Edge> level_edges;
    level_edges.reserve(arrows.size());
    for (const auto& a : arrows) level_edges.push_back(Edge{m, a.source, idx.at(a.target.to_string()), a.residue});
    std::sort(level_edges.begin(), level_edges.end(), [](const Edge& x, const Edge& y) {
      return std::tie(x.source, x.residue, x.target) < std::tie(y.source, y.residue, y.target);
    });
    lat.edges_.insert(lat.edges_.end(), level_edges.begin(), level_edges.end());
    lat.levels_.push_back(std::move(next));
  }
  lat.index();
  return lat;
}

namespace detail {

inline void require_in_lattice(const Bipartition& b, const Lattice& lattice) {
  if (b.size() > lattice.max_level())
    throw Error(Errc::invalid_argument, "lattice only reaches level " + std::to_string(lattice.max_level()) +
                                            ", cannot look up " + b.to_string());
  if (!lattice.contains(b))
    throw Error(Errc::not_kleshchev, b.to_string() + " is not a Kleshchev bipartition for " +
                                         lattice.params().describe());
}

}  // namespace detail

/// Peels `b` down to the empty bipartition with e~_i for the smallest residue
/// i admitting a good removable node, and returns the residues in the order
/// the nodes are added.
inline Path canonical_path(const Bipartition& b, const Lattice& lattice) {
  detail::require_in_lattice(b, lattice);
  const auto& params = lattice.params();
  Path path;
  Bipartition cur = b;
  while (cur.size() > 0) {
    bool peeled = false;
    const auto removable = removable_nodes(cur);
    for (const auto& r : residues_of(removable, params)) {
      if (auto node = good_removable(cur, r, params)) {
        path.residues.push_back(r);
        cur = cur.with_removed(*node);
        peeled = true;
        break;
      }
    }
    if (!peeled)
      throw Error(Errc::not_kleshchev, "peeling " + b.to_string() + " stranded at " + cur.to_string());
  }
  std::reverse(path.residues.begin(), path.residues.end());
  return path;
}

/// Level-by-level crystal generation on single partitions (level-1 mode,
/// offset 0). Each level is sorted in the canonical partition order.
inline std::vector<std::vector<Partition>> build_partition_levels(std::size_t n, const Modulus& e) {
  std::vector<std::vector<Partition>> levels{{Partition{}}};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Partition> next;
    for (const auto& p : levels.back()) {
      std::vector<Node> add;
      append_addable(p, 1, add);
      std::vector<int> rs;
      for (const auto& a : add) rs.push_back(e.reduce(static_cast<long long>(a.col) - a.row));
      std::sort(rs.begin(), rs.end());
      rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
      for (int r : rs)
        if (auto q = partition_f_tilde(p, r, e)) next.push_back(std::move(*q));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace dnbranch

#endif  // DNBRANCH_CRYSTAL_HPP
