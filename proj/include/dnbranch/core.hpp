#ifndef DNBRANCH_CORE_HPP
#define DNBRANCH_CORE_HPP

// Bipartitions and the geometry of their nodes.
//
// Nodes are addressed as (component, row, col), all 1-based. The text form of
// a bipartition joins its components with '|' and writes an empty one as '-':
// "2,1|1,1" or "-|-".

#include <algorithm>
#include <array>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dnbranch/error.hpp"

namespace dnbranch {

/// A modulus for residues: a positive integer, or the distinguished
/// infinite value (residues then live in all of Z).
class Modulus {
 public:
  static Modulus infinite() noexcept { return Modulus(); }

  explicit Modulus(int value) : value_(value) {
    if (value < 1) throw Error(Errc::invalid_e, "modulus must be positive, got " + std::to_string(value));
  }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  int value() const {
    if (!value_) throw Error(Errc::invalid_argument, "infinite modulus has no integer value");
    return *value_;
  }

  /// Canonical representative: in [0, m) when finite, unchanged otherwise.
  int reduce(long long x) const noexcept {
    if (!value_) return static_cast<int>(x);
    const long long m = *value_;
    return static_cast<int>(((x % m) + m) % m);
  }

  std::string to_string() const { return value_ ? std::to_string(*value_) : std::string("inf"); }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  Modulus() = default;
  std::optional<int> value_;
};

/// Parses "inf" or a decimal integer >= 2.
inline Modulus parse_e(std::string_view text) {
  if (text == "inf" || text == "infinity") return Modulus::infinite();
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(Errc::invalid_e, "expected an integer >= 2 or 'inf', got '" + std::string(text) + "'");
  if (v < 2) throw Error(Errc::invalid_e, "e must be >= 2 or 'inf', got " + std::to_string(v));
  return Modulus(v);
}

/// A residue class. `orbit` separates the two decoupled copies of the index
/// set in regime A (orbit = component - 1); it is always 0 in regime B and
/// for single partitions.
struct Residue {
  int value = 0;
  Modulus modulus = Modulus::infinite();
  int orbit = 0;

  Residue shifted(int by) const { return Residue{modulus.reduce(static_cast<long long>(value) + by), modulus, orbit}; }

  std::string to_string() const { return std::to_string(value) + (orbit != 0 ? "'" : ""); }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.value == b.value && a.orbit == b.orbit && a.modulus == b.modulus;
  }
  friend std::strong_ordering operator<=>(const Residue& a, const Residue& b) {
    if (auto c = a.orbit <=> b.orbit; c != 0) return c;
    return a.value <=> b.value;
  }
};

enum class Regime { A, B };

inline std::string_view regime_name(Regime r) noexcept { return r == Regime::A ? "A" : "B"; }

/// Parameters of the crystal on bipartitions.
///
/// Regime B: e finite and even, l = e/2, multicharge (0, l); residues of both
/// components live in one Z/eZ and interact in the signature rule.
/// Regime A: l = e (finite or infinite), no multicharge; the components are
/// decoupled and each carries its own copy of Z/lZ.
struct CrystalParams {
  Modulus e = Modulus::infinite();
  Regime regime = Regime::A;
  Modulus l = Modulus::infinite();
  std::array<int, 2> multicharge{0, 0};

  static CrystalParams regime_a(Modulus e) { return CrystalParams{e, Regime::A, e, {0, 0}}; }

  static CrystalParams regime_b(int e) {
    if (e < 2 || e % 2 != 0) throw Error(Errc::invalid_e, "regime B needs an even e >= 2, got " + std::to_string(e));
    return CrystalParams{Modulus(e), Regime::B, Modulus(e / 2), {0, e / 2}};
  }

  /// Modulus in which node residues are reduced.
  const Modulus& residue_modulus() const noexcept { return regime == Regime::B ? e : l; }

  std::string describe() const {
    return "e=" + e.to_string() + " regime=" + std::string(regime_name(regime)) + " l=" + l.to_string();
  }

  friend bool operator==(const CrystalParams&, const CrystalParams&) = default;
};

/// Rebuilds parameters from the (e, regime) pair, validating consistency.
inline CrystalParams make_params(Modulus e, Regime regime) {
  if (regime == Regime::B) {
    if (e.is_infinite()) throw Error(Errc::invalid_e, "regime B needs a finite e");
    return CrystalParams::regime_b(e.value());
  }
  if (e.is_finite() && e.value() < 2) throw Error(Errc::invalid_e, "e must be >= 2");
  return CrystalParams::regime_a(e);
}

/// Picks the regime for H(D_n): B exactly when some factor 1 + q^i with
/// 1 <= i <= n-1 vanishes, i.e. e is even and e/2 < n.
inline CrystalParams classify_regime(std::size_t n, Modulus e) {
  if (e.is_finite() && e.value() < 2) throw Error(Errc::invalid_e, "e must be >= 2 or inf, got " + e.to_string());
  if (e.is_finite() && e.value() % 2 == 0 && static_cast<std::size_t>(e.value() / 2) < n)
    return CrystalParams::regime_b(e.value());
  return CrystalParams::regime_a(e);
}

namespace detail {

inline void check_e(const Modulus& e) {
  if (e.is_finite() && e.value() < 2) throw Error(Errc::invalid_e, "e must be >= 2 or inf, got " + e.to_string());
}

// 1 + q^i = 0 iff q^i = -1 iff e is even and i = e/2 mod e.
inline bool one_plus_power_vanishes(std::size_t i, const Modulus& e) {
  if (e.is_infinite() || e.value() % 2 != 0) return false;
  const auto m = static_cast<std::size_t>(e.value());
  return i % m == m / 2;
}

// 1 + q + ... + q^{i-1} = 0 iff e divides i.
inline bool quantum_integer_vanishes(std::size_t i, const Modulus& e) {
  return e.is_finite() && i % static_cast<std::size_t>(e.value()) == 0;
}

}  // namespace detail

/// Semisimplicity of H(D_n): no factor 1 + q^i (i < n) and no quantum
/// integer [i] (i <= n) vanishes.
inline bool is_semisimple_D(std::size_t n, const Modulus& e) {
  detail::check_e(e);
  for (std::size_t i = 1; i + 1 <= n; ++i)
    if (detail::one_plus_power_vanishes(i, e)) return false;
  for (std::size_t i = 1; i <= n; ++i)
    if (detail::quantum_integer_vanishes(i, e)) return false;
  return true;
}

/// Semisimplicity of H(B_n). The extra factor 2 never vanishes since the
/// characteristic is assumed different from 2 throughout.
inline bool is_semisimple_B(std::size_t n, const Modulus& e) { return is_semisimple_D(n, e); }

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw Error(Errc::invalid_argument, "partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw Error(Errc::invalid_argument, "partition parts must be weakly decreasing");
    }
    size_ = static_cast<std::size_t>(std::accumulate(parts_.begin(), parts_.end(), 0LL));
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// Length of row `row` (1-based); 0 past the last row.
  int part(std::size_t row) const noexcept { return row >= 1 && row <= parts_.size() ? parts_[row - 1] : 0; }

  /// Diagram with one more cell at the end of `row`. The caller guarantees
  /// the position is addable.
  Partition with_added(std::size_t row) const {
    Partition p = *this;
    if (row == p.parts_.size() + 1) p.parts_.push_back(1);
    else ++p.parts_[row - 1];
    ++p.size_;
    return p;
  }

  /// Diagram with the last cell of `row` removed. The caller guarantees the
  /// position is removable.
  Partition with_removed(std::size_t row) const {
    Partition p = *this;
    if (--p.parts_[row - 1] == 0) p.parts_.pop_back();
    --p.size_;
    return p;
  }

  std::string to_string() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
  }

 private:
  std::vector<int> parts_;
  std::size_t size_ = 0;
};

/// A cell address. Ordering is (component, row, col).
struct Node {
  int component = 1;
  int row = 1;
  int col = 1;

  std::string to_string() const {
    return "(" + std::to_string(component) + "," + std::to_string(row) + "," + std::to_string(col) + ")";
  }

  friend auto operator<=>(const Node&, const Node&) = default;
};

class Bipartition {
 public:
  Bipartition() = default;
  Bipartition(Partition first, Partition second) : comps_{std::move(first), std::move(second)} {}

  const Partition& first() const noexcept { return comps_[0]; }
  const Partition& second() const noexcept { return comps_[1]; }
  /// Component 1 or 2.
  const Partition& component(int c) const { return comps_.at(static_cast<std::size_t>(c - 1)); }

  std::size_t size() const noexcept { return comps_[0].size() + comps_[1].size(); }

  std::string to_string() const { return comps_[0].to_string() + "|" + comps_[1].to_string(); }

  Bipartition with_added(const Node& node) const {
    Bipartition b = *this;
    auto& p = b.comps_.at(static_cast<std::size_t>(node.component - 1));
    p = p.with_added(static_cast<std::size_t>(node.row));
    return b;
  }

  Bipartition with_removed(const Node& node) const {
    Bipartition b = *this;
    auto& p = b.comps_.at(static_cast<std::size_t>(node.component - 1));
    p = p.with_removed(static_cast<std::size_t>(node.row));
    return b;
  }

  /// Canonical total order: lexicographic on (first parts, second parts).
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  std::array<Partition, 2> comps_;
};

namespace detail {

inline Partition parse_component(std::string_view text, std::size_t offset) {
  if (text == "-") return {};
  if (text.empty()) throw Error(Errc::parse_error, "column " + std::to_string(offset + 1) + ": empty component (use '-')");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t start = pos;
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc{} || ptr == text.data() + pos)
      throw Error(Errc::parse_error, "column " + std::to_string(offset + start + 1) + ": expected a positive integer");
    pos = static_cast<std::size_t>(ptr - text.data());
    if (v < 1) throw Error(Errc::parse_error, "column " + std::to_string(offset + start + 1) + ": parts must be positive");
    if (!parts.empty() && v > parts.back())
      throw Error(Errc::parse_error,
                  "column " + std::to_string(offset + start + 1) + ": parts must be weakly decreasing");
    parts.push_back(v);
    if (pos == text.size()) break;
    if (text[pos] != ',')
      throw Error(Errc::parse_error, "column " + std::to_string(offset + pos + 1) + ": expected ',' or '|'");
    ++pos;
  }
  return Partition(std::move(parts));
}

}  // namespace detail

/// Parses the text form "2,1|1,1". Errors carry a 1-based column.
inline Bipartition parse_bipartition(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos)
    throw Error(Errc::parse_error, "column " + std::to_string(text.size() + 1) + ": expected '|'");
  if (text.find('|', bar + 1) != std::string_view::npos)
    throw Error(Errc::parse_error, "column " + std::to_string(text.find('|', bar + 1) + 1) + ": unexpected second '|'");
  return Bipartition(detail::parse_component(text.substr(0, bar), 0),
                     detail::parse_component(text.substr(bar + 1), bar + 1));
}

/// Residue of a node or addable position.
inline Residue residue(const Node& node, const CrystalParams& params) {
  const long long content = static_cast<long long>(node.col) - node.row;
  if (params.regime == Regime::B) {
    const int offset = params.multicharge[static_cast<std::size_t>(node.component - 1)];
    return Residue{params.e.reduce(content + offset), params.e, 0};
  }
  return Residue{params.l.reduce(content), params.l, node.component - 1};
}

/// True iff every difference parts[i] - parts[i+1] (with a trailing 0) is < l.
inline bool is_l_restricted(const Partition& p, const Modulus& l) {
  if (l.is_infinite()) return true;
  for (std::size_t r = 1; r <= p.length(); ++r)
    if (p.part(r) - p.part(r + 1) >= l.value()) return false;
  return true;
}

inline Bipartition hat(const Bipartition& b) { return Bipartition(b.second(), b.first()); }

/// Removable cells of one partition, rows ascending, tagged with `component`.
inline void append_removable(const Partition& p, int component, std::vector<Node>& out) {
  for (std::size_t r = 1; r <= p.length(); ++r)
    if (p.part(r) > p.part(r + 1)) out.push_back(Node{component, static_cast<int>(r), p.part(r)});
}

/// Addable positions of one partition, rows ascending, tagged with `component`.
inline void append_addable(const Partition& p, int component, std::vector<Node>& out) {
  for (std::size_t r = 1; r <= p.length() + 1; ++r)
    if (r == 1 || p.part(r) < p.part(r - 1)) out.push_back(Node{component, static_cast<int>(r), p.part(r) + 1});
}

inline std::vector<Node> removable_nodes(const Bipartition& b) {
  std::vector<Node> out;
  append_removable(b.first(), 1, out);
  append_removable(b.second(), 2, out);
  return out;
}

inline std::vector<Node> addable_nodes(const Bipartition& b) {
  std::vector<Node> out;
  append_addable(b.first(), 1, out);
  append_addable(b.second(), 2, out);
  return out;
}

inline bool is_removable(const Bipartition& b, const Node& node) {
  if (node.component != 1 && node.component != 2) return false;
  const auto& p = b.component(node.component);
  const auto r = static_cast<std::size_t>(node.row);
  return node.row >= 1 && r <= p.length() && p.part(r) == node.col && p.part(r) > p.part(r + 1);
}

inline bool is_addable(const Bipartition& b, const Node& node) {
  if (node.component != 1 && node.component != 2) return false;
  const auto& p = b.component(node.component);
  const auto r = static_cast<std::size_t>(node.row);
  return node.row >= 1 && r <= p.length() + 1 && p.part(r) + 1 == node.col && (r == 1 || p.part(r) < p.part(r - 1));
}

inline Bipartition remove_node(const Bipartition& b, const Node& node) {
  if (!is_removable(b, node))
    throw Error(Errc::not_removable, node.to_string() + " is not a removable node of " + b.to_string());
  return b.with_removed(node);
}

inline Bipartition add_node(const Bipartition& b, const Node& node) {
  if (!is_addable(b, node))
    throw Error(Errc::invalid_argument, node.to_string() + " is not an addable position of " + b.to_string());
  return b.with_added(node);
}

enum class Dominance { greater_eq, less_eq, equal, incomparable };

/// Bipartition dominance: compare prefix sums of the first component, then
/// |first| plus prefix sums of the second.
inline Dominance dominance(const Bipartition& a, const Bipartition& b) {
  if (a.size() != b.size())
    throw Error(Errc::size_mismatch, "dominance needs equal sizes, got " + std::to_string(a.size()) + " and " +
                                         std::to_string(b.size()));
  if (a == b) return Dominance::equal;
  bool ge = true;
  bool le = true;
  auto compare_prefixes = [&](const Partition& x, const Partition& y, long long base_x, long long base_y) {
    long long sx = base_x;
    long long sy = base_y;
    const std::size_t len = std::max(x.length(), y.length());
    for (std::size_t k = 1; k <= len; ++k) {
      sx += x.part(k);
      sy += y.part(k);
      if (sx < sy) ge = false;
      if (sx > sy) le = false;
    }
  };
  compare_prefixes(a.first(), b.first(), 0, 0);
  compare_prefixes(a.second(), b.second(), static_cast<long long>(a.first().size()),
                   static_cast<long long>(b.first().size()));
  if (ge) return Dominance::greater_eq;
  if (le) return Dominance::less_eq;
  return Dominance::incomparable;
}

/// All partitions of n, in decreasing lexicographic order.
inline std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(static_cast<int>(n), static_cast<int>(n));
  return out;
}

/// All bipartitions of n, sorted by the canonical order.
inline std::vector<Bipartition> all_bipartitions(std::size_t n) {
  std::vector<Bipartition> out;
  for (std::size_t k = 0; k <= n; ++k)
    for (const auto& a : all_partitions(k))
      for (const auto& b : all_partitions(n - k)) out.emplace_back(a, b);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dnbranch

template <>
struct std::hash<dnbranch::Bipartition> {
  std::size_t operator()(const dnbranch::Bipartition& b) const noexcept { return std::hash<std::string>{}(b.to_string()); }
};

#endif  // DNBRANCH_CORE_HPP
