#ifndef DNBRANCH_DMOD_HPP
#define DNBRANCH_DMOD_HPP

// Labels of the simple H(D_n)-modules and the socles of their restrictions
// to H(D_{n-1}).
//
// The involution h on Kleshchev bipartitions is the component swap in
// regime A. In regime B it is computed by shifting every residue of a path
// from the empty bipartition by l and replaying the shifted sequence. The
// same combinatorial h serves every splitting field of characteristic != 2,
// so no field is modelled here.
//
// Simple modules: one UNSPLIT label per two-element h-orbit {lambda, h(lambda)}
// and two SPLIT labels (+/-) per fixed point.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dnbranch/core.hpp"
#include "dnbranch/crystal.hpp"
#include "dnbranch/error.hpp"

namespace dnbranch {

/// The involution h. Requires `b` to be a vertex of `lattice`.
inline Bipartition h(const Bipartition& b, const Lattice& lattice) {
  detail::require_in_lattice(b, lattice);
  const auto& params = lattice.params();
  if (params.regime == Regime::A) return hat(b);
  const Path shifted = canonical_path(b, lattice).shifted(params.l.value());
  auto image = replay_path(shifted, params);
  if (!image)
    throw Error(Errc::shift_replay_failed,
                "shifted path " + shifted.to_string() + " of " + b.to_string() + " is not replayable");
  return *image;
}

enum class LabelKind { unsplit, split };
enum class Sign { plus, minus };

inline char sign_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }

struct IrreducibleLabel {
  LabelKind kind = LabelKind::unsplit;
  Bipartition rep;
  std::optional<Sign> sign;

  static IrreducibleLabel unsplit(Bipartition rep) { return {LabelKind::unsplit, std::move(rep), std::nullopt}; }
  static IrreducibleLabel split(Bipartition rep, Sign s) { return {LabelKind::split, std::move(rep), s}; }

  std::size_t size() const noexcept { return rep.size(); }

  /// "D(2|1,1)" for an unsplit class, "D+(1|1)" / "D-(1|1)" for split ones.
  std::string to_string() const {
    std::string out = "D";
    if (kind == LabelKind::split && sign) out += sign_char(*sign);
    return out + "(" + rep.to_string() + ")";
  }

  friend bool operator==(const IrreducibleLabel&, const IrreducibleLabel&) = default;
  friend auto operator<=>(const IrreducibleLabel& a, const IrreducibleLabel& b) {
    return std::tie(a.rep, a.kind, a.sign) <=> std::tie(b.rep, b.kind, b.sign);
  }
};

/// The UNSPLIT label of the class {b, h(b)}; `b` must not be a fixed point.
inline IrreducibleLabel class_label(const Bipartition& b, const Lattice& lattice) {
  auto image = h(b, lattice);
  if (image == b && b.size() > 0)
    throw Error(Errc::invariant_violation, b.to_string() + " is h-fixed and has no unsplit class label");
  return IrreducibleLabel::unsplit(std::min(b, image));
}

/// All labels for the bipartitions of one level, sorted. Level 0 yields the
/// single trivial label of H(D_0).
inline std::vector<IrreducibleLabel> equivalence_classes(std::span<const Bipartition> level, const Lattice& lattice) {
  std::vector<IrreducibleLabel> out;
  for (const auto& b : level) {
    if (b.size() == 0) {
      out.push_back(IrreducibleLabel::unsplit(b));
      continue;
    }
    const auto image = h(b, lattice);
    if (image == b) {
      out.push_back(IrreducibleLabel::split(b, Sign::plus));
      out.push_back(IrreducibleLabel::split(b, Sign::minus));
    } else if (b < image) {
      out.push_back(IrreducibleLabel::unsplit(b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The good node A with b \ A fixed by h, if there is one. Two such nodes
/// cannot happen for a Kleshchev bipartition; they raise MULTIPLE_SPECIAL_NODES.
inline std::optional<Node> almost_symmetric(const Bipartition& b, const Lattice& lattice) {
  detail::require_in_lattice(b, lattice);
  std::optional<Node> special;
  for (const auto& g : good_nodes(b, lattice.params())) {
    const auto removed = b.with_removed(g.node);
    if (h(removed, lattice) != removed) continue;
    if (special)
      throw Error(Errc::multiple_special_nodes, b.to_string() + " has special nodes " + special->to_string() + " and " +
                                                    g.node.to_string());
    special = g.node;
  }
  return special;
}

struct SocleDecomposition {
  IrreducibleLabel source;
  std::vector<IrreducibleLabel> summands;

  bool duplicate_free() const {
    auto sorted = summands;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  friend bool operator==(const SocleDecomposition&, const SocleDecomposition&) = default;
};

/// Socle of the restriction of the simple module `label` to H(D_{n-1}).
///
/// UNSPLIT(lambda), almost symmetric with special node A:
///   D+(lambda\A) + D-(lambda\A) + sum over good C != A of D(lambda\C).
/// UNSPLIT(lambda), not almost symmetric: sum over good C of D(lambda\C).
/// SPLIT(lambda, +/-): one D(mu) per h-class of mu -> lambda, for either sign.
///
/// Summands are sorted but not deduplicated in the unsplit cases, so that
/// multiplicity-freeness stays an observable property.
inline SocleDecomposition socle_restriction(const IrreducibleLabel& label, const Lattice& lattice) {
  const auto& lambda = label.rep;
  if (lambda.size() < 2)
    throw Error(Errc::invalid_argument, "socle_restriction needs a label at level n >= 2, got " + label.to_string());
  detail::require_in_lattice(lambda, lattice);
  const auto& params = lattice.params();
  const auto image = h(lambda, lattice);

  SocleDecomposition out;
  if (label.kind == LabelKind::split) {
    if (image != lambda)
      throw Error(Errc::invalid_argument, lambda.to_string() + " is not h-fixed, so it has no split labels");
    if (!label.sign) throw Error(Errc::invalid_argument, "split label without a sign");
    out.source = label;
    for (const auto& g : good_nodes(lambda, params)) out.summands.push_back(class_label(lambda.with_removed(g.node), lattice));
    std::sort(out.summands.begin(), out.summands.end());
    out.summands.erase(std::unique(out.summands.begin(), out.summands.end()), out.summands.end());
    return out;
  }

  if (image == lambda)
    throw Error(Errc::invalid_argument, lambda.to_string() + " is h-fixed; pass a split label with a sign");
  // Work from the given member of the orbit; the answer only depends on the class.
  out.source = IrreducibleLabel::unsplit(std::min(lambda, image));
  const auto special = almost_symmetric(lambda, lattice);
  for (const auto& g : good_nodes(lambda, params)) {
    const auto removed = lambda.with_removed(g.node);
    if (special && g.node == *special) {
      out.summands.push_back(IrreducibleLabel::split(removed, Sign::plus));
      out.summands.push_back(IrreducibleLabel::split(removed, Sign::minus));
    } else {
      out.summands.push_back(class_label(removed, lattice));
    }
  }
  std::sort(out.summands.begin(), out.summands.end());
  return out;
}

/// N_k: the number of nodes of each residue.
struct ResidueCounts {
  std::map<Residue, std::size_t> counts;

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [r, c] : counts) t += c;
    return t;
  }

  std::size_t at(const Residue& r) const {
    auto it = counts.find(r);
    return it == counts.end() ? 0 : it->second;
  }

  /// N_k == N_{k+shift} for every k.
  bool balanced(int shift) const {
    for (const auto& [r, c] : counts)
      if (at(r.shifted(shift)) != c) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& [r, c] : counts) {
      if (!out.empty()) out += ' ';
      out += r.to_string() + ":" + std::to_string(c);
    }
    return out;
  }
};

/// Residue counts of `b`. In regime B every class 0..e-1 is listed, zeros
/// included; otherwise only residues that occur.
inline ResidueCounts residue_counts(const Bipartition& b, const CrystalParams& params) {
  ResidueCounts rc;
  if (params.regime == Regime::B)
    for (int k = 0; k < params.e.value(); ++k) rc.counts[Residue{k, params.e, 0}] = 0;
  for (int c = 1; c <= 2; ++c) {
    const auto& p = b.component(c);
    for (std::size_t row = 1; row <= p.length(); ++row)
      for (int col = 1; col <= p.part(row); ++col) ++rc.counts[residue(Node{c, static_cast<int>(row), col}, params)];
  }
  return rc;
}

/// Socle decompositions for every label at level n, in label order.
inline std::vector<SocleDecomposition> branching_graph(std::size_t n, const Lattice& lattice) {
  if (n < 2) throw Error(Errc::invalid_argument, "branching_graph needs n >= 2");
  if (n > lattice.max_level())
    throw Error(Errc::invalid_argument, "lattice only reaches level " + std::to_string(lattice.max_level()));
  std::vector<SocleDecomposition> out;
  for (const auto& label : equivalence_classes(lattice.level(n), lattice)) out.push_back(socle_restriction(label, lattice));
  return out;
}

}  // namespace dnbranch

#endif  // DNBRANCH_DMOD_HPP
