#ifndef DNBRANCH_TOOLS_CLI_HPP
#define DNBRANCH_TOOLS_CLI_HPP

// The dnbranch command line: lattice | labels | branch | involution | dims | verify.
//
// Exit codes: 0 success or passing suite, 1 runtime error or failing suite,
// 2 usage error, 3 input bipartition is not Kleshchev.

#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dnbranch/dnbranch.hpp"

namespace dnbranch::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2, domain = 3 };

enum class Format { text, json, dot };

struct CliConfig {
  std::string e;
  std::optional<std::size_t> n;
  std::string format = "text";
  std::optional<std::string> bipartition;
  std::optional<std::string> sign;
  std::optional<std::string> suite;
  bool no_cache = false;
};

namespace detail {

inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::invalid_e:
    case Errc::invalid_argument:
    case Errc::parse_error:
    case Errc::size_mismatch:
    case Errc::not_semisimple:
      return usage;
    case Errc::not_kleshchev:
      return domain;
    default:
      return failure;
  }
}

inline Format parse_format(const std::string& text) {
  if (text == "text") return Format::text;
  if (text == "json") return Format::json;
  if (text == "dot") return Format::dot;
  throw Error(Errc::invalid_argument, "--format must be text, json or dot");
}

inline std::string header(std::string_view command, const CrystalParams& params, std::size_t n) {
  return "# " + std::string(command) + " " + params.describe() + " n=" + std::to_string(n) + "\n";
}

inline Lattice obtain_lattice(std::size_t n, const CrystalParams& params, bool use_cache, std::ostream& err) {
  if (use_cache) {
    io::LatticeCache cache;
    auto loaded = cache.load(params, n);
    if (loaded.status == io::CacheStatus::hit) return std::move(*loaded.lattice);
    if (loaded.status == io::CacheStatus::corrupt || loaded.status == io::CacheStatus::io_error)
      err << "warning: " << loaded.message << "\n";
    auto lattice = build_lattice(n, params);
    try {
      cache.store(lattice);
    } catch (const Error& e) {
      err << "warning: " << e.what() << "\n";
    }
    return lattice;
  }
  return build_lattice(n, params);
}

inline std::size_t require_n(const CliConfig& cfg) {
  if (!cfg.n) throw Error(Errc::invalid_argument, "--n is required");
  return *cfg.n;
}

inline Modulus require_e(const CliConfig& cfg) {
  if (cfg.e.empty()) throw Error(Errc::invalid_e, "--e is required");
  return parse_e(cfg.e);
}

// n defaults to the size of --bipartition; both must agree when given.
inline std::size_t resolve_n(const CliConfig& cfg, const Bipartition& b) {
  if (cfg.n && *cfg.n != b.size())
    throw Error(Errc::invalid_argument, "--n " + std::to_string(*cfg.n) + " does not match the size " +
                                            std::to_string(b.size()) + " of " + b.to_string());
  return b.size();
}

inline void print_socle(std::ostream& out, const SocleDecomposition& soc) {
  out << "soc(" << soc.source.to_string() << ") =";
  if (soc.summands.empty()) out << " 0";
  for (std::size_t k = 0; k < soc.summands.size(); ++k) out << (k ? " + " : " ") << soc.summands[k].to_string();
  out << "\n";
}

}  // namespace detail

inline int cmd_lattice(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto format = detail::parse_format(cfg.format);
  const auto e = detail::require_e(cfg);
  const auto n = detail::require_n(cfg);
  const auto params = classify_regime(n, e);
  const auto lattice = detail::obtain_lattice(n, params, !cfg.no_cache, err);
  if (format == Format::json) {
    out << io::serialize_json({std::string(io::schema_version), params, lattice});
  } else if (format == Format::dot) {
    out << io::emit_dot(lattice);
  } else {
    out << detail::header("lattice", params, n);
    for (std::size_t m = 0; m <= n; ++m) {
      out << "level " << m << " (" << lattice.level(m).size() << ")\n";
      for (const auto& b : lattice.level(m)) out << "  " << b.to_string() << "\n";
    }
    out << "edges (" << lattice.edges().size() << ")\n";
    for (const auto& edge : lattice.edges())
      out << "  " << lattice.level(edge.level - 1)[edge.source].to_string() << " -" << edge.residue.to_string() << "-> "
          << lattice.level(edge.level)[edge.target].to_string() << "\n";
  }
  return ok;
}

inline int cmd_labels(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto format = detail::parse_format(cfg.format);
  if (format == Format::dot) throw Error(Errc::invalid_argument, "labels supports --format text or json");
  const auto e = detail::require_e(cfg);
  const auto n = detail::require_n(cfg);
  const auto params = classify_regime(n, e);
  const auto lattice = detail::obtain_lattice(n, params, !cfg.no_cache, err);
  const auto labels = equivalence_classes(lattice.level(n), lattice);
  if (format == Format::json) {
    out << io::serialize_json({std::string(io::schema_version), params, labels});
    return ok;
  }
  out << detail::header("labels", params, n);
  for (const auto& l : labels) out << l.to_string() << "\n";
  return ok;
}

inline int cmd_branch(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto format = detail::parse_format(cfg.format);
  const auto e = detail::require_e(cfg);
  std::optional<Bipartition> lambda;
  if (cfg.bipartition) lambda = parse_bipartition(*cfg.bipartition);
  const std::size_t n = lambda ? detail::resolve_n(cfg, *lambda) : detail::require_n(cfg);
  if (n < 2) throw Error(Errc::invalid_argument, "branch needs n >= 2");
  if (cfg.sign && *cfg.sign != "+" && *cfg.sign != "-") throw Error(Errc::invalid_argument, "--sign must be + or -");
  if (cfg.sign && !lambda) throw Error(Errc::invalid_argument, "--sign needs --bipartition");
  const auto params = classify_regime(n, e);
  const auto lattice = detail::obtain_lattice(n, params, !cfg.no_cache, err);

  std::vector<SocleDecomposition> result;
  if (lambda) {
    dnbranch::detail::require_in_lattice(*lambda, lattice);
    const bool fixed = h(*lambda, lattice) == *lambda;
    if (cfg.sign && !fixed)
      throw Error(Errc::invalid_argument, lambda->to_string() + " is not h-fixed, --sign does not apply");
    if (!fixed) {
      result.push_back(socle_restriction(IrreducibleLabel::unsplit(*lambda), lattice));
    } else {
      for (Sign s : {Sign::plus, Sign::minus})
        if (!cfg.sign || sign_char(s) == (*cfg.sign)[0])
          result.push_back(socle_restriction(IrreducibleLabel::split(*lambda, s), lattice));
    }
  } else {
    result = branching_graph(n, lattice);
  }

  if (format == Format::json) out << io::serialize_json({std::string(io::schema_version), params, result});
  else if (format == Format::dot) out << io::emit_dot(result, params);
  else {
    out << detail::header("branch", params, n);
    for (const auto& soc : result) detail::print_socle(out, soc);
  }
  return ok;
}

inline int cmd_involution(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (detail::parse_format(cfg.format) != Format::text)
    throw Error(Errc::invalid_argument, "involution supports --format text only");
  const auto e = detail::require_e(cfg);
  if (!cfg.bipartition) throw Error(Errc::invalid_argument, "--bipartition is required");
  const auto lambda = parse_bipartition(*cfg.bipartition);
  const auto n = detail::resolve_n(cfg, lambda);
  const auto params = classify_regime(n, e);
  const auto lattice = detail::obtain_lattice(n, params, !cfg.no_cache, err);
  const auto image = h(lambda, lattice);
  out << detail::header("involution", params, n);
  out << "h(" << lambda.to_string() << ") = " << image.to_string() << "\n";
  out << "fixed: " << (image == lambda ? "yes" : "no") << "\n";
  if (n >= 1) {
    const auto special = almost_symmetric(lambda, lattice);
    out << "almost symmetric: " << (special ? "yes, special node " + special->to_string() : std::string("no")) << "\n";
  }
  const auto counts = residue_counts(lambda, params);
  out << "residue counts: " << (counts.counts.empty() ? std::string("none") : counts.to_string()) << "\n";
  if (params.regime == Regime::B) {
    const int l = params.l.value();
    out << "balanced (N_k = N_{k+" << l << "}): " << (counts.balanced(l) ? "yes" : "no") << "\n";
  }
  return ok;
}

inline int cmd_dims(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  if (detail::parse_format(cfg.format) != Format::text) throw Error(Errc::invalid_argument, "dims supports --format text only");
  if (!cfg.bipartition) throw Error(Errc::invalid_argument, "--bipartition is required");
  out << oracle::bipartition_dimension(parse_bipartition(*cfg.bipartition)).str() << "\n";
  return ok;
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const auto format = detail::parse_format(cfg.format);
  if (format == Format::dot) throw Error(Errc::invalid_argument, "verify supports --format text or json");
  if (!cfg.suite) throw Error(Errc::invalid_argument, "--suite is required (one of path-independence, involution, ...)");
  const auto e = detail::require_e(cfg);
  const auto n = detail::require_n(cfg);
  const auto report = oracle::run_suite(*cfg.suite, n, e);
  if (format == Format::json) {
    out << io::serialize_json({std::string(io::schema_version), report.params, report});
  } else {
    out << "suite " << report.suite << " " << report.params.describe() << " n=" << report.n_min << ".." << report.n_max
        << "\n";
    out << "cases " << report.cases << "\n";
    for (const auto& f : report.failures)
      out << "failure " << f.input << ": expected " << f.expected << ", got " << f.got << "\n";
    if (report.truncated) out << "path cap reached\n";
    out << "verdict " << oracle::verdict_name(report.verdict()) << "\n";
    out << "elapsed " << report.elapsed_seconds << "s\n";
  }
  return report.passed() ? ok : failure;
}

/// Parses argv and dispatches. Never throws.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular branching of type-D Hecke algebras via Kleshchev bipartitions", "dnbranch"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_common = [&](CLI::App* sub, bool wants_e, bool wants_bipartition) {
    if (wants_e) sub->add_option("--e", cfg.e, "quantum characteristic: integer >= 2 or inf");
    sub->add_option("--n", cfg.n, "level (number of nodes)");
    sub->add_option("--format", cfg.format, "text, json or dot");
    if (wants_bipartition) sub->add_option("--bipartition", cfg.bipartition, "bipartition such as \"2,1|1,1\"");
    sub->add_flag("--no-cache", cfg.no_cache, "do not read or write the lattice cache");
  };

  auto* lattice = app.add_subcommand("lattice", "Kleshchev's good lattice up to level n");
  add_common(lattice, true, false);
  auto* labels = app.add_subcommand("labels", "labels of the simple H(D_n)-modules");
  add_common(labels, true, false);
  auto* branch = app.add_subcommand("branch", "socle of the restriction to H(D_{n-1})");
  add_common(branch, true, true);
  branch->add_option("--sign", cfg.sign, "+ or -, for h-fixed bipartitions");
  auto* involution = app.add_subcommand("involution", "the involution h and almost symmetry");
  add_common(involution, true, true);
  auto* dims = app.add_subcommand("dims", "number of standard bitableaux");
  add_common(dims, false, true);
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, true, false);
  verify->add_option("--suite", cfg.suite, "suite name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (lattice->parsed()) return cmd_lattice(cfg, out, err);
    if (labels->parsed()) return cmd_labels(cfg, out, err);
    if (branch->parsed()) return cmd_branch(cfg, out, err);
    if (involution->parsed()) return cmd_involution(cfg, out, err);
    if (dims->parsed()) return cmd_dims(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return detail::exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }
  return usage;
}

}  // namespace dnbranch::cli

#endif  // DNBRANCH_TOOLS_CLI_HPP
