#ifndef DNBRANCH_IO_HPP
#define DNBRANCH_IO_HPP

// JSON documents and DOT rendering, plus the on-disk lattice cache.
//
// Every document has the shape
//
//   {"schema": "dnbranch/1", "e": 4 | "inf", "regime": "A" | "B",
//    "l": 2 | "inf", "kind": "lattice" | "labels" | "branching" | "report",
//    "data": ...}
//
// Keys are sorted and arrays follow the library's deterministic orders, so
// equal documents serialize to identical bytes. Bipartitions are strings in
// the "2,1|1,1" text form.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <system_error>
#include <unordered_map>
#include <variant>
#include <vector>

#include "json.hpp"

#include "dnbranch/core.hpp"
#include "dnbranch/crystal.hpp"
#include "dnbranch/dmod.hpp"
#include "dnbranch/error.hpp"
#include "dnbranch/oracle.hpp"

namespace dnbranch::io {

using json = nlohmann::json;

inline constexpr std::string_view schema_version = "dnbranch/1";

using Payload = std::variant<Lattice, std::vector<IrreducibleLabel>, std::vector<SocleDecomposition>,
                             oracle::VerificationReport>;

struct Document {
  std::string schema = std::string(schema_version);
  CrystalParams params;
  Payload payload;

  std::string_view kind() const {
    switch (payload.index()) {
      case 0: return "lattice";
      case 1: return "labels";
      case 2: return "branching";
      default: return "report";
    }
  }
};

namespace detail {

inline json modulus_json(const Modulus& m) { return m.is_infinite() ? json("inf") : json(m.value()); }

inline Modulus modulus_from(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Modulus::infinite();
  if (j.is_number_integer()) return Modulus(j.get<int>());
  throw Error(Errc::schema_mismatch, "expected an integer or \"inf\", got " + j.dump());
}

inline json label_json(const IrreducibleLabel& label) {
  json j = {{"kind", label.kind == LabelKind::split ? "split" : "unsplit"}, {"rep", label.rep.to_string()}};
  if (label.kind == LabelKind::split && label.sign) j["sign"] = std::string(1, sign_char(*label.sign));
  return j;
}

inline IrreducibleLabel label_from(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  auto rep = parse_bipartition(j.at("rep").get<std::string>());
  if (kind == "unsplit") return IrreducibleLabel::unsplit(std::move(rep));
  if (kind != "split") throw Error(Errc::schema_mismatch, "unknown label kind '" + kind + "'");
  const auto sign = j.at("sign").get<std::string>();
  if (sign != "+" && sign != "-") throw Error(Errc::schema_mismatch, "label sign must be \"+\" or \"-\"");
  return IrreducibleLabel::split(std::move(rep), sign == "+" ? Sign::plus : Sign::minus);
}

inline json lattice_json(const Lattice& lat) {
  json levels = json::array();
  for (std::size_t m = 0; m < lat.level_count(); ++m) {
    json level = json::array();
    for (const auto& b : lat.level(m)) level.push_back(b.to_string());
    levels.push_back(std::move(level));
  }
  json edges = json::array();
  for (const auto& e : lat.edges())
    edges.push_back({{"from", lat.level(e.level - 1)[e.source].to_string()},
                     {"to", lat.level(e.level)[e.target].to_string()},
                     {"residue", e.residue.value},
                     {"orbit", e.residue.orbit}});
  return {{"n", lat.max_level()}, {"levels", std::move(levels)}, {"edges", std::move(edges)}};
}

inline Lattice lattice_from(const json& j, const CrystalParams& params) {
  std::vector<std::vector<Bipartition>> levels;
  std::vector<std::unordered_map<std::string, std::size_t>> index;
  for (const auto& level : j.at("levels")) {
    auto& lv = levels.emplace_back();
    auto& ix = index.emplace_back();
    for (const auto& b : level) {
      ix.emplace(b.get<std::string>(), lv.size());
      lv.push_back(parse_bipartition(b.get<std::string>()));
    }
  }
  if (j.at("n").get<std::size_t>() + 1 != levels.size()) throw Error(Errc::schema_mismatch, "lattice n disagrees with levels");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    const auto from = parse_bipartition(e.at("from").get<std::string>());
    const auto to = parse_bipartition(e.at("to").get<std::string>());
    const std::size_t m = to.size();
    if (m == 0 || m >= levels.size() || from.size() + 1 != m) throw Error(Errc::schema_mismatch, "edge levels out of range");
    auto src = index[m - 1].find(from.to_string());
    auto dst = index[m].find(to.to_string());
    if (src == index[m - 1].end() || dst == index[m].end())
      throw Error(Errc::schema_mismatch, "edge endpoint is not a vertex");
    const Residue r{e.at("residue").get<int>(), params.residue_modulus(), e.at("orbit").get<int>()};
    edges.push_back(Edge{m, src->second, dst->second, r});
  }
  try {
    return Lattice::from_parts(params, std::move(levels), std::move(edges));
  } catch (const Error& err) {
    throw Error(Errc::schema_mismatch, err.what());
  }
}

inline json report_json(const oracle::VerificationReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
  return {{"suite", r.suite},
          {"n_min", r.n_min},
          {"n_max", r.n_max},
          {"cases", r.cases},
          {"verdict", oracle::verdict_name(r.verdict())},
          {"truncated", r.truncated},
          {"elapsed_seconds", r.elapsed_seconds},
          {"failures", std::move(failures)}};
}

inline oracle::VerificationReport report_from(const json& j, const CrystalParams& params) {
  oracle::VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  r.params = params;
  r.n_min = j.at("n_min").get<std::size_t>();
  r.n_max = j.at("n_max").get<std::size_t>();
  r.cases = j.at("cases").get<std::size_t>();
  r.truncated = j.at("truncated").get<bool>();
  r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  for (const auto& f : j.at("failures"))
    r.fail(f.at("input").get<std::string>(), f.at("expected").get<std::string>(), f.at("got").get<std::string>());
  if (j.at("verdict").get<std::string>() != oracle::verdict_name(r.verdict()))
    throw Error(Errc::schema_mismatch, "report verdict disagrees with its failures");
  return r;
}

}  // namespace detail

inline json to_json(const Document& doc) {
  json data;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Lattice>) {
          data = detail::lattice_json(p);
        } else if constexpr (std::is_same_v<T, std::vector<IrreducibleLabel>>) {
          data = json::array();
          for (const auto& l : p) data.push_back(detail::label_json(l));
        } else if constexpr (std::is_same_v<T, std::vector<SocleDecomposition>>) {
          data = json::array();
          for (const auto& s : p) {
            json summands = json::array();
            for (const auto& l : s.summands) summands.push_back(detail::label_json(l));
            data.push_back({{"source", detail::label_json(s.source)}, {"summands", std::move(summands)}});
          }
        } else {
          data = detail::report_json(p);
        }
      },
      doc.payload);
  return {{"schema", doc.schema},
          {"e", detail::modulus_json(doc.params.e)},
          {"regime", std::string(regime_name(doc.params.regime))},
          {"l", detail::modulus_json(doc.params.l)},
          {"kind", std::string(doc.kind())},
          {"data", std::move(data)}};
}

/// Canonical text: sorted keys, two-space indent, trailing newline.
inline std::string serialize_json(const Document& doc) { return to_json(doc).dump(2) + "\n"; }

inline Document from_json(const json& j) {
  if (!j.is_object() || !j.contains("schema")) throw Error(Errc::schema_mismatch, "missing \"schema\"");
  try {
    Document doc;
    doc.schema = j.at("schema").get<std::string>();
    if (doc.schema != schema_version)
      throw Error(Errc::schema_mismatch, "unsupported schema '" + doc.schema + "', expected '" +
                                             std::string(schema_version) + "'");
    const auto regime_text = j.at("regime").get<std::string>();
    if (regime_text != "A" && regime_text != "B") throw Error(Errc::schema_mismatch, "regime must be \"A\" or \"B\"");
    doc.params = make_params(detail::modulus_from(j.at("e")), regime_text == "A" ? Regime::A : Regime::B);
    if (detail::modulus_from(j.at("l")) != doc.params.l) throw Error(Errc::schema_mismatch, "l disagrees with e and regime");
    const auto kind = j.at("kind").get<std::string>();
    const auto& data = j.at("data");
    if (kind == "lattice") {
      doc.payload = detail::lattice_from(data, doc.params);
    } else if (kind == "labels") {
      std::vector<IrreducibleLabel> labels;
      for (const auto& l : data) labels.push_back(detail::label_from(l));
      doc.payload = std::move(labels);
    } else if (kind == "branching") {
      std::vector<SocleDecomposition> graph;
      for (const auto& s : data) {
        SocleDecomposition soc{detail::label_from(s.at("source")), {}};
        for (const auto& l : s.at("summands")) soc.summands.push_back(detail::label_from(l));
        graph.push_back(std::move(soc));
      }
      doc.payload = std::move(graph);
    } else if (kind == "report") {
      doc.payload = detail::report_from(data, doc.params);
    } else {
      throw Error(Errc::schema_mismatch, "unknown kind '" + kind + "'");
    }
    return doc;
  } catch (const json::exception& err) {
    throw Error(Errc::schema_mismatch, err.what());
  } catch (const Error& err) {
    if (err.code() == Errc::schema_mismatch) throw;
    throw Error(Errc::schema_mismatch, err.what());
  }
}

inline Document parse_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw Error(Errc::parse_error, "at byte " + std::to_string(err.byte) + ": " + err.what());
  }
  return from_json(j);
}

namespace detail {

inline std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace detail

/// Graphviz rendering of the lattice: one vertex per bipartition, ranked by
/// level, arrows labelled by residue.
inline std::string emit_dot(const Lattice& lat) {
  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  // " << lat.params().describe() << " n=" << lat.max_level() << "\n";
  out << "  node [shape=box];\n";
  for (std::size_t m = 0; m < lat.level_count(); ++m) {
    out << "  { rank=same;";
    for (const auto& b : lat.level(m)) out << " " << detail::quoted(b.to_string()) << ";";
    out << " }\n";
  }
  for (const auto& e : lat.edges())
    out << "  " << detail::quoted(lat.level(e.level - 1)[e.source].to_string()) << " -> "
        << detail::quoted(lat.level(e.level)[e.target].to_string()) << " [label=" << detail::quoted(e.residue.to_string())
        << "];\n";
  out << "}\n";
  return out.str();
}

/// Graphviz rendering of a branching graph: sources on one rank, summands on
/// the next, unlabelled arrows from each source to its socle summands.
inline std::string emit_dot(const std::vector<SocleDecomposition>& graph, const CrystalParams& params) {
  std::vector<IrreducibleLabel> sources;
  std::vector<IrreducibleLabel> targets;
  for (const auto& s : graph) {
    sources.push_back(s.source);
    targets.insert(targets.end(), s.summands.begin(), s.summands.end());
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  std::ostringstream out;
  out << "digraph branching {\n";
  out << "  // " << params.describe() << "\n";
  out << "  node [shape=box];\n";
  for (const auto* rank : {&sources, &targets}) {
    out << "  { rank=same;";
    for (const auto& l : *rank) out << " " << detail::quoted(l.to_string()) << ";";
    out << " }\n";
  }
  for (const auto& s : graph)
    for (const auto& t : s.summands)
      out << "  " << detail::quoted(s.source.to_string()) << " -> " << detail::quoted(t.to_string()) << ";\n";
  out << "}\n";
  return out.str();
}

enum class CacheStatus { hit, miss, corrupt, io_error };

struct CacheResult {
  CacheStatus status = CacheStatus::miss;
  std::optional<Lattice> lattice;
  std::string message;
};

/// $DNBRANCH_CACHE, else $XDG_DATA_HOME/dnbranch, else ~/.local/share/dnbranch.
inline std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("DNBRANCH_CACHE"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "dnbranch";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".local" / "share" / "dnbranch";
  return std::filesystem::temp_directory_path() / "dnbranch";
}

/// Lattices on disk, one file per (e, regime). A file built up to level N
/// serves every request with n <= N.
class LatticeCache {
 public:
  explicit LatticeCache(std::filesystem::path dir = default_cache_dir()) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const noexcept { return dir_; }

  std::filesystem::path file_for(const CrystalParams& params) const {
    return dir_ / ("lattice-e" + params.e.to_string() + "-" + std::string(regime_name(params.regime)) + ".json");
  }

  CacheResult load(const CrystalParams& params, std::size_t n) const {
    const auto path = file_for(params);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) {
      if (ec) return {CacheStatus::io_error, std::nullopt, path.string() + ": " + ec.message()};
      return {CacheStatus::miss, std::nullopt, "no cache file " + path.string()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return {CacheStatus::io_error, std::nullopt, "cannot read " + path.string()};
    std::stringstream buf;
    buf << in.rdbuf();
    if (in.bad()) return {CacheStatus::io_error, std::nullopt, "cannot read " + path.string()};
    try {
      auto doc = parse_json(buf.str());
      auto* lat = std::get_if<Lattice>(&doc.payload);
      if (!lat || !(doc.params == params))
        return {CacheStatus::corrupt, std::nullopt, "ignoring " + path.string() + ": wrong contents"};
      if (lat->max_level() < n)
        return {CacheStatus::miss, std::nullopt,
                "cache holds levels up to " + std::to_string(lat->max_level()) + ", need " + std::to_string(n)};
      return {CacheStatus::hit, lat->truncated(n), "loaded " + path.string()};
    } catch (const Error& err) {
      return {CacheStatus::corrupt, std::nullopt, "ignoring corrupted cache " + path.string() + ": " + err.what()};
    }
  }

  /// Writes the lattice unless the cache already holds at least as many
  /// levels. The file is replaced atomically.
  void store(const Lattice& lattice) const {
    if (auto existing = load(lattice.params(), lattice.max_level()); existing.status == CacheStatus::hit) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw Error(Errc::io_error, "cannot create " + dir_.string() + ": " + ec.message());
    const auto path = file_for(lattice.params());
    auto tmp = path;
    tmp += ".tmp" + std::to_string(std::random_device{}());
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << serialize_json(Document{std::string(schema_version), lattice.params(), lattice});
      if (!out) throw Error(Errc::io_error, "cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
      throw Error(Errc::io_error, "cannot move cache into place at " + path.string());
    }
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace dnbranch::io

#endif  // DNBRANCH_IO_HPP
