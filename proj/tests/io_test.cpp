#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>

#include "dnbranch/io.hpp"

using namespace dnbranch;
using namespace dnbranch::io;

namespace {

Bipartition bp(std::string_view s) { return parse_bipartition(s); }

const CrystalParams B4 = CrystalParams::regime_b(4);
const CrystalParams A_INF = CrystalParams::regime_a(Modulus::infinite());

Document doc(const CrystalParams& p, Payload payload) { return Document{std::string(schema_version), p, std::move(payload)}; }

Errc code_of(std::string_view text) {
  try {
    parse_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::invariant_violation;
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("dnbranch-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Json, LatticeRoundTripIsByteIdentical) {
  const auto lat = build_lattice(5, B4);
  const auto text = serialize_json(doc(B4, lat));
  const auto back = parse_json(text);
  EXPECT_EQ(back.kind(), "lattice");
  EXPECT_TRUE(std::get<Lattice>(back.payload) == lat);
  EXPECT_EQ(serialize_json(back), text);
  EXPECT_EQ(text, serialize_json(doc(B4, build_lattice(5, B4, {5'000'000, 4}))));
}

TEST(Json, TopLevelShape) {
  const auto j = json::parse(serialize_json(doc(B4, build_lattice(2, B4))));
  EXPECT_EQ(j.at("schema"), "dnbranch/1");
  EXPECT_EQ(j.at("e"), 4);
  EXPECT_EQ(j.at("regime"), "B");
  EXPECT_EQ(j.at("l"), 2);
  EXPECT_EQ(j.at("kind"), "lattice");
  EXPECT_EQ(j.at("data").at("levels").at(0).at(0), "-|-");
  const auto inf = json::parse(serialize_json(doc(A_INF, std::vector<IrreducibleLabel>{})));
  EXPECT_EQ(inf.at("e"), "inf");
  EXPECT_EQ(inf.at("l"), "inf");
}

TEST(Json, BranchingRoundTrip) {
  const auto lat = build_lattice(5, A_INF);
  std::vector<SocleDecomposition> graph{socle_restriction(IrreducibleLabel::unsplit(bp("2,1|1,1")), lat)};
  const auto text = serialize_json(doc(A_INF, graph));
  const auto back = parse_json(text);
  EXPECT_EQ(std::get<std::vector<SocleDecomposition>>(back.payload), graph);
  EXPECT_EQ(serialize_json(back), text);
  EXPECT_NE(text.find("\"sign\": \"+\""), std::string::npos);
}

TEST(Json, LabelsAndReportRoundTrip) {
  const auto lat = build_lattice(4, B4);
  const auto labels = equivalence_classes(lat.level(4), lat);
  const auto ltext = serialize_json(doc(B4, labels));
  EXPECT_EQ(std::get<std::vector<IrreducibleLabel>>(parse_json(ltext).payload), labels);

  auto report = oracle::verify_fixed_points(4, B4);
  report.fail("in", "exp", "got");
  const auto rtext = serialize_json(doc(B4, report));
  const auto back = std::get<oracle::VerificationReport>(parse_json(rtext).payload);
  EXPECT_EQ(back.failures, report.failures);
  EXPECT_EQ(back.cases, report.cases);
  EXPECT_EQ(serialize_json(doc(B4, back)), rtext);
}

TEST(Json, Rejections) {
  EXPECT_EQ(code_of("{}"), Errc::schema_mismatch);
  EXPECT_EQ(code_of(R"({"schema":"dnbranch/2","e":4,"regime":"B","l":2,"kind":"labels","data":[]})"),
            Errc::schema_mismatch);
  EXPECT_EQ(code_of(R"({"schema":"dnbranch/1","e":4,"regime":"B","l":3,"kind":"labels","data":[]})"),
            Errc::schema_mismatch);
  EXPECT_EQ(code_of(R"({"schema":"dnbranch/1","e":4,"regime":"B","l":2,"kind":"labels","data":[{"kind":"split","rep":"1|1"}]})"),
            Errc::schema_mismatch);
  EXPECT_EQ(code_of(R"({"schema":"dnbranch/1","e":4,"regime":"B","l":2,"kind":"labels","data":[{"kind":"unsplit","rep":"1,"}]})"),
            Errc::schema_mismatch);
  // A lattice whose level 1 lacks an incoming edge.
  EXPECT_EQ(code_of(R"({"schema":"dnbranch/1","e":4,"regime":"B","l":2,"kind":"lattice",
                        "data":{"n":1,"levels":[["-|-"],["1|-"]],"edges":[]}})"),
            Errc::schema_mismatch);
  EXPECT_EQ(code_of(R"({"schema":"dnbranch/1","e":4,"regime":"B","l":2,"kind":"wat","data":[]})"), Errc::schema_mismatch);
}

TEST(Json, ParseErrorsCarryALocation) {
  try {
    parse_json("{\"schema\": ");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parse_error);
    EXPECT_NE(std::string(e.what()).find("at byte"), std::string::npos);
  }
}

TEST(Dot, EmptyLattice) {
  const auto dot = emit_dot(build_lattice(0, B4));
  EXPECT_NE(dot.find("\"-|-\""), std::string::npos);
  EXPECT_EQ(dot.find("->"), std::string::npos);
}

TEST(Dot, RegimeATwoLevelTwo) {
  const auto dot = emit_dot(build_lattice(2, CrystalParams::regime_a(Modulus(2))));
  const std::regex vertex("\"[^\"]*\";");
  const std::regex arrow(" -> ");
  const auto vertices = std::distance(std::sregex_iterator(dot.begin(), dot.end(), vertex), std::sregex_iterator());
  const auto arrows = std::distance(std::sregex_iterator(dot.begin(), dot.end(), arrow), std::sregex_iterator());
  EXPECT_EQ(vertices, 6);
  EXPECT_EQ(arrows, 6);
}

TEST(Dot, ResidueLabelsModFour) {
  const auto dot = emit_dot(build_lattice(2, B4));
  const std::regex label("label=\"([^\"]*)\"");
  int count = 0;
  for (auto it = std::sregex_iterator(dot.begin(), dot.end(), label); it != std::sregex_iterator(); ++it) {
    const auto v = (*it)[1].str();
    EXPECT_TRUE(v == "0" || v == "1" || v == "2" || v == "3") << v;
    ++count;
  }
  EXPECT_GT(count, 0);
  EXPECT_EQ(dot, emit_dot(build_lattice(2, B4)));
}

TEST(Dot, BranchingGraph) {
  const auto lat = build_lattice(2, A_INF);
  const auto dot = emit_dot(branching_graph(2, lat), A_INF);
  EXPECT_NE(dot.find("digraph branching"), std::string::npos);
  EXPECT_NE(dot.find("\"D+(1|1)\" -> \"D(-|1)\";"), std::string::npos);
  EXPECT_EQ(dot.find("label="), std::string::npos);
}

TEST(Cache, StoreLoadPrefixMiss) {
  TempDir tmp;
  LatticeCache cache(tmp.path());
  EXPECT_EQ(cache.load(B4, 3).status, CacheStatus::miss);
  const auto lat = build_lattice(5, B4);
  cache.store(lat);
  auto hit = cache.load(B4, 5);
  ASSERT_EQ(hit.status, CacheStatus::hit);
  EXPECT_TRUE(*hit.lattice == lat);
  auto prefix = cache.load(B4, 3);
  ASSERT_EQ(prefix.status, CacheStatus::hit);
  EXPECT_TRUE(*prefix.lattice == build_lattice(3, B4));
  EXPECT_EQ(cache.load(B4, 6).status, CacheStatus::miss);
  EXPECT_EQ(cache.load(CrystalParams::regime_b(6), 2).status, CacheStatus::miss);
  // A smaller lattice never overwrites a larger one.
  cache.store(build_lattice(2, B4));
  EXPECT_EQ(cache.load(B4, 5).status, CacheStatus::hit);
  for (const auto& entry : std::filesystem::directory_iterator(tmp.path()))
    EXPECT_EQ(entry.path().extension(), ".json") << entry.path();
}

TEST(Cache, CorruptFilesAreIgnored) {
  TempDir tmp;
  LatticeCache cache(tmp.path());
  std::filesystem::create_directories(tmp.path());
  std::ofstream(cache.file_for(B4)) << "{ not json";
  const auto bad = cache.load(B4, 2);
  EXPECT_EQ(bad.status, CacheStatus::corrupt);
  EXPECT_FALSE(bad.lattice);
  cache.store(build_lattice(3, B4));
  EXPECT_EQ(cache.load(B4, 3).status, CacheStatus::hit);
  // Valid JSON for other parameters is not trusted either.
  std::ofstream(cache.file_for(B4)) << serialize_json(doc(CrystalParams::regime_b(6), build_lattice(1, CrystalParams::regime_b(6))));
  EXPECT_EQ(cache.load(B4, 1).status, CacheStatus::corrupt);
}

TEST(Cache, UnwritableDirectoryIsAnIoError) {
  TempDir tmp;
  std::filesystem::create_directories(tmp.path().parent_path());
  std::ofstream(tmp.path()) << "a file, not a directory";
  LatticeCache cache(tmp.path() / "sub");
  try {
    cache.store(build_lattice(1, B4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::io_error);
  }
  std::filesystem::remove(tmp.path());
}

TEST(Cache, DirectoryFromEnvironment) {
  ::setenv("DNBRANCH_CACHE", "/tmp/dnbranch-env-check", 1);
  EXPECT_EQ(default_cache_dir(), std::filesystem::path("/tmp/dnbranch-env-check"));
  ::unsetenv("DNBRANCH_CACHE");
  EXPECT_NE(default_cache_dir(), std::filesystem::path("/tmp/dnbranch-env-check"));
}
