#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "expect_error.hpp"
#include "knotforge/cli/cache.hpp"
#include "knotforge/cli/catalog.hpp"
#include "knotforge/cli/commands.hpp"
#include "knotforge/cli/json_io.hpp"

using namespace knotforge;
using namespace knotforge::cli;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("knotforge_test_" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return (path_ / name).string();
  }

 private:
  fs::path path_;
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <class F>
Run run(F&& f) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

Run alex(const std::string& input, const Context& ctx = {}) {
  return run([&](auto& o, auto& e) { return cmd_alex(input, ctx, o, e); });
}
Run rho(const std::string& input, const Context& ctx = {}) {
  return run([&](auto& o, auto& e) { return cmd_rho0(input, ctx, o, e); });
}
Run hfk(const std::string& input, const Context& ctx = {}) {
  return run([&](auto& o, auto& e) { return cmd_hfk(input, ctx, o, e); });
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(CmdAlex, SpecExamples) {
  TempDir tmp;
  const auto k946 = tmp.write("946.json", R"({"name": "9_46", "matrix": [[0, -2], [-1, 0]]})");
  const auto unknot = tmp.write("unknot.json", R"({"matrix": []})");
  const auto tre = tmp.write("tre.json", R"({"strands": 2, "word": [1, 1, 1]})");
  EXPECT_EQ(alex(k946).out, "-2*t + 5 - 2*t^-1\n");
  EXPECT_EQ(alex(unknot).out, "1\n");
  EXPECT_EQ(alex(tre).out, "t - 1 + t^-1\n");
  EXPECT_EQ(alex("catalog:figure_eight").out, "-t + 3 - t^-1\n");
  EXPECT_EQ(alex(k946).code, kExitOk);
}

TEST(CmdAlex, ExitCodes) {
  TempDir tmp;
  EXPECT_EQ(alex(tmp.write("bad.json", "{\"matrix\": [[1, 2]")).code, kExitParse);
  EXPECT_EQ(alex(tmp.write("shape.json", R"({"matrix": [[1, 2]]})")).code, kExitParse);
  EXPECT_EQ(alex(tmp.write("none.json", R"({"hello": 1})")).code, kExitParse);
  EXPECT_EQ(alex((tmp.path() / "missing.json").string()).code, kExitParse);
  EXPECT_EQ(alex("catalog:no_such_knot").code, kExitParse);
  const auto r = alex(tmp.write("det.json", R"({"matrix": [[1, 0], [0, 1]]})"));
  EXPECT_EQ(r.code, kExitInvariant);
  EXPECT_NE(r.err.find("InvalidSeifertMatrix"), std::string::npos);
  EXPECT_EQ(alex(tmp.write("link.json", R"({"strands": 2, "word": [1, 1]})")).code, kExitInvariant);
}

TEST(CmdRho0, SpecExamples) {
  TempDir tmp;
  EXPECT_EQ(first_line(rho("catalog:trefoil").out), "-4/3 (±1e-9)");
  EXPECT_EQ(first_line(rho(tmp.write("u.json", R"({"matrix": []})")).out), "0");
  EXPECT_EQ(first_line(rho(tmp.write("k.json", R"({"matrix": [[0, -2], [-1, 0]]})")).out), "0");
  EXPECT_NE(rho("catalog:trefoil").out.find("normalized"), std::string::npos);
  const auto t25 = first_line(rho("catalog:torus_2_5").out);
  EXPECT_EQ(t25.rfind("-2.4", 0), 0u) << t25;
  EXPECT_NE(t25.find("±1e-9"), std::string::npos);
}

TEST(CmdHfk, TableAndJson) {
  const auto r = hfk("catalog:9_46");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("total rank: 9"), std::string::npos);
  EXPECT_NE(r.out.find("genus: 1"), std::string::npos);
  EXPECT_NE(r.out.find("euler: -2*t + 5 - 2*t^-1"), std::string::npos);
  EXPECT_NE(r.out.find("A\\M"), std::string::npos);

  Context json_ctx;
  json_ctx.json = true;
  const auto j = Json::parse(hfk("catalog:9_46", json_ctx).out);
  const auto ranks = ranks_from_json(j);
  EXPECT_EQ(ranks.rank(0, 0), 5u);
  EXPECT_EQ(j.at("genus"), 1);
  EXPECT_EQ(j.at("euler"), "-2*t + 5 - 2*t^-1");
}

TEST(CmdHfk, ExitCodes) {
  Context small;
  small.limits.max_states = 10;
  EXPECT_EQ(hfk("catalog:trefoil", small).code, kExitResources);
  EXPECT_EQ(hfk("catalog:11n139").code, kExitParse);
  TempDir tmp;
  EXPECT_EQ(hfk(tmp.write("g.json", R"({"size": 2, "X": [0, 1], "O": [0, 1]})")).code, kExitInvariant);
}

TEST(CmdHfk, OutputIsDeterministic) {
  Context three;
  three.limits.threads = 3;
  EXPECT_EQ(hfk("catalog:torus_2_5").out, hfk("catalog:torus_2_5", three).out);
  EXPECT_EQ(hfk("catalog:figure_eight").out, hfk("catalog:figure_eight").out);
}

TEST(ResultCache, HitIsByteIdenticalToRecomputation) {
  TempDir tmp;
  Context cached;
  cached.cache = ResultCache(tmp.path(), "test-engine");
  const auto fresh = hfk("catalog:9_46");
  const auto miss = hfk("catalog:9_46", cached);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(tmp.path())) files += e.path().extension() == ".json" ? 1 : 0;
  EXPECT_EQ(files, 1u);
  const auto hit = hfk("catalog:9_46", cached);
  EXPECT_EQ(fresh.out, miss.out);
  EXPECT_EQ(fresh.out, hit.out);

  cached.json = true;
  Context plain_json;
  plain_json.json = true;
  EXPECT_EQ(hfk("catalog:9_46", cached).out, hfk("catalog:9_46", plain_json).out);
}

TEST(ResultCache, KeysSeparateOperationInputAndEngine) {
  TempDir tmp;
  ResultCache a(tmp.path(), "engine-a");
  ResultCache b(tmp.path(), "engine-b");
  EXPECT_NE(a.key("hfk", "x"), a.key("hfk", "y"));
  EXPECT_NE(a.key("hfk", "x"), a.key("alex", "x"));
  EXPECT_NE(a.key("hfk", "x"), b.key("hfk", "x"));
  a.put("hfk", "x", "value");
  EXPECT_EQ(a.get("hfk", "x"), std::optional<std::string>("value"));
  EXPECT_FALSE(b.get("hfk", "x").has_value());
  EXPECT_FALSE(a.get("hfk", "y").has_value());
  EXPECT_FALSE(ResultCache().enabled());
  EXPECT_FALSE(ResultCache().get("hfk", "x").has_value());
}

TEST(ResultCache, CorruptRecordIsAMiss) {
  TempDir tmp;
  ResultCache c(tmp.path(), "e");
  c.put("hfk", "x", "value");
  for (const auto& e : fs::directory_iterator(tmp.path())) std::ofstream(e.path()) << "{not json";
  EXPECT_FALSE(c.get("hfk", "x").has_value());
}

TEST(Fnv1a64, KnownVectors) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

TEST(JsonIo, RoundTrips) {
  const NamedSeifert s{"k", SeifertMatrix(IntMatrix{{0, -2}, {-1, 0}})};
  const auto s2 = seifert_from_json(to_json(s));
  EXPECT_EQ(s2.name, "k");
  EXPECT_EQ(s2.matrix.matrix(), s.matrix.matrix());

  const BraidWord b(3, {1, -2, 1, -2});
  EXPECT_EQ(braid_from_json(to_json(b)).to_string(), b.to_string());

  const GridDiagram g{"g", {1, 0}, {0, 1}};
  EXPECT_EQ(grid_from_json(to_json(g)), g);

  const DerivativeInput d{MetabolizerClass{1, 0}, BraidWord(2, {1, 1, 1}), 1};
  const auto d2 = derivative_from_json(to_json(d));
  EXPECT_EQ(d2.cls, d.cls);
  EXPECT_EQ(d2.braid->to_string(), d.braid->to_string());
  EXPECT_EQ(d2.genus_s3_exact, 1);

  BigradedRanks r;
  r.add(1, 1, 2);
  r.add(0, 0, 5);
  r.add(-1, -1, 2);
  EXPECT_EQ(ranks_from_json(ranks_to_json(r)), r);
  EXPECT_EQ(ranks_to_json(r).at("euler"), "-2*t + 5 - 2*t^-1");
}

TEST(JsonIo, ParseInputDispatch) {
  EXPECT_TRUE(std::holds_alternative<NamedSeifert>(parse_input(Json::parse(R"({"matrix": []})"))));
  EXPECT_TRUE(std::holds_alternative<BraidWord>(parse_input(Json::parse(R"({"strands": 2, "word": [1]})"))));
  EXPECT_TRUE(std::holds_alternative<GridDiagram>(parse_input(Json::parse(R"({"size": 2, "X": [1, 0], "O": [0, 1]})"))));
  EXPECT_TRUE(std::holds_alternative<DerivativeInput>(parse_input(Json::parse(R"({"class": [1, 0]})"))));
  EXPECT_KF_ERROR(parse_input(Json::parse(R"({"nothing": 1})")), ErrorCode::ParseError);
  EXPECT_KF_ERROR(parse_input(Json::parse(R"({"matrix": "x"})")), ErrorCode::ParseError);
  EXPECT_KF_ERROR(parse_input(Json::parse(R"({"size": 3, "X": [1, 0], "O": [0, 1]})")), ErrorCode::ParseError);
}

TEST(CmdDg, DerivativeFiles) {
  TempDir tmp;
  const auto k = tmp.write("k.json", R"({"matrix": [[0, -2], [-1, 0]]})");
  const auto tre = tmp.write("d.json", R"({"class": [1, 0], "braid": {"strands": 2, "word": [1, 1, 1]}})");
  const auto r = run([&](auto& o, auto& e) { return cmd_dg(k, {tre}, std::string("catalog:9_46"), Context{}, o, e); });
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("dg lower bound from ρ: 1"), std::string::npos);
  EXPECT_NE(r.out.find("dg lower bound: 1"), std::string::npos);
  EXPECT_NE(r.out.find("surface uniqueness: certified"), std::string::npos);
  EXPECT_NE(r.out.find("incomplete"), std::string::npos);

  const auto bad = tmp.write("bad.json", R"({"class": [1, 1]})");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_dg(k, {bad}, std::nullopt, Context{}, o, e); }).code,
            kExitInvariant);
  const auto tref = tmp.write("t.json", R"({"matrix": [[-1, 1], [0, -1]]})");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_dg(tref, {}, std::nullopt, Context{}, o, e); }).code,
            kExitInvariant);

  Context json;
  json.json = true;
  const auto jr = run([&](auto& o, auto& e) { return cmd_dg(k, {tre}, std::nullopt, json, o, e); });
  const auto j = Json::parse(jr.out);
  EXPECT_EQ(j.at("dg_lower"), 1);
  EXPECT_EQ(j.at("per_derivative").at(0).at("rho_exact"), "-4/3");
}

TEST(CmdSignatureCsv, TrefoilRows) {
  TempDir tmp;
  const auto path = (tmp.path() / "sig.csv").string();
  const auto r = run([&](auto& o, auto& e) { return cmd_signature_csv("catalog:trefoil", path, Context{}, o, e); });
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "theta,sigma");
  std::vector<std::pair<double, int>> rows;
  for (std::string line; std::getline(in, line);) {
    const auto comma = line.find(',');
    rows.emplace_back(std::stod(line.substr(0, comma)), std::stoi(line.substr(comma + 1)));
  }
  ASSERT_FALSE(rows.empty());
  for (const auto& [theta, sigma] : rows) {
    EXPECT_GT(theta, 0.0);
    EXPECT_LT(theta, 2 * M_PI);
    const bool inside = theta > M_PI / 3 && theta < 5 * M_PI / 3;
    EXPECT_EQ(sigma, inside ? -2 : 0) << theta;
  }
  const auto to_out = run([&](auto& o, auto& e) { return cmd_signature_csv("catalog:trefoil", "", Context{}, o, e); });
  std::ifstream again(path);
  std::stringstream buf;
  buf << again.rdbuf();
  EXPECT_EQ(to_out.out, buf.str());
}

TEST(CmdFamily, Output) {
  const auto r = run([](auto& o, auto& e) { return cmd_family(3, Context{}, o, e); });
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("algebraically slice: yes"), std::string::npos);
  EXPECT_NE(r.out.find("metabolizers: (1,1) (0,1)"), std::string::npos);
  EXPECT_NE(r.out.find("alexander: -2*t + 5 - 2*t^-1"), std::string::npos);
}

TEST(CatalogVerify, ShippedCatalogAgrees) {
  const auto r = run([](auto& o, auto& e) { return cmd_catalog_verify(Context{}, o, e); });
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
  EXPECT_NE(r.out.find("0 mismatches"), std::string::npos);
  for (const auto& e : load_catalog(KNOTFORGE_DEFAULT_CATALOG)) EXPECT_GE(e.presentations(), 1u) << e.name;
}

TEST(CatalogVerify, CorruptedEntryIsFlagged) {
  TempDir tmp;
  const auto fig8 = find_catalog_entry(KNOTFORGE_DEFAULT_CATALOG, "figure_eight");
  Json bad{{"name", "corrupt"},
           {"provenance", "figure-eight grid with a trefoil Seifert matrix"},
           {"grid", to_json(*fig8.grid)},
           {"seifert", Json::array({Json::array({-1, 1}), Json::array({0, -1})})}};
  tmp.write("corrupt.json", bad.dump());
  Context ctx;
  ctx.catalog_dir = tmp.path();
  const auto r = run([&](auto& o, auto& e) { return cmd_catalog_verify(ctx, o, e); });
  EXPECT_EQ(r.code, kExitInvariant);
  EXPECT_NE(r.out.find("corrupt:"), std::string::npos);
  EXPECT_NE(r.out.find("MISMATCH"), std::string::npos);
}

TEST(CatalogVerify, EmptyCatalogWarns) {
  TempDir tmp;
  Context ctx;
  ctx.catalog_dir = tmp.path();
  const auto r = run([&](auto& o, auto& e) { return cmd_catalog_verify(ctx, o, e); });
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("empty"), std::string::npos);
}
