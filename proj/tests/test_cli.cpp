#include "cjac/cli.hpp"
#include "cjac/curve_io.hpp"
#include "cjac/report.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace cjac;

namespace {

const std::string data_dir = CJAC_DATA_DIR;
const std::string fixture_dir = CJAC_FIXTURE_DIR;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::vector<std::string>> every_command = {
    {"info"},   {"classgroup"}, {"classgroup", "-d", "2"}, {"semistable"}, {"semistabilize", "-d", "3,-1"},
    {"strata"}, {"components"}, {"theta"},                 {"neron"},      {"neron", "-d", "5"},
    {"abel"},   {"abel", "-d", "3"}, {"abel", "--g-minus-1"}, {"dgeneral", "-d", "2"},
};

}  // namespace

TEST(CurveIo, LineFormat) {
  const auto g = parse_curve("# a vine\nvertex C1 1   # first\n\nvertex C2 0\nedge C1 C2 3\nedge C2 C2\n");
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(loop_count(g, 1), 1);
  EXPECT_EQ(counts(g).genus, 4);
}

TEST(CurveIo, FormatsAgree) {
  EXPECT_EQ(read_curve(data_dir + "/vine3.json"), read_curve(data_dir + "/vine3.curve"));
  EXPECT_EQ(read_curve(data_dir + "/vine3.json"), make_vine(1, 0, 3));
}

TEST(CurveIo, Errors) {
  EXPECT_THROW(parse_curve("vertex a 0\nedge a b\n"), InvalidInput);
  try {
    parse_curve("vertex a 0\nedge a b\n");
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("unknown vertex"), std::string::npos);
  }
  try {
    parse_curve(R"({"vertices": [{"name": "a", "genus": 0}, {"name": "b", "genus": 0}], "edges": []})");
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("curve must be connected"), std::string::npos);
  }
  try {
    parse_curve("vertex a 0\n  vertx b 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  try {
    parse_curve("{\n  \"vertices\": [\n    {\"name\": \"a\", \"genus\": 0,}\n  ]\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_curve("vertex a -1\n"), InvalidInput);
  EXPECT_THROW(parse_curve("vertex a 0\nvertex a 1\n"), InvalidInput);
  EXPECT_THROW(parse_curve("vertex a 0\nedge a a 0\n"), ParseError);
  EXPECT_THROW(parse_curve(R"({"vertices": [{"name": "a"}]})"), InvalidInput);
  EXPECT_THROW(parse_curve(""), InvalidInput);
}

TEST(CurveIo, JsonRoundTripProperty) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = cjac::testing::random_graph(rng, 6, 10, 3);
    EXPECT_EQ(parse_curve(curve_to_json(g).dump()), g);
  }
}

TEST(Cli, DeterministicOutput) {
  for (const auto& file : {"/vine3.json", "/vine3.curve", "/triangle.json"}) {
    for (auto args : every_command) {
      if (args[0] == "semistabilize" && std::string(file) == "/triangle.json") args = {"semistabilize", "-d", "3,0,-1"};
      if (args[0] == "abel" && args.size() == 2 && std::string(file) == "/triangle.json") continue;
      args.push_back(data_dir + file);
      for (bool json : {false, true}) {
        auto a = args;
        if (json) a.push_back("--json");
        const auto first = run(a);
        const auto second = run(a);
        EXPECT_EQ(first.code, 0) << a[0] << ": " << first.err;
        EXPECT_EQ(first.out, second.out);
        EXPECT_FALSE(first.out.empty());
      }
    }
  }
}

TEST(Cli, JsonRoundTrip) {
  for (auto args : every_command) {
    args.push_back(data_dir + "/vine3.json");
    args.push_back("--json");
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc.at("schema_version"), 1);
    const auto report = doc.get<VerdictReport>();
    EXPECT_EQ(nlohmann::json(report).dump(2) + "\n", r.out);
    EXPECT_EQ(nlohmann::json(report).get<VerdictReport>(), report);
  }
}

TEST(Cli, ReportContents) {
  const auto doc = nlohmann::json::parse(run({"strata", data_dir + "/vine3.json", "--json"}).out);
  const auto report = doc.get<VerdictReport>();
  EXPECT_EQ(report.curve.complexity, 3);
  EXPECT_EQ(report.curve.essential_connectivity, Connectivity::finite(3));
  ASSERT_TRUE(report.strata);
  std::size_t components = 0;
  for (const auto& s : *report.strata) {
    EXPECT_GE(s.dim, 0);
    EXPECT_LE(s.dim, report.curve.genus);
    components += s.component ? 1 : 0;
  }
  EXPECT_EQ(components, 2u);

  const auto ss = nlohmann::json::parse(run({"semistable", "--json", data_dir + "/vine3.curve"}).out);
  EXPECT_EQ(ss.at("semistable").at("semistable_count"), 4);
  EXPECT_EQ(ss.at("semistable").at("stable_count"), 2);

  const auto fix = nlohmann::json::parse(run({"semistabilize", "-d", "3,-1", "--json", data_dir + "/vine3.curve"}).out);
  EXPECT_EQ(fix.at("semistabilization").at("output"), nlohmann::json({3, -1}));
  EXPECT_EQ(fix.at("semistabilization").at("status"), "strictly_semistable");
}

TEST(Cli, BigIntegersSerializeAsStrings) {
  nlohmann::json j = BigInt("123456789012345678901234567890");
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(j.get<BigInt>(), BigInt("123456789012345678901234567890"));
  EXPECT_TRUE(nlohmann::json(BigInt(-5)).is_number_integer());
}

TEST(Cli, ExitCodes) {
  const auto vine = data_dir + "/vine3.json";
  EXPECT_EQ(run({}).code, cli::exit_usage);
  EXPECT_EQ(run({"info"}).code, cli::exit_usage);
  EXPECT_EQ(run({"nonsense", vine}).code, cli::exit_usage);
  EXPECT_EQ(run({"info", data_dir + "/missing.json"}).code, cli::exit_usage);
  EXPECT_EQ(run({"semistabilize", "-d", "1,x", vine}).code, cli::exit_usage);
  EXPECT_EQ(run({"semistabilize", "-d", "1,1,0", vine}).code, cli::exit_usage);
  EXPECT_EQ(run({"semistabilize", "-d", "3,0", vine}).code, cli::exit_usage);
  EXPECT_EQ(run({"dgeneral", vine}).code, cli::exit_usage);
  EXPECT_EQ(run({"abel", "-d", "2", "--g-minus-1", vine}).code, cli::exit_usage);
  EXPECT_EQ(run({"abel", "--g-minus-1", data_dir + "/triangle.json"}).code, cli::exit_usage);
  EXPECT_EQ(run({"strata", "--max-edges", "2", vine}).code, cli::exit_cap);
  EXPECT_EQ(run({"semistable", "--max-box", "2", vine}).code, cli::exit_cap);
  EXPECT_EQ(run({"classgroup", "--max-classes", "2", vine}).code, cli::exit_cap);
  EXPECT_EQ(run({"semistable", "--max-vertices", "1", data_dir + "/triangle.json"}).code, cli::exit_cap);
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, cli::exit_ok);
  EXPECT_NE(help.out.find("semistabilize"), std::string::npos);
}

TEST(Cli, ErrorsNameTheProblem) {
  const auto r = run({"info", fixture_dir + "/unknown_vertex.curve"});
  EXPECT_EQ(r.code, cli::exit_usage);
  EXPECT_NE(r.err.find("unknown vertex 'Z'"), std::string::npos);
  const auto d = run({"info", fixture_dir + "/disconnected.json"});
  EXPECT_EQ(d.code, cli::exit_usage);
  EXPECT_NE(d.err.find("curve must be connected"), std::string::npos);
}
