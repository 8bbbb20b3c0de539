#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "korobov/io.hpp"

using namespace korobov;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "korobov");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("korobov_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const char* kD2 =
    R"({"d": 2, "alpha": 2, "weights": {"kind": "polynomial", "c": 1, "kappa": 0}, "epsilon": 0.5})";
const char* kK1 =
    R"({"d": 2, "alpha": 2, "weights": {"kind": "polynomial", "c": 1, "kappa": 1},
        "epsilon": 0.25, "N": 17, "mode": "exhaustive", "trials": 20, "seed": 9})";

}  // namespace

TEST(FormatDouble, SeventeenDigitsRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(2.0), "2");
  EXPECT_EQ(format_double(1e-300), "1e-300");
  EXPECT_EQ(format_double(INFINITY), "inf");
  EXPECT_EQ(format_double(-INFINITY), "-inf");
  EXPECT_EQ(format_double(NAN), "nan");
  for (double x : {M_PI, 1.0 / 3.0, 6.02214076e23, -2.5e-17}) {
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
}

TEST(DumpJson, FloatsAndNonFinite) {
  Json j{{"a", 0.1}, {"b", INFINITY}, {"c", 3}, {"d", Json::array({1.5, 2})}};
  EXPECT_EQ(dump_json(j, -1), R"({"a":0.10000000000000001,"b":"inf","c":3,"d":[1.5,2]})");
  EXPECT_EQ(Json::parse(dump_json(j))["a"].get<double>(), 0.1);
}

TEST(JsonRoundTrip, PolynomialRuleWeights) {
  const SpaceDescriptor sp(3, 2.0, WeightSchedule::polynomial(1.0, 1.0));
  const auto f = random_unit(sp, 7, 3, 4);
  const auto back = polynomial_from_json(Json::parse(dump_json(to_json(f))));
  EXPECT_EQ(back, f);
  const LatticeRule rule(101, {1, 27, 38});
  EXPECT_EQ(lattice_rule_from_json(Json::parse(dump_json(to_json(rule)))), rule);
  const auto w = weights_from_json(to_json(WeightSchedule::explicit_weights({1.0, 0.5})));
  EXPECT_EQ(w.values(), (std::vector<double>{1.0, 0.5}));
  EXPECT_THROW(weights_from_json(Json{{"kind", "other"}}), std::invalid_argument);
  const auto set = enumerate(SpaceDescriptor(2, 2.0, WeightSchedule::constant(1.0)), 0.5);
  const auto js = to_json(set);
  EXPECT_EQ(js["members"].size(), 9u);
  EXPECT_EQ(js["d"], 2);
}

TEST_F(CliTest, IndexSetExample) {
  const auto cfg = write("c.json", kD2);
  const auto r = run({"index-set", "--config", cfg});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["members"].size(), 9u);
  EXPECT_EQ(j["config"]["seed"], 0);
  const auto csv = run({"index-set", "--config", cfg, "--format", "csv"});
  EXPECT_EQ(csv.out.substr(0, 12), "h1,h2\n-1,-1\n");
  EXPECT_EQ(csv.out.find('\r'), std::string::npos);
}

TEST_F(CliTest, ApproxMcIsByteIdenticalAndSeedOverrides) {
  const auto cfg = write("k.json", kK1);
  const auto a = run({"approx-mc", "--config", cfg, "--out", path("a.json")});
  const auto b = run({"approx-mc", "--config", cfg, "--out", path("b.json")});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_TRUE(a.out.empty());
  std::ifstream fa(path("a.json")), fb(path("b.json"));
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  const auto j = Json::parse(sa.str());
  for (const char* key : {"epsilon", "n", "R_size", "expected_sq_error", "empirical", "cost"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["config"]["seed"], 9);
  const auto c = run({"approx-mc", "--config", cfg, "--seed", "10"});
  EXPECT_EQ(Json::parse(c.out)["config"]["seed"], 10);
  EXPECT_NE(Json::parse(c.out)["empirical"], j["empirical"]);
}

TEST_F(CliTest, TractabilityConstantWeights) {
  const auto r = run({"tractability", "--config", write("c.json", kD2)});
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  for (const auto& v : j["verdicts"]) EXPECT_EQ(v["verdict"], "intractable");
  EXPECT_EQ(j["exponent_all"], "inf");
}

TEST_F(CliTest, OtherSubcommands) {
  const auto cfg = write("k.json", kK1);
  const auto q = run({"approx-quantum", "--config", cfg});
  ASSERT_EQ(q.code, 0) << q.err;
  const auto jq = Json::parse(q.out);
  for (const char* key : {"epsilon", "R_size", "N", "queries", "qubits", "combinatory_ops",
                          "total_cost", "failure_prob_bound", "achieved_error"}) {
    EXPECT_TRUE(jq.contains(key)) << key;
  }
  EXPECT_TRUE(jq["queries"].is_number_integer());

  const auto l = run({"lattice-search", "--config", cfg});
  ASSERT_EQ(l.code, 0) << l.err;
  const auto jl = Json::parse(l.out);
  EXPECT_EQ(jl["N"], 17);
  EXPECT_NEAR(jl["worst_case_int_error"].get<double>(), jl["worst_case_int_error_dual"].get<double>(),
              1e-8);

  const auto w = run({"approx-worst", "--config", cfg});
  ASSERT_EQ(w.code, 0);
  EXPECT_TRUE(Json::parse(w.out)["within_bound"].get<bool>());

  const auto g = run({"growth", "--config", cfg});
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(g.out.substr(0, g.out.find('\n')), "epsilon,d,R_size,fitted_slope");
  const auto s = run({"speedup", "--config", cfg});
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(s.out.substr(0, s.out.find('\n')), "epsilon,cost_rand,cost_quantum,ratio");
  EXPECT_EQ(run({"selftest"}).code, 0);
}

TEST_F(CliTest, ExitCodes) {
  const auto unknown = run({"frobnicate"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"index-set", "--config", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"index-set", "--config", write("bad.json", "{not json")}).code, 2);
  EXPECT_EQ(run({"index-set", "--config", write("e.json", R"({"d": 2, "alpha": 2,
      "weights": {"kind": "polynomial", "c": 1, "kappa": 0}, "epsilon": 1.5})")}).code, 2);
  EXPECT_EQ(run({"index-set", "--config", write("w.json", R"({"d": 2, "alpha": 2,
      "weights": {"kind": "explicit", "gammas": [0.5, 0.9]}, "epsilon": 0.5})")}).code, 2);
  EXPECT_EQ(run({"approx-quantum", "--config", write("a.json", R"({"d": 2, "alpha": 1,
      "weights": {"kind": "polynomial", "c": 1, "kappa": 1}, "epsilon": 0.5})")}).code, 2);
  EXPECT_EQ(run({"index-set", "--config", write("cap.json", R"({"d": 3, "alpha": 0.5,
      "weights": {"kind": "polynomial", "c": 1, "kappa": 1}, "epsilon": 0.01,
      "caps": {"index_set_max": 100}})")}).code, 3);
  EXPECT_EQ(run({"index-set", "--config", write("c.json", kD2), "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"approx-mc", "--config", write("c2.json", kD2), "--format", "csv"}).code, 2);
}

TEST_F(CliTest, WritesOnlyTheOutFile) {
  const auto cfg = write("k.json", kK1);
  std::size_t before = std::distance(fs::directory_iterator(dir_), fs::directory_iterator{});
  ASSERT_EQ(run({"growth", "--config", cfg, "--out", path("g.csv")}).code, 0);
  std::size_t after = std::distance(fs::directory_iterator(dir_), fs::directory_iterator{});
  EXPECT_EQ(after, before + 1);
  EXPECT_TRUE(fs::exists(path("g.csv")));
}
