#include <gtest/gtest.h>

#include <sstream>

#include "qcat/io.hpp"
#include "qcat_cli/app.hpp"
#include "qcat_cli/spec.hpp"

using qcat::cli::run;
using Json = qcat::io::Json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result qcat_run(std::vector<std::string> args) {
  args.insert(args.begin(), "qcat");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string spec(const std::string& name) { return std::string(QCAT_EXAMPLES_DIR) + "/" + name; }

Json json_of(const Result& r) { return Json::parse(r.out); }

}  // namespace

TEST(Analyze, Matvec21) {
  const auto r = qcat_run({"analyze", "matvec:2,1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = json_of(r);
  EXPECT_EQ(j["simples"].size(), 5u);
  EXPECT_EQ(j["units"].size(), 3u);
  for (const auto& cell : j["grid"]) {
    // Cells of block 1 are (1..2, 1..2); block 2 is (3, 3).
    const int i = cell["i"], k = cell["j"];
    EXPECT_EQ(i <= 2, k <= 2);
  }
}

TEST(Analyze, Repz2) {
  const auto r = qcat_run({"analyze", "repz2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = json_of(r);
  EXPECT_EQ(j["simples"], Json::parse(R"(["W1","W2"])"));
  EXPECT_EQ(j["units"], Json::parse(R"(["W2"])"));
}

TEST(Analyze, EmptyBlocks) {
  const auto r = qcat_run({"analyze", spec("empty_matvec.json")});
  EXPECT_EQ(r.code, qcat::cli::kContract);
  EXPECT_EQ(r.err.rfind("error: EmptyBackend:", 0), 0u) << r.err;
}

TEST(QHom, A2Spec) {
  auto r = qcat_run({"qhom", spec("a2.json"), "M12", "M12", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["dim"], 1);
  r = qcat_run({"qhom", spec("a2.json"), "M12", "M12"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1"), std::string::npos);
}

TEST(QHom, EmptySerreIsPlainHom) {
  const auto r = qcat_run({"qhom", spec("a2.json"), "M12", "S1", "--serre", "none", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = json_of(r);
  EXPECT_EQ(j["dim"], 1);
  EXPECT_EQ(j["dim"], j["hom_dim"]);
}

TEST(Length, A2Spec) {
  const auto r = qcat_run({"length", spec("a2.json"), "M12", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = json_of(r);
  EXPECT_EQ(j["length"], 2);
  EXPECT_EQ(j["q_length"], 1);
}

TEST(ClassifyIdeals, Matvec21) {
  const auto r = qcat_run({"classify-ideals", "matvec:2,1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["count"], 4);
}

TEST(Closure, Repz2) {
  const auto r = qcat_run({"closure", "repz2", "--simples", "W1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["closure"], Json::parse(R"(["W1","W2"])"));
}

TEST(Obstruction, Repz2) {
  const auto r = qcat_run({"obstruction", "repz2", "--serre", "W1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["witness"], "W1");
  const auto none = qcat_run({"obstruction", "repz2", "--format", "json"});
  EXPECT_TRUE(json_of(none)["witness"].is_null());
}

TEST(Verify, Matvec21AllSuites) {
  const auto r = qcat_run({"verify", "matvec:2,1", "--suite", "all", "--trials", "200", "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("all suites passed"), std::string::npos);
}

TEST(Verify, TensorCategorySuite) {
  const auto r = qcat_run({"verify", "repz2", "--suite", "tensor_category_ideals"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Verify, AcceptsAliases) {
  const auto r = qcat_run({"verify", "pathA2", "--serre", "S2", "--suite", "lemma_2_4", "--trials", "20"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Verify, RequirementUnmet) {
  const auto r = qcat_run({"verify", "pathA2", "--suite", "quotient_rigid"});
  EXPECT_EQ(r.code, qcat::cli::kRequirement);
  EXPECT_EQ(r.err.rfind("error: RequirementUnmet:", 0), 0u) << r.err;
}

TEST(Verify, UnknownSuite) {
  const auto r = qcat_run({"verify", "repz2", "--suite", "no_such_suite"});
  EXPECT_EQ(r.code, qcat::cli::kUsage);
  EXPECT_EQ(r.err.rfind("error: UnknownSuite:", 0), 0u) << r.err;
}

TEST(Verify, ByteIdenticalJson) {
  const std::vector<std::string> args{"verify", "matvec:2,1@GF(3)", "--trials", "15", "--seed", "9",
                                      "--random-serre", "--format", "json"};
  const auto a = qcat_run(args), b = qcat_run(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW((void)json_of(a));
}

TEST(Errors, ParseErrorHasLineAndColumn) {
  const auto r = qcat_run({"analyze", spec("broken.json")});
  EXPECT_EQ(r.code, qcat::cli::kParse);
  EXPECT_NE(r.err.find("broken.json:4:"), std::string::npos) << r.err;
}

TEST(Errors, UnknownObjectAndBadFlags) {
  auto r = qcat_run({"qhom", spec("a2.json"), "M12", "Nope"});
  EXPECT_EQ(r.code, qcat::cli::kUsage);
  EXPECT_EQ(r.err.rfind("error: UnknownObject:", 0), 0u) << r.err;
  r = qcat_run({"analyze", "repz2", "--format", "xml"});
  EXPECT_EQ(r.code, qcat::cli::kUsage);
  r = qcat_run({"frobnicate"});
  EXPECT_EQ(r.code, qcat::cli::kUsage);
  r = qcat_run({"closure", "repz2", "--simples", "W9"});
  EXPECT_EQ(r.code, qcat::cli::kUsage);
}

TEST(Errors, NotTensorIdeal) {
  const auto r = qcat_run({"verify", "repz2", "--serre", "W1", "--suite", "quotient_monoidal"});
  EXPECT_EQ(r.code, qcat::cli::kRequirement);
}

TEST(Suites, ListsAliases) {
  const auto r = qcat_run({"suites"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("lemma_2_4"), std::string::npos);
  EXPECT_NE(r.out.find("quotient_classification"), std::string::npos);
}

TEST(Presets, RepzFieldsAndObjects) {
  const auto w = qcat::cli::preset("repz4");
  EXPECT_EQ(w.backend->field(), qcat::Field::prime(5));
  EXPECT_EQ(w.backend->simple_count(), 4u);
  EXPECT_EQ(w.object("R").dim(), 4u);
  const auto a = qcat::cli::preset("pathA3@GF(3)");
  EXPECT_EQ(a.backend->field(), qcat::Field::prime(3));
  EXPECT_EQ(a.object("M13").dim(), 3u);
  EXPECT_EQ(a.object("S2").dim(), 1u);
}
