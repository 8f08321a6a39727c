#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "latscreen/oracle.hpp"
#include "latscreen/report.hpp"

using namespace latscreen;

namespace {

std::string message_of(const std::string& text) {
  try {
    parse_lattice(text);
  } catch (const LatticeError& e) {
    return e.what();
  }
  return "";
}

bool has_warning(const Json& doc, const std::string& code) {
  for (const auto& w : doc["warnings"])
    if (w["code"] == code) return true;
  return false;
}

LatticeFile file(const IntMatrix& g) { return LatticeFile{g, "", 1}; }

}  // namespace

TEST(Parse, JsonAndBlockInputs) {
  EXPECT_EQ(parse_lattice(R"({"gram": [[2,-1],[-1,2]]})").gram(), helpers::A(2).gram());
  EXPECT_EQ(parse_lattice(R"({"gram": [[2,-1],[-1,2]], "scale": 3})").gram(), (IntMatrix{{6, -3}, {-3, 6}}));
  EXPECT_EQ(parse_lattice("2 -1\n-1  2\n").gram(), helpers::A(2).gram());
  const auto f = parse_lattice_file(R"({ "name": "A2", "gram": [[2,-1],[-1,2]] })");
  EXPECT_EQ(f.name, "A2");
  EXPECT_EQ(f.scale, 1);
}

TEST(Parse, Diagnostics) {
  EXPECT_CODE(parse_lattice(R"({"gram": [[1,2],[2,1]]})"), kNotPositiveDefinite);
  EXPECT_NE(message_of(R"({"gram": [[1,2],[2,1]]})").find("minor 2"), std::string::npos);
  EXPECT_CODE(parse_lattice(R"({"gram": [[2,1],[0,2]]})"), kNotSymmetric);
  EXPECT_CODE(parse_lattice("{\"gram\": [[2,1],\n [1,2]"), kParse);
  EXPECT_NE(message_of("{\"gram\": [[2,1],\n [1,2]").find("line 2"), std::string::npos);
  EXPECT_NE(message_of("2 1\n1 q\n").find("line 2, column 3"), std::string::npos);
  EXPECT_CODE(parse_lattice("2 1 0\n1 2 0\n"), kDimensionMismatch);
  EXPECT_CODE(parse_lattice(R"({"gram": [[2.5]]})"), kParse);
  EXPECT_CODE(parse_lattice(R"({"gram": [[2]], "scale": 0})"), kParse);
  EXPECT_CODE(parse_lattice(R"({"matrix": [[2]]})"), kParse);
  EXPECT_CODE(parse_lattice("   "), kParse);
}

TEST(Report, DigestIsStableAndSensitive) {
  EXPECT_EQ(input_digest(helpers::A(2).gram()), input_digest(IntMatrix{{2, -1}, {-1, 2}}));
  EXPECT_NE(input_digest(helpers::A(2).gram()), input_digest(helpers::A(2, 2).gram()));
  EXPECT_EQ(input_digest(helpers::A(2).gram()).size(), 16u);
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
}

TEST(Report, ScreenersOnA3) {
  const auto r = cmd_screeners(file(helpers::A(3).gram()));
  EXPECT_EQ(r.doc["command"], "screeners");
  EXPECT_EQ(r.doc["results"]["count"], 9);
  EXPECT_EQ(r.doc["results"]["nonroot_count"], 3);
  EXPECT_EQ(r.doc["results"]["by_norm"]["4"], 3);
  EXPECT_FALSE(r.mismatch);
}

TEST(Report, ClassifyD4) {
  const auto r = cmd_classify(file(helpers::D(4).gram()));
  EXPECT_EQ(r.doc["results"]["extended_type"], "F_4");
  EXPECT_EQ(r.doc["results"]["screener_count"], 48);
  EXPECT_TRUE(r.doc["results"]["consistent"].get<bool>());
}

TEST(Report, DecomposeReportsMissingGeneration) {
  const auto r = cmd_decompose(file(IntMatrix{{2, 1}, {1, 6}}));
  EXPECT_TRUE(r.doc["results"]["components"].is_null());
  EXPECT_TRUE(has_warning(r.doc, "not_generated_by_screeners"));
}

TEST(Report, OddP2bWarningExactlyWhenFlagged) {
  std::mt19937_64 rng(42);
  int seen = 0;
  for (int i = 0; i < 200; ++i) {
    const IntMatrix g = random_gram(rng, 2, 20);
    const auto r = cmd_rank2(file(g));
    const auto form = rank2_normal_form(Lattice(g));
    const bool flagged = form && form->odd_p_2b();
    EXPECT_EQ(has_warning(r.doc, kWarnOddP2b), flagged);
    EXPECT_FALSE(r.mismatch) << g(0, 0) << " " << g(0, 1) << " " << g(1, 1);
    seen += flagged;
  }
  const auto direct = cmd_rank2(file(IntMatrix{{2, -1}, {-1, 1}}));
  EXPECT_TRUE(has_warning(direct.doc, kWarnOddP2b));
  EXPECT_FALSE(has_warning(cmd_rank2(file(helpers::A(2).gram())).doc, kWarnOddP2b));
}

TEST(Report, PairsOnOddVectorNotesDoubling) {
  const auto r = cmd_pairs(file(IntMatrix{{2, 1}, {1, 3}}), {0, 1}, 50);
  EXPECT_TRUE(has_warning(r.doc, kWarnOddMomentum));
  EXPECT_EQ(r.doc["results"]["alpha"], (Vec{0, 2}));
  EXPECT_CODE(cmd_pairs(file(IntMatrix{{2, 1}, {1, 3}}), {0, 1, 0}, 50), kDimensionMismatch);
}

TEST(Report, CatalogAndTypeParsing) {
  const auto r = cmd_catalog("D_4", std::nullopt, 2);
  EXPECT_EQ(r.doc["results"]["det"], 64);
  EXPECT_EQ(parse_type("E8", std::nullopt), std::make_pair(RootFamily::E, std::size_t{8}));
  EXPECT_EQ(parse_type("a", 5), std::make_pair(RootFamily::A, std::size_t{5}));
  EXPECT_CODE(parse_type("B_3", std::nullopt), kInvalidArgument);
  EXPECT_CODE(parse_type("D", std::nullopt), kInvalidArgument);
  EXPECT_CODE(parse_type("D_4", 5), kInvalidArgument);
}

TEST(Report, SerializationRoundTripsAndIsDeterministic) {
  const auto a = cmd_pairs(file(IntMatrix{{12, 0}, {0, 2}}), {1, 0}, 20);
  const auto b = cmd_pairs(file(IntMatrix{{12, 0}, {0, 2}}), {1, 0}, 20);
  EXPECT_EQ(a.doc.dump(), b.doc.dump());
  EXPECT_EQ(Json::parse(a.doc.dump()), a.doc);
  const auto o1 = cmd_oracle_check(7, 2, 20, 8);
  const auto o2 = cmd_oracle_check(7, 2, 20, 8);
  EXPECT_EQ(o1.doc.dump(), o2.doc.dump());
  EXPECT_EQ(o1.doc["results"]["status"], "PASS");
  EXPECT_EQ(o1.timing.size(), 20u);
}

TEST(Report, TextRendering) {
  const auto text = render_text(cmd_catalog("A", 2, 1).doc);
  EXPECT_NE(text.find("type: A_2"), std::string::npos);
  EXPECT_NE(text.find("gram: [[2,-1],[-1,2]]"), std::string::npos);
}
