#include "henkato/io.hpp"

#include <gtest/gtest.h>

#include <string>

#include "henkato/sampling.hpp"

using namespace henkato;

namespace {
GaussianRational gq(const std::string& s) { return GaussianRational::from_string(s); }
}

TEST(GaussianText, CanonicalForms) {
  EXPECT_EQ(gq("0").str(), "0");
  EXPECT_EQ(gq("1").str(), "1");
  EXPECT_EQ(gq("-1").str(), "-1");
  EXPECT_EQ(gq("3/2").str(), "3/2");
  EXPECT_EQ(gq("-6/4").str(), "-3/2");
  EXPECT_EQ(gq("i").str(), "i");
  EXPECT_EQ(gq("-i").str(), "-i");
  EXPECT_EQ(gq("2i/3").str(), "2i/3");
  EXPECT_EQ(gq("(1+i)").str(), "(1+i)");
  EXPECT_EQ(gq("-(1+i)/3").str(), "-(1+i)/3");
  EXPECT_EQ(gq("(3-2i)/5").str(), "(3-2i)/5");
  EXPECT_EQ((gq("-1/3") + gq("-i/3")).str(), "-(1+i)/3");
  EXPECT_EQ((gq("1/2") + gq("i/3")).str(), "(3+2i)/6");
}

TEST(GaussianText, ParseVariants) {
  EXPECT_EQ(gq(" 7 "), GaussianRational(7));
  EXPECT_EQ(gq("(-2+3i)"), GaussianRational(mpq_class(-2), mpq_class(3)));
  EXPECT_EQ(gq("-(2-3i)/4"), GaussianRational(mpq_class(-1, 2), mpq_class(3, 4)));
  EXPECT_EQ(gq("+i"), GaussianRational::i());
  EXPECT_FALSE(GaussianRational::parse(""));
  EXPECT_FALSE(GaussianRational::parse("1/0"));
  EXPECT_FALSE(GaussianRational::parse("x"));
  EXPECT_FALSE(GaussianRational::parse("(1+i"));
  EXPECT_FALSE(GaussianRational::parse("1+i"));  // mixed values need parentheses
  EXPECT_FALSE(GaussianRational::parse("1.5"));
}

TEST(GaussianText, PrintParseRoundtrip) {
  Sampler s(61);
  for (int rep = 0; rep < 200; ++rep) {
    GaussianRational g = s.gaussian(50, 50);
    auto back = GaussianRational::parse(g.str());
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, g);
  }
}

TEST(MapDocument, ParsePrintRoundtrip) {
  Sampler s(62);
  for (int rep = 0; rep < 20; ++rep) {
    HenonMap m = s.map(3, 4);
    EXPECT_EQ(io::map_from_json(io::map_to_json(m)), m);
  }
}

TEST(MapDocument, AcceptsCompactAndIntegerCoefficients) {
  json doc = json::parse(R"({"factors":[{"poly":["(1+i)/2", 0, 1], "a": 3}]})");
  HenonMap m = io::map_from_json(doc);
  EXPECT_EQ(m.factor(1).p_coeffs[0], gq("(1+i)/2"));
  EXPECT_EQ(m.factor(1).a, gq("3"));
}

TEST(MapDocument, ErrorsCarryFieldPath) {
  json doc = json::parse(R"({"factors":[{"poly":[{"re":"1","im":"0"},{"re":"0"},{"re":"1"}],"a":"1"},
                             {"poly":["0","0","oops"],"a":"1"}]})");
  try {
    io::map_from_json(doc);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("factors[1].poly[2]"), std::string::npos);
  }
}

TEST(MapDocument, InvalidMapReportsFactorIndex) {
  json doc = json::parse(R"({"factors":[{"poly":["1","1","1"],"a":"1"}]})");
  try {
    io::map_from_json(doc);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("not centered, factor 1"), std::string::npos);
  }
}

TEST(NormalFormDocument, Roundtrip) {
  Sampler s(63);
  for (int rep = 0; rep < 10; ++rep) {
    NormalForm nf = normal_form(s.map(2, 3));
    NormalForm back = io::normal_form_from_json(io::normal_form_to_json(nf));
    EXPECT_EQ(back, nf);
  }
}

TEST(NormalFormDocument, RejectsExponentOutOfRange) {
  json doc = json::parse(R"({"p":2,"lambda":"1/2","g":{"3":"1"}})");
  EXPECT_THROW(io::normal_form_from_json(doc), ValidationError);
}

TEST(TargetDocument, TildeAndPlainForms) {
  json tilde = json::parse(R"({"lambda":"2","degrees":[2],"alpha_tilde":{"1":{"0":"1","2":"-1/2"}}})");
  TargetParameters t1 = io::target_from_json(tilde);
  EXPECT_EQ(t1.alpha_at(1, 2), gq("-1/2"));
  json plain = json::parse(R"({"lambda":"2","degrees":[3],"alpha":{"1":{"0":"1","1":"3/4"}}})");
  TargetParameters t2 = io::target_from_json(plain);
  EXPECT_EQ(t2.alpha_at(1, 3), gq("3/2"));
  json both = json::parse(R"({"lambda":"2","degrees":[2],"alpha":{},"alpha_tilde":{}})");
  EXPECT_THROW(io::target_from_json(both), ValidationError);
}

TEST(TowerDocument, Roundtrip) {
  TowerDescription t = build_henon_tower({2, 3});
  TowerDescription back = io::tower_from_json(io::tower_to_json(t));
  ASSERT_EQ(back.steps.size(), t.steps.size());
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    EXPECT_EQ(back.steps[k].touches, t.steps[k].touches);
    EXPECT_EQ(back.steps[k].glued_on_last, t.steps[k].glued_on_last);
  }
}
