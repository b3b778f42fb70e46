#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace hpmodel;
using namespace testing_helpers;

TEST(Parse, PaperInputs)
{
  auto p = example2();
  EXPECT_EQ(parse_expression("x1*x2^2", p), AlgebraElement(mono(p, {{1, 1}, {2, 2}})));
  EXPECT_EQ(parse_expression("3*x1*x2*x3", p), AlgebraElement(mono(p, {{1, 1}, {2, 1}, {3, 1}}), 3));
  EXPECT_EQ(parse_expression(" 8 x1 x2 x3^2*x4 ", p), AlgebraElement(mono(p, {{1, 1}, {2, 1}, {3, 2}, {4, 1}}), 8));
}

TEST(Parse, KoszulNormalization)
{
  Presentation p({1, 1});
  EXPECT_EQ(parse_expression("x2*x1", p), -AlgebraElement(mono(p, {{1, 1}, {2, 1}})));
  EXPECT_EQ(parse_expression("x1 - x2 + x2", p), AlgebraElement(p.generator(1)));
  EXPECT_EQ(parse_expression("-x1", p), -AlgebraElement(p.generator(1)));
}

TEST(Parse, ExteriorPowerWarns)
{
  Presentation p({1, 2});
  std::vector<std::string> warnings;
  EXPECT_TRUE(parse_expression("x1^2 + x1*x1", p, &warnings).empty());
  EXPECT_EQ(warnings.size(), 2u);
}

TEST(Parse, Errors)
{
  Presentation p({1, 2});
  EXPECT_THROW(parse_expression("x3", p), ParseError);
  EXPECT_THROW(parse_expression("x1 +", p), ParseError);
  EXPECT_THROW(parse_expression("x1 ^ 0", p), ParseError);
  EXPECT_THROW(parse_expression("x1 * ", p), ParseError);
  EXPECT_THROW(parse_expression("y1", p), ParseError);
  try {
    parse_expression("x1 + x9", p);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 5u);
  }
}

TEST(Render, ModelStrings)
{
  auto p = example1();
  ModelElement w4{{model_generator(p, 1), 1}, {model_generator(p, 2), -1}};
  EXPECT_EQ(render(p, w4), "X1 - X2");
  EXPECT_EQ(render(p, ModelElement()), "0");
  ModelElement w7{{model_mono(p, {{1, 1}, {2, 1}}), 1}, {model_mono(p, {{2, 2}}), -2}};
  EXPECT_EQ(render(p, w7), "X1*X2 - 2*X2^2");
  auto q = example2();
  EXPECT_EQ(render(q, ModelElement(model_generator(q, 1, 13), Integer("21799895040"))), "21799895040*X1^13");
}

TEST(Render, RoundTrip)
{
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    Presentation p = random_presentation(rng);
    for (int s = 0; s < 20; ++s) {
      AlgebraElement a;
      for (int t = 0; t < 3; ++t) a.add(random_letter(rng, p, 10), uniform(rng, -40, 40));
      if (uniform(rng, 0, 3) == 0) a.add(p.unit(), uniform(rng, -5, 5));
      EXPECT_EQ(parse_expression(render(p, a), p), a) << render(p, a);
    }
  }
}

TEST(Documents, JsonInputAndOutput)
{
  auto doc = nlohmann::json::parse(R"({"degrees":[1,2,6],"rho":{"x2":"-2*x1","x3":"x1*x2^2"}})");
  Presentation p = presentation_from_json(doc);
  EXPECT_TRUE(validate_presentation(p).empty());
  EXPECT_EQ(presentation_from_json(presentation_to_json(p)).rho(), p.rho());

  auto a1 = compute_model(p, Algorithm::Alg1);
  auto a2 = compute_model(p, Algorithm::Alg2);
  EXPECT_EQ(model_to_json(p, a1, false).dump(), model_to_json(p, a2, false).dump());
  EXPECT_EQ(render_model(p, a2, OutputFormat::Text), "((2,3,7),(0,-2*X1,8*X1^3))");
  auto j = model_to_json(p, a2);
  EXPECT_EQ(j["differentials"][2]["terms"][0]["coefficient"], "8");
  EXPECT_EQ(j["telemetry"].size(), 3u);

  EXPECT_THROW(presentation_from_json(nlohmann::json::parse(R"({"degrees":[1],"rho":{"x2":"x1"}})")), InputError);
  EXPECT_THROW(presentation_from_json(nlohmann::json::parse(R"({"rho":{}})")), InputError);
  EXPECT_THROW(presentation_from_json(nlohmann::json::parse(R"({"degrees":[1,2],"rho":{"x2":"x1 +"}})")), InputError);
}

TEST(Documents, JsonIdenticalAcrossAlgorithms)
{
  Rng rng(8);
  for (int i = 0; i < 25; ++i) {
    Presentation p = random_presentation(rng);
    EXPECT_EQ(model_to_json(p, compute_model(p, Algorithm::Alg1), false).dump(),
              model_to_json(p, compute_model(p, Algorithm::Alg2), false).dump());
  }
}

TEST(Durations, TruncatedUnits)
{
  EXPECT_EQ(format_duration(Rational(9715, 1000000), 3).value, "0.009");
  auto d = format_duration(cost_estimate(Algorithm::Alg1, 6, 3).seconds());
  EXPECT_EQ(d.value, "24.75");
  EXPECT_EQ(d.unit, "years");
  d = format_duration(cost_estimate(Algorithm::Alg2, 6, 3).seconds());
  EXPECT_EQ(d.value, "19.56");
  EXPECT_EQ(d.unit, "min");
}
