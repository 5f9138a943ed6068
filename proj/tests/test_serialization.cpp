#include <gtest/gtest.h>

#include <json.hpp>

#include "dupdist/approx_engine.hpp"
#include "dupdist/bounds.hpp"
#include "dupdist/errors.hpp"
#include "dupdist/generators.hpp"
#include "dupdist/serialization.hpp"

using namespace dupdist;

TEST(ProcessJson, RoundTrip) {
  const auto p = make_process(BinarySeq::from_string("0110"), {{2, 1, Keep::second}});
  const std::string text = process_to_json(p);
  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["original"], "0110");
  EXPECT_EQ(j["final"], "010");
  EXPECT_EQ(j["beta"], 0.0);
  EXPECT_EQ(j["steps"][0]["keep"], "second");
  EXPECT_EQ(process_from_json(text), p);
}

TEST(ProcessJson, ScheduleRoundTrip) {
  const auto p = tm_schedule(8);
  EXPECT_EQ(process_from_json(process_to_json(p, 2)), p);
}

TEST(ProcessJson, ApproximateRuleSurvives) {
  const auto p = optimal_rule_process(BinarySeq::from_string("011101"), MismatchRule::linear(0.5));
  const auto q = process_from_json(process_to_json(p));
  EXPECT_EQ(q, p);
  EXPECT_EQ(replay(q), p.final_seq);
}

TEST(ProcessJson, Malformed) {
  EXPECT_THROW(process_from_json("{"), InvalidInput);
  EXPECT_THROW(process_from_json(R"({"original":"0110","beta":0,"steps":[{"i":0,"h":1,"keep":"first"}],"final":"010"})"),
               InvalidInput);
  EXPECT_THROW(process_from_json(R"({"original":"0110","beta":0,"steps":[{"i":2,"h":1,"keep":"left"}],"final":"010"})"),
               InvalidInput);
}

TEST(WitnessJson, RoundTrip) {
  RepeatWitness w{5, 12, 3, 11, 2, 6, {0, 3}, 1};
  EXPECT_EQ(witness_from_json(witness_to_json(w)), w);
  const auto j = nlohmann::json::parse(witness_to_json(w));
  EXPECT_EQ(j["h"], 12);
  EXPECT_EQ(j["mismatches"], 3);
}

TEST(ReportJson, HasEntries) {
  const auto j = nlohmann::json::parse(report_to_json(bound_report(100)));
  EXPECT_EQ(j["n"], 100);
  ASSERT_TRUE(j["bounds"].is_array());
  EXPECT_FALSE(j["bounds"].empty());
  EXPECT_TRUE(j["consistent"].get<bool>());
}
