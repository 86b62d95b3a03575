#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"

namespace adapt_meter {
namespace {

using namespace adapt_meter::testing;
using nlohmann::json;

class ReportTest : public ::testing::Test {
 protected:
  ProcessModel process = load_process_fixture("travel_booking.bpel");
  AnalysisConfig config;
  MetricsResult result = process_adaptability(
      process, bind_aspects(process, load_aspect_dir("travel_booking_aspects"), config), config);
};

TEST_F(ReportTest, TextSummary) {
  const std::string text = render_text(result, false);
  EXPECT_EQ(text.rfind("Process TravelBooking\n", 0), 0u);
  EXPECT_NE(text.find("reference value R = 3, count mode = set, join points = receive,invoke,reply"),
            std::string::npos);
  EXPECT_NE(text.find("\nPAM = 0.2917 (7/24)\n"), std::string::npos);
  EXPECT_NE(text.find("0.8333 (5/6)"), std::string::npos);
  EXPECT_EQ(text.find('\x1b'), std::string::npos);
  EXPECT_NE(render_text(result, true).find('\x1b'), std::string::npos);
}

TEST_F(ReportTest, TextZero) {
  const MetricsResult zero = process_adaptability(process, {}, config);
  EXPECT_NE(render_text(zero, false).find("\nPAM = 0.0000\n"), std::string::npos);
}

TEST_F(ReportTest, JsonRoundTripAndParity) {
  const json doc = json::parse(render_json(result));
  EXPECT_EQ(doc["schema_version"], "1");
  EXPECT_EQ(doc["command"], "analyze");
  EXPECT_EQ(doc["process"], "TravelBooking");
  EXPECT_NEAR(doc["pam"].get<double>(), result.pam, 1e-9);
  EXPECT_EQ(doc["pam_exact"], "7/24");
  EXPECT_EQ(doc["reference_value"], 3);
  EXPECT_EQ(doc["count_mode"], "set");
  EXPECT_EQ(doc["join_point_kinds"], json::array({"receive", "invoke", "reply"}));

  const auto nodes = flatten(result.root);
  ASSERT_EQ(doc["nodes"].size(), nodes.size());
  const std::string text = render_text(result, false);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const json& n = doc["nodes"][i];
    EXPECT_EQ(n["path"], nodes[i]->path.to_string());
    EXPECT_EQ(n["join_point"], nodes[i]->join_point);
    EXPECT_NEAR(n["vd"].get<double>(), nodes[i]->vd, 1e-9);
    // Every JSON node appears in the text table with the same rounded VD.
    const std::string row_start = nodes[i]->path.to_string() + " ";
    const auto at = text.find("\n" + row_start);
    ASSERT_NE(at, std::string::npos) << row_start;
    const std::string row = text.substr(at + 1, text.find('\n', at + 1) - at - 1);
    EXPECT_NE(row.find(format_fixed(n["vd"].get<double>(), 4)), std::string::npos) << row;
  }
  EXPECT_TRUE(doc["nodes"][0]["vv"].is_null());
  EXPECT_EQ(doc["nodes"][0]["n_used"], 4);
}

TEST_F(ReportTest, JsonKeyOrderIsStable) {
  const std::string text = render_json(result);
  EXPECT_LT(text.find("\"schema_version\""), text.find("\"tool_version\""));
  EXPECT_LT(text.find("\"tool_version\""), text.find("\"command\""));
  EXPECT_LT(text.find("\"pam\""), text.find("\"nodes\""));
  EXPECT_EQ(text, render_json(result));
}

TEST_F(ReportTest, Compare) {
  std::vector<Aspect> more = load_aspect_dir("travel_booking_aspects");
  more.push_back(load_aspect_fixture("extra_receive_logging.aspect.xml"));
  const MetricsResult b =
      process_adaptability(process, bind_aspects(process, more, config), config);
  const Comparison c = compare_results(result, b);
  EXPECT_GT(c.pam_delta, 0.0);
  EXPECT_NEAR(c.pam_signed_delta, 0.25 / 3.0, 1e-12);  // receive weight 1/4, one type
  ASSERT_EQ(c.join_points.size(), 5u);
  EXPECT_EQ(c.join_points[0].path, kReceive);
  EXPECT_NEAR(c.join_points[0].delta, 1.0 / 3.0, 1e-12);
  for (std::size_t i = 1; i < 5; ++i) EXPECT_EQ(c.join_points[i].delta, 0.0);

  const std::string text = render_compare_text(c, false);
  EXPECT_NE(text.find("delta = 0.0833 (B higher)"), std::string::npos);
  const json doc = json::parse(render_compare_json(c));
  EXPECT_EQ(doc["higher"], "b");
  EXPECT_EQ(doc["command"], "compare");
  EXPECT_NEAR(doc["pam_delta"].get<double>(), c.pam_delta, 1e-12);

  const Comparison reversed = compare_results(b, result);
  EXPECT_EQ(reversed.pam_delta, c.pam_delta);
  EXPECT_NE(render_compare_text(reversed, false).find("(A higher)"), std::string::npos);

  const Comparison same = compare_results(result, result);
  EXPECT_EQ(same.pam_delta, 0.0);
  EXPECT_NE(render_compare_text(same, false).find("delta = 0.0000 (equal)"), std::string::npos);
}

TEST(CsvTest, SweepAndEnvelopeFormats) {
  SweepResult sweep;
  sweep.cases = {{0, {}, {{0, 0.0}, {1, 1.0 / 3.0}}}, {1, {}, {{0, 0.0}, {1, 1.0}}}};
  EXPECT_EQ(render_sweep_csv(sweep),
            "case_id,count,pam\n0,0,0.000000\n0,1,0.333333\n1,0,0.000000\n1,1,1.000000\n");
  const std::vector<SweepEnvelope> env = {{0, 0, 0, 0}, {1, 0.25, 0.5, 0.75}};
  EXPECT_EQ(render_envelope_csv(env),
            "count,min_pam,mean_pam,max_pam\n0,0.000000,0.000000,0.000000\n"
            "1,0.250000,0.500000,0.750000\n");
}

TEST(FormatTest, Fixed) {
  EXPECT_EQ(format_fixed(7.0 / 24.0, 4), "0.2917");
  EXPECT_EQ(format_fixed(0.0, 6), "0.000000");
  EXPECT_EQ(format_fixed(1.0, 4), "1.0000");
}

}  // namespace
}  // namespace adapt_meter
