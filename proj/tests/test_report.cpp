#include <gtest/gtest.h>

#include <random>

#include "parsep/parsep.hpp"

using namespace parsep;

namespace {

Report sample_report() {
  Report r;
  r.command = "demo";
  r.parameters = {{"order", "10"}};
  r.timestamp = "2020-01-01T00:00:00Z";
  r.add({"plain", "x = y", "1", "1", true});
  r.add({"needs,quoting", "x", "say \"hi\"", "line\nbreak", false});
  return r;
}

TEST(Report, JsonShapeAndSummary) {
  auto j = to_json(sample_report());
  EXPECT_EQ(j["command"], "demo");
  EXPECT_EQ(j["parameters"]["order"], "10");
  ASSERT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["results"][0]["case"], "plain");
  EXPECT_EQ(j["results"][1]["pass"], false);
  EXPECT_EQ(j["summary"]["total"], 2);
  EXPECT_EQ(j["summary"]["passed"], 1);
  EXPECT_EQ(j["summary"]["failed"], 1);
  EXPECT_EQ(j["timestamp"], "2020-01-01T00:00:00Z");
  EXPECT_FALSE(to_json(sample_report(), false).contains("timestamp"));
  EXPECT_FALSE(sample_report().all_passed());
}

TEST(Report, CsvQuotesSpecialFields) {
  EXPECT_EQ(to_csv(sample_report()),
            "case,expected,actual,pass\n"
            "plain,1,1,true\n"
            "\"needs,quoting\",\"say \"\"hi\"\"\",\"line\nbreak\",false\n");
}

TEST(Report, TimestampIsUtcIso) {
  std::string t = utc_timestamp();
  ASSERT_EQ(t.size(), 20u);
  EXPECT_EQ(t[10], 'T');
  EXPECT_EQ(t.back(), 'Z');
}

TEST(Io, PartitionAndDiagramRoundTrip) {
  Partition p{9, 9, 7, 4, 2};
  EXPECT_EQ(io::partition_from_json(io::to_json(p)), p);
  DiagramPair pair{ColoredDiagram({{4, PartColor::ab}, {2, PartColor::b}}), ColoredDiagram({{3, PartColor::b}})};
  EXPECT_EQ(io::pair_from_json(io::to_json(pair)), pair);
  io::Json bad = io::to_json(pair);
  bad["left"]["parts"][0][1] = "C";
  EXPECT_THROW(io::pair_from_json(bad), std::invalid_argument);
}

TEST(Io, SeriesRoundTripPreservesEveryCoefficient) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Box box = trial % 2 ? Box::bivariate(12) : Box::triple(8, 3, 4);
    GradedSeries s(box);
    std::uniform_int_distribution<int> coeff(-1000, 1000);
    for (int q = 0; q <= box.order; ++q) {
      for (int z = -std::min(q, box.z_window); z <= std::min(q, box.z_window); ++z) {
        for (int a = 0; a <= box.cap_a; ++a) {
          Integer c = coeff(rng);
          c *= Integer("123456789012345678901234567890");
          s += GradedSeries::monomial(box, Monomial{q, a, a % (box.cap_b + 1), z}, c);
        }
      }
    }
    GradedSeries back = io::series_from_json(io::to_json(s));
    EXPECT_EQ(back, s);
    EXPECT_EQ(back.box().order, box.order);
  }
  io::Json j = io::to_json(eta_product(5));
  j["terms"].push_back(io::Json::array({9, 0, 0, 0, "1"}));
  EXPECT_THROW(io::series_from_json(j), series_error);
}

TEST(Io, CrankTableEntries) {
  CrankTable t = crank_table({Family::beo}, 8, CrankStatistic::eoc);
  io::Json j = io::to_json(t);
  EXPECT_EQ(j["family"], "BEO");
  EXPECT_EQ(j["statistic"], "EOC");
  std::int64_t total = 0;
  for (const auto& e : j["entries"]) total += e[1].get<std::int64_t>();
  EXPECT_EQ(total, t.total());
}

TEST(Checks, HelpersReportTheFirstFailure) {
  GradedSeries x = eta_product(20), y = eta_product(20);
  EXPECT_TRUE(checks::series_equal("s", "c", x, y).pass);
  y += GradedSeries::monomial(y.box(), q_pow(7), 3);
  CaseResult bad = checks::series_equal("s", "c", x, y);
  EXPECT_FALSE(bad.pass);
  EXPECT_NE(bad.actual.find("q^7"), std::string::npos);
  CaseResult r = checks::for_all("f", "c", 0, 10, [](int n) -> std::optional<std::string> {
    if (n >= 4) return "boom";
    return std::nullopt;
  });
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.actual, "fails at n=4: boom");
}

TEST(Checks, ParallelMapKeepsOrder) {
  auto f = [](int i) { return i * i; };
  auto one = checks::parallel_map(1, 50, f);
  auto many = checks::parallel_map(7, 50, f);
  EXPECT_EQ(one, many);
  EXPECT_EQ(many[49], 49 * 49);
  EXPECT_TRUE(checks::parallel_map(3, 0, f).empty());
}

TEST(Checks, ShortSeriesIsNotAPass) {
  CaseResult r = checks::conjecture_p0_mod4(5, 3, p0_series(50));
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.actual.find("too short"), std::string::npos);
}

TEST(Commands, SmallRunsPassAndAreDeterministic) {
  checks::Options o{60, 24, 1};
  for (const Report& r : {checks::cmd_identities(o), checks::cmd_congruences(o), checks::cmd_parity(o, 100)}) {
    for (const auto& c : r.results) EXPECT_TRUE(c.pass) << r.command << " " << c.name << ": " << c.actual;
  }
  checks::Options threaded{60, 24, 4};
  EXPECT_EQ(to_json(checks::cmd_congruences(o), false), to_json(checks::cmd_congruences(threaded), false));
  EXPECT_EQ(to_json(checks::cmd_identities(o), false).dump(), to_json(checks::cmd_identities(threaded), false).dump());
}

TEST(Commands, ConjectureSelection) {
  checks::Options o;
  Report r = checks::cmd_conjectures(o, {"5.3"}, 20, 200, 30);
  ASSERT_EQ(r.results.size(), 2u);
  EXPECT_TRUE(r.all_passed());
  Report d = checks::cmd_conjectures(o, {"5.2"}, 20, 200, 30);
  ASSERT_EQ(d.results.size(), 1u);
  EXPECT_EQ(d.results[0].expected, "informational");
  EXPECT_THROW(checks::cmd_conjectures(o, {"6.1"}), std::invalid_argument);
}

}  // namespace
