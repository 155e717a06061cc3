#include <gtest/gtest.h>

#include "fraclocdim/family_string.hpp"
#include "fraclocdim/report.hpp"

using namespace fraclocdim;

namespace {
std::string row_for(const char* family) {
    GraphAnalysis a(make_family(family));
    const std::string csv = emit_table({invariant_row(a)}, OutputFormat::csv);
    return csv.substr(csv.find('\n') + 1);
}
}  // namespace

TEST(Report, KnownTableRows) {
    EXPECT_EQ(row_for("petersen"), "petersen,10,15,6,6,3,5/3,5/3\n");
    EXPECT_EQ(row_for("complete(4)"), "complete(4),4,6,2,2,3,2,2\n");
    // r(C6) is 4, attained by pairs at distance two.
    EXPECT_EQ(row_for("cycle(6)"), "cycle(6),6,6,6,4,1,1,3/2\n");
}

TEST(Report, CsvHeaderAndDecimalColumns) {
    GraphAnalysis a(make_family("cycle(5)"));
    const std::string csv = emit_table({invariant_row(a)}, OutputFormat::csv, true);
    EXPECT_EQ(csv, "graph,n,m,l,r,ldim,ldim_f,dim_f,ldim_f_decimal,dim_f_decimal\n"
                   "cycle(5),5,5,4,4,2,5/4,5/4,1.250000,1.250000\n");
}

TEST(Report, CommasInNamesAreQuoted) {
    GraphAnalysis a(make_family("lollipop(4,3)"));
    const std::string csv = emit_table({invariant_row(a)}, OutputFormat::csv);
    EXPECT_NE(csv.find("\"lollipop(4,3)\",7,9"), std::string::npos);
}

TEST(Report, CeilingsRenderAsDash) {
    Limits tight;
    tight.max_lp_order = 4;
    tight.search_order = 4;
    GraphAnalysis a(make_family("cycle(5)"), tight);
    const std::string csv = emit_table({invariant_row(a)}, OutputFormat::csv);
    EXPECT_NE(csv.find("cycle(5),5,5,4,4,-,-,-"), std::string::npos);
}

TEST(Report, JsonTableKeepsFractions) {
    GraphAnalysis a(make_family("petersen"));
    const auto j = nlohmann::json::parse(emit_table({invariant_row(a)}, OutputFormat::json));
    EXPECT_EQ(j[0]["ldim_f"], "5/3");
    EXPECT_EQ(j[0]["ldim"], 3);
}

TEST(Report, TheoremReportFormats) {
    const auto reports = run_suite({parse_family_string("cycle(5)")}, {"bipartite-iff-one", "vertex-transitive"});
    const auto j = nlohmann::json::parse(emit_report(reports, OutputFormat::json));
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["status"], "pass");
    EXPECT_EQ(j[1]["values"]["n_over_l"], "5/4");
    const std::string csv = emit_report(reports, OutputFormat::csv);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "claim,graphs,status,witness,values,note");
    EXPECT_NE(emit_report(reports, OutputFormat::table).find("vertex-transitive"), std::string::npos);
    EXPECT_THROW(parse_output_format("xml"), std::invalid_argument);
}

TEST(Report, Tally) {
    std::vector<TheoremReport> reports(3);
    reports[1].status = Status::fail;
    reports[2].status = Status::skipped_ceiling;
    const auto t = tally(reports);
    EXPECT_EQ(t[0], 1u);
    EXPECT_EQ(t[1], 1u);
    EXPECT_EQ(t[3], 1u);
}
