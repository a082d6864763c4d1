#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "hk/harness.hpp"
#include "json.hpp"

using namespace hk;

TEST(NaturalSort, DigitRuns) {
    EXPECT_TRUE(natural_less("m9", "m10"));
    EXPECT_FALSE(natural_less("m10", "m9"));
    EXPECT_TRUE(natural_less("a.n2k10", "a.n10k1"));
    EXPECT_TRUE(natural_less("abc", "abd"));
    EXPECT_FALSE(natural_less("x1", "x1"));
    std::vector<std::string> v{"t.m13", "t.m2", "t.m100", "s.x"};
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
    EXPECT_EQ(v, (std::vector<std::string>{"s.x", "t.m2", "t.m13", "t.m100"}));
}

// err is half a unit in the last digit, plus the rounding of the decimal itself.
void expect_half_unit(std::string_view text, double unit) {
    Value v = printed_value(text);
    EXPECT_GE(v.err(), 0.5 * unit) << text;
    EXPECT_LE(v.err(), 0.5 * unit + 1e-12 * std::fabs(v.estimate()) + 1e-300) << text;
    EXPECT_EQ(v.method(), Method::PaperTable) << text;
}

TEST(Printed, HalfUnitInLastDigit) {
    EXPECT_DOUBLE_EQ(printed_value("2.7378e-2").estimate(), 2.7378e-2);
    expect_half_unit("2.7378e-2", 1e-6);
    expect_half_unit("0.5757", 1e-4);
    expect_half_unit("3.2423", 1e-4);
    expect_half_unit("12", 1.0);
    expect_half_unit("3.23369e-13", 1e-18);
    EXPECT_THROW(printed_value("1.0e"), Error);
}

TEST(Csv, Quoting) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
}

TEST(Tables, RowCountsAndValues) {
    ReportTable cn = build_table(TableName::Cn);
    EXPECT_EQ(cn.rows.size(), 13u);
    EXPECT_EQ(cn.provenance.size(), 13u);
    ReportTable gt = build_table(TableName::GammaTilde);
    ASSERT_EQ(gt.rows.size(), 13u);
    EXPECT_NEAR(std::get<Value>(gt.rows[9][1]).estimate(), 2.1801e-2, 1e-6);
    EXPECT_NEAR(std::get<Value>(cn.rows[4][1]).estimate(), 2.6027e-4, 1e-8);
    ReportTable q = build_table(TableName::Quotients);
    EXPECT_EQ(q.rows.size(), 12u);
    EXPECT_TRUE(std::holds_alternative<std::string>(q.rows[0][2]));
    EXPECT_EQ(build_table(TableName::Cn, 4).rows.size(), 4u);
    EXPECT_THROW(build_table(TableName::Cn, 14), Error);
}

TEST(Tables, CsvHasErrColumns) {
    std::ostringstream os;
    emit_table(build_table(TableName::GammaTilde, 2), Format::Csv, os);
    std::string s = os.str();
    EXPECT_EQ(s.substr(0, s.find("\r\n")), "n,gamma_tilde,gamma_tilde_err,printed,printed_err,provenance");
}

TEST(Records, JsonRoundTrip) {
    Campaign c = run_campaign(CampaignName::Tables);
    std::ostringstream os;
    emit_records(c.records, Format::Json, os);
    auto j = nlohmann::json::parse(os.str());
    ASSERT_EQ(j.size(), c.records.size());
    for (std::size_t i = 0; i < c.records.size(); ++i) {
        VerificationRecord r = j[i].get<VerificationRecord>();
        EXPECT_EQ(r.claim_id, c.records[i].claim_id);
        EXPECT_EQ(r.status, c.records[i].status);
        EXPECT_EQ(r.computed.estimate(), c.records[i].computed.estimate());
        EXPECT_EQ(r.margin, c.records[i].margin);
    }
}

TEST(Campaigns, DeterministicAndUnique) {
    Campaign a = run_campaign(CampaignName::All);
    Campaign b = run_campaign(CampaignName::All);
    std::ostringstream sa, sb;
    emit_records(a.records, Format::Csv, sa);
    emit_records(b.records, Format::Csv, sb);
    EXPECT_EQ(sa.str(), sb.str());
    std::set<std::string> ids;
    for (const auto& r : a.records) EXPECT_TRUE(ids.insert(r.claim_id).second) << r.claim_id;
    EXPECT_TRUE(std::is_sorted(a.records.begin(), a.records.end(),
                               [](const auto& x, const auto& y) { return natural_less(x.claim_id, y.claim_id); }));
}

TEST(Campaigns, ClaimIdsMatchRecords) {
    for (CampaignName n : {CampaignName::Maincomp, CampaignName::Pansu, CampaignName::Bessel, CampaignName::Hps,
                           CampaignName::Series}) {
        Campaign c = run_campaign(n);
        std::vector<std::string> ids = campaign_claim_ids(n);
        ASSERT_EQ(ids.size(), c.records.size()) << to_string(n);
        for (std::size_t i = 0; i < ids.size(); ++i) EXPECT_EQ(ids[i], c.records[i].claim_id);
        EXPECT_EQ(c.exit_status, std::all_of(c.records.begin(), c.records.end(),
                                             [](const auto& r) { return r.passed(); })
                                     ? 0
                                     : 1);
    }
}

TEST(Campaigns, ToleranceMultiplierDomain) {
    EXPECT_THROW(run_campaign(CampaignName::Hps, 0.05), Error);
    EXPECT_THROW(run_campaign(CampaignName::Hps, 101.0), Error);
    EXPECT_NO_THROW(run_campaign(CampaignName::Hps, 100.0));
}

TEST(Names, RoundTrip) {
    for (CampaignName n : {CampaignName::Maincomp, CampaignName::Pansu, CampaignName::Bessel, CampaignName::Hps,
                           CampaignName::Tables, CampaignName::Series, CampaignName::Lifting, CampaignName::All})
        EXPECT_EQ(campaign_from_string(to_string(n)), n);
    EXPECT_THROW(campaign_from_string("nope"), Error);
    EXPECT_EQ(format_from_string("csv"), Format::Csv);
    EXPECT_EQ(table_from_string("gamma_tilde"), TableName::GammaTilde);
}
