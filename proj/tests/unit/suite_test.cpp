#include "logmean/claims/suite.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace logmean::claims;

TEST(Suite, ParsesRecordsAndComments)
{
    const auto s = parse_suite("# header\n\n"
                               "a | H <= G | expect=HOLDS | first\n"
                               "  b | 5*(N3-L) <= 6*(N1-L) | expect=FAILS |  note | with bar  \n"
                               "c | A <= S | expect=HOLDS\n",
                               "t");
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0].id, "a");
    EXPECT_EQ(s[0].source, "t:3");
    EXPECT_EQ(s[0].note, "first");
    EXPECT_EQ(s[1].expectation, Verdict::fails);
    EXPECT_EQ(s[1].note, "note | with bar");
    EXPECT_EQ(s[2].note, "");
}

TEST(Suite, ErrorsCarryLineNumbers)
{
    const auto line_of = [](const char* text) -> std::size_t {
        try {
            parse_suite(text, "t");
        } catch (const SuiteError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("a | A <= S | expect=HOLDS\n\nb | A <= | expect=HOLDS\n"), 3u);
    EXPECT_EQ(line_of("a | A <= S | expect=MAYBE\n"), 1u);
    EXPECT_EQ(line_of("a | A <= S | expect=HOLDS\na | G <= S | expect=HOLDS\n"), 2u);
    EXPECT_EQ(line_of("just text\n"), 1u);
    EXPECT_EQ(line_of(" | A <= S | expect=HOLDS\n"), 1u);
}

TEST(Suite, BundledSuiteCoversEveryDisplay)
{
    const auto s = bundled_suite();
    std::set<std::string> ids;
    for (const ClaimEntry& e : s)
        ids.insert(e.id);
    EXPECT_EQ(ids.size(), s.size());
    for (const char* id :
         {"eq2-chain", "eq3-dp-half", "eq4-chain", "eq5-bound", "eq6-chain", "eq9-chain", "eq10-chain", "eq11-chain",
          "eq16-chain", "eq17-chain", "eq18-chain", "eq31-chain", "eq32-chain", "eq33-chain", "eq34-bound",
          "eq35-printed", "eq35-printed-tail", "eq35-corrected", "eq36-chain", "eq37-bound", "eq40-bound",
          "eq43-bound", "eq46-bound", "eq49-bound", "eq51-bound", "eq52-bound", "eq53-bound", "eq54-chain",
          "eq55-chain", "eq56-chain", "eq57-chain", "eq58-t1", "eq59-printed", "eq59-corrected", "eq60-printed",
          "eq60-middle-printed", "eq60-middle-corrected", "eq60-corrected", "eq61-chain", "eq62-t2", "remark44-le",
          "remark44-ge", "eq63-printed", "eq63-printed-left", "eq63-corrected", "remark45-t4"})
        EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Suite, CorrectedEntriesNameWhatTheyAmend)
{
    for (const ClaimEntry& e : bundled_suite()) {
        if (e.id.find("-corrected") == std::string::npos)
            continue;
        EXPECT_NE(e.note.find("amends eq"), std::string::npos) << e.id;
        EXPECT_EQ(e.expectation, e.id == "eq59-corrected-substituted" ? Verdict::fails : Verdict::holds) << e.id;
    }
}

TEST(Suite, LoadFileErrors)
{
    EXPECT_THROW(load_suite_file("/nonexistent/suite.txt"), SuiteError);
}
