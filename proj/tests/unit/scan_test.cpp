#include "logmean/claims/parser.hpp"
#include "logmean/claims/program.hpp"
#include "logmean/claims/scan.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace logmean;
using namespace logmean::claims;

namespace {

ExprPtr named(std::string_view name)
{
    for (const NamedExpression& t : difference_functions())
        if (t.name == name)
            return parse_expression(t.text);
    throw std::out_of_range(std::string(name));
}

} // namespace

TEST(SignScan, T3ChangesSign)
{
    const SignReport r = sign_change_scan(*named("T3"), 1e-6, 1e6, 2000, false, {1e-5, 1.1});
    EXPECT_FALSE(r.single_signed());
    EXPECT_EQ(r.points, 2002u);
    const auto neg_at = std::find_if(r.negatives.begin(), r.negatives.end(), [](auto s) { return s.x == 1e-5; });
    ASSERT_NE(neg_at, r.negatives.end());
    EXPECT_NEAR(neg_at->value, -0.0037512758188412709, 1e-15);
    const auto pos_at = std::find_if(r.positives.begin(), r.positives.end(), [](auto s) { return s.x == 1.1; });
    ASSERT_NE(pos_at, r.positives.end());
    EXPECT_NEAR(pos_at->value, 1.3213512833e-4, 1e-13);
}

TEST(SignScan, OracleMatchesBinary64)
{
    const SignReport a = sign_change_scan(*named("T3"), 1e-3, 1e3, 300, false);
    const SignReport b = sign_change_scan(*named("T3"), 1e-3, 1e3, 300, true);
    EXPECT_EQ(a.negatives.size(), b.negatives.size());
    EXPECT_EQ(a.positives.size(), b.positives.size());
}

TEST(SignScan, NonnegativeDifferencesAreSingleSigned)
{
    for (const char* t : {"T1", "T2", "T4"}) {
        const SignReport r = sign_change_scan(*named(t), 1e-8, 1e8, 4000);
        EXPECT_TRUE(r.single_signed()) << t;
        EXPECT_TRUE(r.negatives.empty()) << t;
        EXPECT_FALSE(r.positives.empty()) << t;
    }
}

TEST(SignScan, ConstantZero)
{
    const SignReport r = sign_change_scan(*parse_expression("A - A"), 1e-6, 1e6, 101);
    EXPECT_TRUE(r.single_signed());
    EXPECT_EQ(r.zeros, 101u);
    EXPECT_EQ(r.min_abs.value, 0.0);
}

TEST(SignScan, FaultsCounted)
{
    const SignReport r = sign_change_scan(*parse_expression("sqrt(G - A)"), 0.5, 2.0, 11);
    EXPECT_GE(r.faults, 10u); // G < A everywhere except possibly at x = 1
    EXPECT_EQ(r.points + r.faults, 11u);
}
