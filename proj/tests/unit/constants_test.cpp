#include "logmean/constants.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace logmean;

TEST(Constants, ExactLimitsAtOne)
{
    const Rational expected[] = {Rational(5, 2), Rational(2), Rational(2),     Rational(4),
                                 Rational(5, 2), Rational(9, 5), Rational(3, 2), Rational(9, 10)};
    const auto claims = constant_claims();
    ASSERT_EQ(claims.size(), 8u);
    for (std::size_t i = 0; i < claims.size(); ++i) {
        EXPECT_EQ(claims[i].claimed, expected[i]);
        EXPECT_EQ(ratio_at_one(claims[i].numerator, claims[i].denominator), expected[i]);
    }
}

TEST(Constants, Binary64RatioNearOne)
{
    for (const ConstantClaim& c : constant_claims())
        for (double x : {1.0 - 1e-9, 1.0, 1.0 + 1e-9, 1.0 - 1e-6, 1.0 + 1e-4}) {
            const double tol = std::fabs(x - 1) > 1e-7 ? 1e-3 : 1e-8;
            EXPECT_NEAR(ratio_g(c.numerator, c.denominator, x), c.claimed.to_double(), tol)
                << c.numerator.name() << "/" << c.denominator.name() << " at " << x;
        }
}

TEST(Constants, SupremumAtOneAndSignPattern)
{
    ScanConfig sc;
    sc.grid_points = 3000;
    for (const ConstantClaim& c : constant_claims()) {
        const RatioProfile p = extremum_scan(c.numerator, c.denominator, sc);
        const std::string name = c.numerator.name() + "/" + c.denominator.name();
        EXPECT_LE(p.sup, p.value_at_one + 1e-9) << name;
        EXPECT_NEAR(p.value_at_one, c.claimed.to_double(), 1e-15) << name;
        EXPECT_NEAR(p.argmax, 1.0, 1e-6) << name;
        EXPECT_EQ(p.beta, p.value_at_one) << name;
        EXPECT_EQ(p.alpha, 0.0) << name;
        EXPECT_TRUE(p.bounds_valid()) << name;
        EXPECT_GE(p.inf, 0.0) << name;
        EXPECT_LE(p.inf, p.sup) << name;
        if (c.proposition) {
            EXPECT_TRUE(p.sign.rises_then_falls()) << name;
            EXPECT_GT(p.sign.left_positive, 0u) << name;
            EXPECT_GT(p.sign.right_negative, 0u) << name;
        }
    }
}

TEST(Constants, Lemma12TransfersTheBound)
{
    SamplingConfig sc;
    sc.samples = 20000;
    sc.near_equal_samples = 2000;
    const PairSet ps = draw_pairs(sc);
    ScanConfig scan;
    scan.grid_points = 2000;
    for (const ConstantClaim& c : constant_claims()) {
        const RatioProfile p = extremum_scan(c.numerator, c.denominator, scan);
        const Lemma12Check chk = apply_lemma12(p, ps);
        EXPECT_EQ(chk.violations, 0u) << c.numerator.name() << "/" << c.denominator.name();
        EXPECT_EQ(chk.samples, ps.size());
    }
}

TEST(Constants, Lemma12DetectsTooSmallConstant)
{
    SamplingConfig sc;
    sc.samples = 5000;
    sc.near_equal_samples = 500;
    const PairSet ps = draw_pairs(sc);
    RatioProfile p = extremum_scan(MeasurePair::parse("SL"), MeasurePair::parse("AL"));
    p.beta = 2.0; // best constant is 5/2
    const Lemma12Check chk = apply_lemma12(p, ps);
    EXPECT_GT(chk.violations, 0u);
    ASSERT_TRUE(chk.witness_a.has_value());
    EXPECT_LT(chk.worst_margin, -1e-12);
}

TEST(Constants, DegenerateDenominator)
{
    const MeasurePair zero = MeasurePair::make(MeanTag::A, MeanTag::A);
    EXPECT_THROW(ratio_g(MeasurePair::parse("SL"), zero, 2.0), std::domain_error);
    EXPECT_THROW(ratio_at_one(MeasurePair::parse("SL"), zero), std::domain_error);
}
