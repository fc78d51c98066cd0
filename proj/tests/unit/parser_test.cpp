#include "logmean/claims/parser.hpp"
#include "logmean/claims/suite.hpp"
#include "logmean/sampling.hpp"

#include <gtest/gtest.h>

using namespace logmean;
using namespace logmean::claims;

namespace {

ParseError parse_error(std::string_view text)
{
    try {
        parse_claim(text);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no error for '" << text << "'";
    return ParseError(ParseError::Kind::syntax, 0, "");
}

} // namespace

TEST(Parser, ChainsAndNesting)
{
    EXPECT_EQ(parse_claim("H <= G <= L <= N1").terms.size(), 4u);
    EXPECT_EQ(parse_claim("(A+H)/2 <= sqrt((A^2+H^2)/2)").terms.size(), 2u);
    EXPECT_EQ(parse_claim("N1 <= (5*N2 + L)/6").terms.size(), 2u);
    const Chain c = parse_claim("A>=G<=S");
    ASSERT_EQ(c.relations.size(), 2u);
    EXPECT_EQ(c.relations[0], Relation::ge);
    EXPECT_EQ(c.relations[1], Relation::le);
}

TEST(Parser, WhitespaceAndUnicodeRelations)
{
    EXPECT_TRUE(same_tree(parse_claim("  5 * ( N3 - L )<=6*(N1-L) "), parse_claim("5*(N3-L)<=6*(N1-L)")));
    EXPECT_TRUE(same_tree(parse_claim("H ≤ G ≥ H"), parse_claim("H <= G >= H")));
}

TEST(Parser, Parameters)
{
    const Chain c = parse_claim("B[-3] <= B[1/3] <= DP[0.25] <= B[ 5/2 ]");
    const auto syms = symbols_of(c);
    ASSERT_EQ(syms.size(), 4u);
    EXPECT_EQ(syms[0].param, Rational(-3));
    EXPECT_EQ(syms[1].param, Rational(1, 3));
    EXPECT_EQ(syms[2].tag, MeanTag::DP);
    EXPECT_EQ(syms[2].param, Rational(1, 4));
    EXPECT_EQ(syms[3].param, Rational(5, 2));
    EXPECT_EQ(syms[1].str(), "B[1/3]");
}

TEST(Parser, Errors)
{
    ParseError e = parse_error("Q <= A");
    EXPECT_EQ(e.kind(), ParseError::Kind::unknown_symbol);
    EXPECT_EQ(e.position(), 0u);

    e = parse_error("A <= (G");
    EXPECT_EQ(e.kind(), ParseError::Kind::syntax);
    EXPECT_EQ(e.position(), 7u);

    EXPECT_EQ(parse_error("A").kind(), ParseError::Kind::syntax);
    EXPECT_EQ(parse_error("A <=").kind(), ParseError::Kind::syntax);
    EXPECT_EQ(parse_error("A <= G G").kind(), ParseError::Kind::syntax);
    EXPECT_EQ(parse_error("A <= G^x").kind(), ParseError::Kind::syntax);
    EXPECT_EQ(parse_error("A <= G^100").kind(), ParseError::Kind::syntax);
    EXPECT_EQ(parse_error("A <= B[x]").kind(), ParseError::Kind::bad_parameter);
    EXPECT_EQ(parse_error("A <= B[1/0]").kind(), ParseError::Kind::bad_parameter);
    EXPECT_EQ(parse_error("A <= B").kind(), ParseError::Kind::bad_parameter);
    EXPECT_EQ(parse_error("A <= DP[1]").kind(), ParseError::Kind::bad_parameter);
    EXPECT_EQ(parse_error("A <= DP[0]").kind(), ParseError::Kind::bad_parameter);
    EXPECT_EQ(parse_error("A <= DP[1/2").kind(), ParseError::Kind::bad_parameter);
    EXPECT_EQ(parse_error("A < G").kind(), ParseError::Kind::syntax);
    EXPECT_THROW(parse_expression("A <= G"), ParseError);
}

TEST(Parser, PrettyRoundTripsEverySuiteEntry)
{
    for (const ClaimEntry& e : bundled_suite()) {
        const std::string text = pretty(e.chain);
        const Chain again = parse_claim(text);
        EXPECT_TRUE(same_tree(e.chain, again)) << e.id << ": " << text;
        EXPECT_EQ(pretty(again), text) << e.id;
    }
}

TEST(Parser, PrettyKeepsAssociativity)
{
    for (const char* text : {"A - (G - H) <= S", "A/(G*H) <= S", "(A - G) - H <= S", "A/G/H <= S", "(A^2)^3 <= S",
                             "2^-1*A <= S", "0.5*A <= 1/2*A"}) {
        const Chain c = parse_claim(text);
        EXPECT_TRUE(same_tree(c, parse_claim(pretty(c)))) << text << " -> " << pretty(c);
    }
}

namespace {

ExprPtr random_expr(UniformSource& u, int depth)
{
    const double r = u.next();
    if (depth == 0 || r < 0.25) {
        if (u.next() < 0.3)
            return make_literal(Rational(static_cast<std::int64_t>(u.uniform(0, 50)), u.next() < 0.5 ? 1 : 100));
        const MeanTag tags[] = {MeanTag::H, MeanTag::G, MeanTag::L, MeanTag::N1, MeanTag::N2,
                                MeanTag::N3, MeanTag::A, MeanTag::S};
        if (u.next() < 0.15)
            return make_symbol(Symbol{MeanTag::Bt, Rational(static_cast<std::int64_t>(u.uniform(-9, 9)), 4)});
        return make_symbol(Symbol{tags[static_cast<int>(u.uniform(0, 8))], Rational(0)});
    }
    if (r < 0.35)
        return make_sqrt(random_expr(u, depth - 1));
    if (r < 0.45)
        return make_power(random_expr(u, depth - 1), static_cast<int>(u.uniform(-3, 4)));
    const BinaryOp ops[] = {BinaryOp::add, BinaryOp::sub, BinaryOp::mul, BinaryOp::div};
    return make_binary(ops[static_cast<int>(u.uniform(0, 4))], random_expr(u, depth - 1), random_expr(u, depth - 1));
}

} // namespace

TEST(Parser, PrettyRoundTripsRandomTrees)
{
    UniformSource u(2024);
    for (int i = 0; i < 3000; ++i) {
        const ExprPtr e = random_expr(u, 5);
        const std::string text = pretty(*e);
        const ExprPtr back = parse_expression(text);
        ASSERT_TRUE(same_tree(*e, *back)) << text << " -> " << pretty(*back);
    }
}
