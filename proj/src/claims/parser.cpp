#include "logmean/claims/parser.hpp"

#include <cctype>
#include <optional>

namespace logmean::claims {

ParseError::ParseError(Kind kind, std::size_t position, const std::string& message)
    : std::runtime_error(message + " at offset " + std::to_string(position)), kind_(kind), position_(position)
{
}

namespace {

constexpr std::string_view kLe = "≤";
constexpr std::string_view kGe = "≥";

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Chain chain()
    {
        Chain c;
        c.terms.push_back(expr());
        while (auto rel = relation()) {
            c.relations.push_back(*rel);
            c.terms.push_back(expr());
        }
        if (c.terms.size() < 2)
            fail("expected '<=' or '>='");
        expect_end();
        return c;
    }

    ExprPtr single()
    {
        ExprPtr e = expr();
        expect_end();
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg, ParseError::Kind kind = ParseError::Kind::syntax) const
    {
        throw ParseError(kind, pos_, msg);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(std::string_view tok)
    {
        skip_ws();
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view tok)
    {
        if (!accept(tok))
            fail("expected '" + std::string(tok) + "'");
    }

    void expect_end()
    {
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
    }

    std::optional<Relation> relation()
    {
        if (accept("<=") || accept(kLe))
            return Relation::le;
        if (accept(">=") || accept(kGe))
            return Relation::ge;
        return std::nullopt;
    }

    ExprPtr expr()
    {
        ExprPtr lhs = term();
        for (;;) {
            if (accept("+"))
                lhs = make_binary(BinaryOp::add, lhs, term());
            else if (accept("-"))
                lhs = make_binary(BinaryOp::sub, lhs, term());
            else
                return lhs;
        }
    }

    ExprPtr term()
    {
        ExprPtr lhs = factor();
        for (;;) {
            if (accept("*"))
                lhs = make_binary(BinaryOp::mul, lhs, factor());
            else if (accept("/"))
                lhs = make_binary(BinaryOp::div, lhs, factor());
            else
                return lhs;
        }
    }

    ExprPtr factor()
    {
        ExprPtr base = primary();
        while (accept("^")) {
            skip_ws();
            const std::size_t start = pos_;
            if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
                ++pos_;
            const std::size_t digits = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == digits) {
                pos_ = start;
                fail("expected integer exponent");
            }
            const std::string tok(text_.substr(start, pos_ - start));
            long long n = 0;
            try {
                n = std::stoll(tok);
            } catch (const std::exception&) {
                pos_ = start;
                fail("exponent out of range");
            }
            if (n > 64 || n < -64) {
                pos_ = start;
                fail("exponent magnitude above 64");
            }
            base = make_power(base, static_cast<int>(n));
        }
        return base;
    }

    ExprPtr primary()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(")");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return make_literal(number());
        if (std::isalpha(static_cast<unsigned char>(c)))
            return identifier();
        fail(std::string("unexpected character '") + c + "'");
    }

    Rational number()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            ++pos_;
        try {
            return Rational::parse(text_.substr(start, pos_ - start));
        } catch (const std::exception& ex) {
            pos_ = start;
            fail(std::string("bad number: ") + ex.what());
        }
    }

    ExprPtr identifier()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name == "sqrt") {
            expect("(");
            ExprPtr e = expr();
            expect(")");
            return make_sqrt(e);
        }
        if (name == "B" || name == "DP") {
            const Symbol s{name == "B" ? MeanTag::Bt : MeanTag::DP, bracket_param(name == "DP")};
            return make_symbol(s);
        }
        for (MeanTag t : kChainOrder)
            if (tag_name(t) == name)
                return make_symbol(Symbol{t, Rational(0)});
        pos_ = start;
        fail("unknown symbol '" + std::string(name) + "'", ParseError::Kind::unknown_symbol);
    }

    Rational bracket_param(bool unit_interval)
    {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '[')
            fail("expected '[' after parameterized mean", ParseError::Kind::bad_parameter);
        ++pos_;
        const std::size_t close = text_.find(']', pos_);
        if (close == std::string_view::npos)
            fail("missing ']'", ParseError::Kind::bad_parameter);
        std::string raw;
        for (char ch : text_.substr(pos_, close - pos_))
            if (!std::isspace(static_cast<unsigned char>(ch)))
                raw += ch;
        Rational r;
        try {
            r = Rational::parse(raw);
        } catch (const std::exception& ex) {
            fail(std::string("malformed parameter: ") + ex.what(), ParseError::Kind::bad_parameter);
        }
        if (unit_interval && !(Rational(0) < r && r < Rational(1)))
            fail("DP parameter must lie in (0,1)", ParseError::Kind::bad_parameter);
        pos_ = close + 1;
        return r;
    }
};

} // namespace

Chain parse_claim(std::string_view text)
{
    return Parser(text).chain();
}

ExprPtr parse_expression(std::string_view text)
{
    return Parser(text).single();
}

} // namespace logmean::claims
