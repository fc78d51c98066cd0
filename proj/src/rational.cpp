#include "logmean/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace logmean {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(x, y, &out))
        throw std::overflow_error("rational arithmetic overflow");
    return out;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(x, y, &out))
        throw std::overflow_error("rational arithmetic overflow");
    return out;
}

std::int64_t parse_int(std::string_view s)
{
    std::int64_t v = 0;
    if (s.empty())
        throw std::invalid_argument("empty integer");
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range)
        throw std::overflow_error("integer literal out of range: " + std::string(s));
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed integer: " + std::string(s));
    return v;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = checked_mul(num, -1);
        den = checked_mul(den, -1);
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::parse(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational");
    if (auto slash = text.find('/'); slash != std::string_view::npos)
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot);
        std::string_view fp = text.substr(dot + 1);
        if (fp.empty() || fp.size() > 18 || fp.find_first_not_of("0123456789") != std::string_view::npos)
            throw std::invalid_argument("malformed decimal: " + std::string(text));
        bool negative = !ip.empty() && ip.front() == '-';
        if (negative || (!ip.empty() && ip.front() == '+'))
            ip.remove_prefix(1);
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i)
            scale = checked_mul(scale, 10);
        const std::int64_t whole = ip.empty() ? 0 : parse_int(ip);
        if (whole < 0)
            throw std::invalid_argument("malformed decimal: " + std::string(text));
        std::int64_t n = checked_add(checked_mul(whole, scale), parse_int(fp));
        return Rational(negative ? -n : n, scale);
    }
    return Rational(parse_int(text));
}

std::string Rational::str() const
{
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& x, const Rational& y)
{
    return Rational(checked_add(checked_mul(x.num_, y.den_), checked_mul(y.num_, x.den_)),
                    checked_mul(x.den_, y.den_));
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y)
{
    return Rational(checked_mul(x.num_, y.num_), checked_mul(x.den_, y.den_));
}

Rational operator/(const Rational& x, const Rational& y)
{
    if (y.num_ == 0)
        throw std::domain_error("rational division by zero");
    return Rational(checked_mul(x.num_, y.den_), checked_mul(x.den_, y.num_));
}

Rational Rational::operator-() const
{
    Rational r;
    r.num_ = checked_mul(num_, -1);
    r.den_ = den_;
    return r;
}

bool operator<(const Rational& x, const Rational& y)
{
    return checked_mul(x.num_, y.den_) < checked_mul(y.num_, x.den_);
}

} // namespace logmean
