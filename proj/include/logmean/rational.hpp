#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace logmean {

/// Exact rational number with a normalized int64 numerator/denominator.
///
/// The denominator is always positive and gcd(num, den) == 1, so equal values
/// compare equal member-wise. Arithmetic throws std::overflow_error instead of
/// silently wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    /// Parses "7", "-3", "5/2", "-1/3" or a decimal such as "0.00001".
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    std::string str() const;

    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);
    friend Rational operator*(const Rational& x, const Rational& y);
    friend Rational operator/(const Rational& x, const Rational& y);
    Rational operator-() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& x, const Rational& y);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace logmean
