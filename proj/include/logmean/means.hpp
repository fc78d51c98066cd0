#pragma once

#include <array>
#include <string>
#include <string_view>

namespace logmean {

/// Two strictly positive, finite reals. Construction rejects anything else.
class PositivePair {
public:
    PositivePair(double a, double b);

    double a() const { return a_; }
    double b() const { return b_; }
    double lo() const { return a_ < b_ ? a_ : b_; }
    double hi() const { return a_ < b_ ? b_ : a_; }

    PositivePair swapped() const { return PositivePair(b_, a_); }
    PositivePair scaled(double lambda) const { return PositivePair(lambda * a_, lambda * b_); }

private:
    double a_;
    double b_;
};

enum class MeanTag { H, G, L, N1, N2, N3, A, S, Bt, DP };

/// Identity of a bivariate mean. `param` is the order t for Bt (may be
/// +/-infinity) and the exponent r in (0,1) for DP; ignored otherwise.
///
/// N2 is ((sqrt a + sqrt b)/2) * sqrt((a+b)/2) and N3 is the Heronian mean
/// (a + sqrt(ab) + b)/3, so that N1 <= N3 <= N2.
struct MeanKind {
    MeanTag tag = MeanTag::A;
    double param = 0.0;

    static MeanKind of(MeanTag t) { return MeanKind{t, 0.0}; }
    static MeanKind power(double t) { return MeanKind{MeanTag::Bt, t}; }
    static MeanKind dp(double r) { return MeanKind{MeanTag::DP, r}; }

    std::string name() const;
    bool operator==(const MeanKind&) const = default;
};

/// The eight parameter-free means in ascending order.
inline constexpr std::array<MeanTag, 8> kChainOrder = {
    MeanTag::H, MeanTag::G, MeanTag::L, MeanTag::N1, MeanTag::N3, MeanTag::N2, MeanTag::A, MeanTag::S};

/// Position of a parameter-free tag in kChainOrder; -1 for Bt and DP.
int chain_rank(MeanTag tag);

/// Parses "H", "N2", ... (parameter-free tags only).
MeanTag parse_mean_tag(std::string_view name);
std::string_view tag_name(MeanTag tag);

// Numerical thresholds.
inline constexpr double kLogMeanSeriesWindow = 1e-3;      // |b/a - 1| below this uses the series
inline constexpr double kGeometricCrossover = 1e-9;       // |t| below this is the t = 0 branch

/// u / ln(1+u) for u > -1, accurate through u = 0 (value 1).
double log_mean_factor(double u);

/// ((1+u)^(r+1) - 1) / ((r+1) u) for u >= 0, value 1 at u = 0.
double dp_factor(double r, double u);

/// Value of the mean on p. Every result lies in [min(a,b), max(a,b)], is
/// symmetric in (a,b) and homogeneous of degree one.
///
/// DP[r] is normalized to a mean: it returns dp_mid(r,p)^(1/r), which is the
/// Stolarsky mean of parameters (r+1, 1).
///
/// Works on min/max ratios internally, so every finite pair gives a finite
/// result; L and DP switch to log differences when max/min overflows.
/// Throws std::invalid_argument for DP with r outside (0,1).
double mean_value(const MeanKind& kind, const PositivePair& p);

/// Mean of order t, t in [-inf, +inf]. Non-decreasing in t; saturates at
/// min/max when |t| log(max/min) exceeds the double range.
double power_mean(double t, const PositivePair& p);

/// (b^(r+1) - a^(r+1)) / ((r+1)(b-a)), extended by continuity (a^r) at a = b.
/// Throws std::invalid_argument unless 0 < r < 1.
double dp_mid(double r, const PositivePair& p);

} // namespace logmean
