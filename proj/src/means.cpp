#include "logmean/means.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace logmean {

PositivePair::PositivePair(double a, double b) : a_(a), b_(b)
{
    if (!std::isfinite(a) || !std::isfinite(b) || !(a > 0.0) || !(b > 0.0)) {
        std::ostringstream os;
        os.precision(17);
        os << "PositivePair requires finite positive values, got (" << a << ", " << b << ")";
        throw std::invalid_argument(os.str());
    }
}

std::string_view tag_name(MeanTag tag)
{
    switch (tag) {
    case MeanTag::H: return "H";
    case MeanTag::G: return "G";
    case MeanTag::L: return "L";
    case MeanTag::N1: return "N1";
    case MeanTag::N2: return "N2";
    case MeanTag::N3: return "N3";
    case MeanTag::A: return "A";
    case MeanTag::S: return "S";
    case MeanTag::Bt: return "B";
    case MeanTag::DP: return "DP";
    }
    return "?";
}

std::string MeanKind::name() const
{
    if (tag != MeanTag::Bt && tag != MeanTag::DP)
        return std::string(tag_name(tag));
    std::ostringstream os;
    os.precision(17);
    os << tag_name(tag) << '[' << param << ']';
    return os.str();
}

int chain_rank(MeanTag tag)
{
    for (std::size_t i = 0; i < kChainOrder.size(); ++i)
        if (kChainOrder[i] == tag)
            return static_cast<int>(i);
    return -1;
}

MeanTag parse_mean_tag(std::string_view name)
{
    for (MeanTag t : kChainOrder)
        if (tag_name(t) == name)
            return t;
    throw std::invalid_argument("unknown mean: " + std::string(name));
}

double log_mean_factor(double u)
{
    if (std::fabs(u) < kLogMeanSeriesWindow) {
        // Gregory coefficients of u / ln(1+u); the first omitted term is O(u^8).
        constexpr double c[] = {1.0,
                                1.0 / 2.0,
                                -1.0 / 12.0,
                                1.0 / 24.0,
                                -19.0 / 720.0,
                                3.0 / 160.0,
                                -863.0 / 60480.0,
                                275.0 / 24192.0};
        double acc = c[7];
        for (int j = 6; j >= 0; --j)
            acc = acc * u + c[j];
        return acc;
    }
    return u / std::log1p(u);
}

double dp_factor(double r, double u)
{
    if (u < kLogMeanSeriesWindow) {
        // Binomial series; coefficient j is r(r-1)...(r-j+1)/(j+1)!.
        double coef[9];
        coef[0] = 1.0;
        for (int j = 1; j < 9; ++j)
            coef[j] = coef[j - 1] * (r - j + 1) / (j + 1);
        double acc = coef[8];
        for (int j = 7; j >= 0; --j)
            acc = acc * u + coef[j];
        return acc;
    }
    return std::expm1((r + 1.0) * std::log1p(u)) / ((r + 1.0) * u);
}

namespace {

void check_dp_order(double r)
{
    if (!(r > 0.0 && r < 1.0)) {
        std::ostringstream os;
        os << "DP mean requires 0 < r < 1, got " << r;
        throw std::invalid_argument(os.str());
    }
}

// ln of dp_factor for huge u, where expm1 would overflow.
double log_dp_factor(double r, double u)
{
    const double z = (r + 1.0) * std::log1p(u);
    if (z < 700.0)
        return std::log(dp_factor(r, u));
    return z + std::log1p(-std::exp(-z)) - std::log((r + 1.0) * u);
}

double relative_gap(double lo, double hi)
{
    return (hi - lo) / lo;
}

double log_mean(double lo, double hi)
{
    const double u = relative_gap(lo, hi);
    if (!std::isfinite(u))
        return (hi - lo) / (std::log(hi) - std::log(lo));
    return lo * log_mean_factor(u);
}

// ln(lo/hi), also when the quotient underflows.
double log_ratio(double lo, double hi)
{
    const double rho = lo / hi;
    if (rho >= std::numeric_limits<double>::min())
        return std::log(rho);
    return std::log(lo) - std::log(hi);
}

double geometric(double lo, double hi)
{
    return std::sqrt(lo) * std::sqrt(hi);
}

double power_mean_sorted(double t, double lo, double hi)
{
    if (std::isinf(t))
        return t > 0 ? hi : lo;
    const double rho = lo / hi;
    const double ell = log_ratio(lo, hi);
    if (std::fabs(t) < kGeometricCrossover) {
        // ln B_t = ln G + ln cosh(t ell / 2) / t, and ln cosh y = y^2/2 + O(y^4).
        return geometric(lo, hi) * std::exp(t * ell * ell / 8.0);
    }
    const double base = t > 0 ? hi : lo;
    const double at = std::fabs(t);
    if (at < 1e-3) {
        // ((1+q)/2)^(1/t) with q = rho^|t| close to 1.
        const double qm1 = std::expm1(at * ell);
        return base * std::exp(std::log1p(0.5 * qm1) / t);
    }
    const double q = rho >= std::numeric_limits<double>::min() ? std::pow(rho, at) : std::exp(at * ell);
    return base * std::pow(0.5 * (1.0 + q), 1.0 / t);
}

} // namespace

double power_mean(double t, const PositivePair& p)
{
    if (std::isnan(t))
        throw std::invalid_argument("power mean order is NaN");
    const double lo = p.lo(), hi = p.hi();
    return std::clamp(power_mean_sorted(t, lo, hi), lo, hi);
}

double dp_mid(double r, const PositivePair& p)
{
    check_dp_order(r);
    const double lo = p.lo(), hi = p.hi();
    const double u = relative_gap(lo, hi);
    const double z = (r + 1.0) * std::log1p(u);
    if (z < 700.0)
        return std::pow(lo, r) * dp_factor(r, u);
    return std::exp(r * std::log(lo) + log_dp_factor(r, u));
}

double mean_value(const MeanKind& kind, const PositivePair& p)
{
    const double lo = p.lo(), hi = p.hi();
    const double rho = lo / hi;
    double v = 0.0;
    switch (kind.tag) {
    case MeanTag::H:
        v = lo * (2.0 / (1.0 + rho));
        break;
    case MeanTag::G:
        v = geometric(lo, hi);
        break;
    case MeanTag::L:
        v = log_mean(lo, hi);
        break;
    case MeanTag::N1: {
        const double h = 0.5 * (1.0 + std::sqrt(rho));
        v = hi * (h * h);
        break;
    }
    case MeanTag::N2: {
        const double h = 0.5 * (1.0 + std::sqrt(rho));
        v = hi * (h * std::sqrt(0.5 * (1.0 + rho)));
        break;
    }
    case MeanTag::N3:
        v = hi * (((1.0 + std::sqrt(rho)) + rho) / 3.0);
        break;
    case MeanTag::A:
        v = 0.5 * lo + 0.5 * hi;
        break;
    case MeanTag::S:
        v = hi * std::sqrt(0.5 * (1.0 + rho * rho));
        break;
    case MeanTag::Bt:
        return power_mean(kind.param, p);
    case MeanTag::DP: {
        check_dp_order(kind.param);
        const double r = kind.param;
        const double u = relative_gap(lo, hi);
        if (std::isfinite(u)) {
            v = lo * std::exp(log_dp_factor(r, u) / r);
        } else {
            // hi/lo overflows: ln factor = r ell + ln(1 - e^-(r+1)ell) - ln(r+1) with ell = ln(hi/lo).
            const double ell = std::log(hi) - std::log(lo);
            v = hi * std::exp((std::log1p(-std::exp(-(r + 1.0) * ell)) - std::log1p(r)) / r);
        }
        break;
    }
    }
    return std::clamp(v, lo, hi);
}

} // namespace logmean
