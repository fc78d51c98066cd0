#include "logmean/genfn.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace logmean {

namespace {

void require_plain(MeanTag tag)
{
    if (chain_rank(tag) < 0)
        throw std::invalid_argument("generating functions are defined for H, G, L, N1, N3, N2, A, S only");
}

void require_positive(double x)
{
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::invalid_argument("generating functions need finite x > 0");
}

// Taylor coefficients of the two entire functions behind k and L':
//   k(e^s)  = e^{-2s} sum_j (j+1)/(j+3)! s^j
//   L'(e^s) = e^{-s}  sum_j (j+1)/(j+2)! s^j
constexpr int kTerms = 18;

struct SeriesTables {
    std::array<double, kTerms> k{};
    std::array<double, kTerms> dl{};
    SeriesTables()
    {
        double fact = 2.0; // (j+2)!
        for (int j = 0; j < kTerms; ++j) {
            dl[j] = (j + 1) / fact;
            fact *= (j + 3);
            k[j] = (j + 1) / fact;
        }
    }
};

const SeriesTables& tables()
{
    static const SeriesTables t;
    return t;
}

double horner(const std::array<double, kTerms>& c, double s)
{
    double acc = c[kTerms - 1];
    for (int j = kTerms - 2; j >= 0; --j)
        acc = acc * s + c[j];
    return acc;
}

double log_mean_first_derivative(double x)
{
    const double s = std::log(x);
    if (std::fabs(s) < kLogSeriesWindow)
        return std::exp(-s) * horner(tables().dl, s);
    return (x * s - x + 1.0) / (x * s * s);
}

} // namespace

MeasurePair MeasurePair::make(MeanTag upper, MeanTag lower)
{
    require_plain(upper);
    require_plain(lower);
    if (chain_rank(upper) < chain_rank(lower))
        throw std::invalid_argument("measure " + std::string(tag_name(upper)) + std::string(tag_name(lower)) +
                                    " is not nonnegative: upper mean lies below lower mean");
    return MeasurePair{upper, lower};
}

MeasurePair MeasurePair::parse(std::string_view name)
{
    auto take = [&](std::string_view& rest) {
        std::size_t len = (!rest.empty() && rest.front() == 'N') ? 2 : 1;
        if (rest.size() < len)
            throw std::invalid_argument("malformed measure name");
        MeanTag t = parse_mean_tag(rest.substr(0, len));
        rest.remove_prefix(len);
        return t;
    };
    std::string_view rest = name;
    MeanTag upper = take(rest);
    MeanTag lower = take(rest);
    if (!rest.empty())
        throw std::invalid_argument("malformed measure name: " + std::string(name));
    return make(upper, lower);
}

std::string MeasurePair::name() const
{
    return std::string(tag_name(upper)) + std::string(tag_name(lower));
}

double k_fn(double x)
{
    require_positive(x);
    const double s = std::log(x);
    if (std::fabs(s) < kLogSeriesWindow)
        return std::exp(-2.0 * s) * horner(tables().k, s);
    return ((x + 1.0) * s - 2.0 * (x - 1.0)) / (x * x * s * s * s);
}

double mean_first_derivative(MeanTag tag, double x)
{
    require_plain(tag);
    require_positive(x);
    const double rx = std::sqrt(x);
    switch (tag) {
    case MeanTag::A: return 0.5;
    case MeanTag::H: return 2.0 / ((1.0 + x) * (1.0 + x));
    case MeanTag::G: return 0.5 / rx;
    case MeanTag::N1: return (1.0 + rx) / (4.0 * rx);
    case MeanTag::N3: return (1.0 + 0.5 / rx) / 3.0;
    case MeanTag::N2: {
        const double q = std::sqrt(0.5 * (1.0 + x));
        return q / (4.0 * rx) + (1.0 + rx) / (8.0 * q);
    }
    case MeanTag::S: return x / std::sqrt(2.0 * (1.0 + x * x));
    case MeanTag::L: return log_mean_first_derivative(x);
    default: break;
    }
    throw std::logic_error("unreachable");
}

double mean_second_derivative(MeanTag tag, double x)
{
    require_plain(tag);
    require_positive(x);
    const double x32 = x * std::sqrt(x);
    switch (tag) {
    case MeanTag::A: return 0.0;
    case MeanTag::H: return -4.0 / ((1.0 + x) * (1.0 + x) * (1.0 + x));
    case MeanTag::G: return -1.0 / (4.0 * x32);
    case MeanTag::N1: return -1.0 / (8.0 * x32);
    case MeanTag::N3: return -1.0 / (12.0 * x32);
    case MeanTag::N2: {
        const double w = 2.0 * x + 2.0;
        return -(x32 + 1.0) / (4.0 * x32 * (w * std::sqrt(w)));
    }
    case MeanTag::S: {
        const double w = 2.0 * x * x + 2.0;
        return 2.0 / (w * std::sqrt(w));
    }
    case MeanTag::L: return -k_fn(x);
    default: break;
    }
    throw std::logic_error("unreachable");
}

Rational second_derivative_at_one(MeanTag tag)
{
    require_plain(tag);
    switch (tag) {
    case MeanTag::A: return Rational(0);
    case MeanTag::H: return Rational(-1, 2);
    case MeanTag::G: return Rational(-1, 4);
    case MeanTag::N1: return Rational(-1, 8);
    case MeanTag::N3: return Rational(-1, 12);
    case MeanTag::N2: return Rational(-1, 16);
    case MeanTag::S: return Rational(1, 4);
    case MeanTag::L: return Rational(-1, 6);
    default: break;
    }
    throw std::logic_error("unreachable");
}

double gen_value(const MeasurePair& pair, double x)
{
    require_positive(x);
    const PositivePair p(1.0, x);
    return mean_value(MeanKind::of(pair.upper), p) - mean_value(MeanKind::of(pair.lower), p);
}

GenDerivatives gen_derivatives(const MeasurePair& pair, double x)
{
    GenDerivatives d;
    d.f0 = gen_value(pair, x);
    d.f1 = mean_first_derivative(pair.upper, x) - mean_first_derivative(pair.lower, x);
    d.f2 = mean_second_derivative(pair.upper, x) - mean_second_derivative(pair.lower, x);
    return d;
}

double phi_lift(const MeasurePair& pair, const PositivePair& p)
{
    return p.a() * gen_value(pair, p.b() / p.a());
}

double measure_value(const MeasurePair& pair, const PositivePair& p)
{
    return mean_value(MeanKind::of(pair.upper), p) - mean_value(MeanKind::of(pair.lower), p);
}

std::vector<MeasurePair> convex_measures()
{
    using enum MeanTag;
    return {{S, L}, {A, L}, {N2, L}, {N3, L}, {N1, L}, {S, H}, {A, G}, {S, N1}};
}

std::vector<MeasurePair> registered_measures()
{
    using enum MeanTag;
    std::vector<MeasurePair> out = convex_measures();
    for (MeasurePair p : std::initializer_list<MeasurePair>{
             {S, A}, {A, H}, {S, G}, {S, N3}, {S, N2}, {N3, N1}, {N2, N1}, {A, N1}, {N2, N3}, {A, N3}})
        out.push_back(p);
    return out;
}

} // namespace logmean
