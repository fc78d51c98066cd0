#pragma once

#include "logmean/means.hpp"
#include "logmean/rational.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace logmean {

/// Difference measure M(a,b) = X(a,b) - Y(a,b) between two parameter-free
/// means with X at or above Y in kChainOrder. X == Y is the degenerate zero
/// measure.
struct MeasurePair {
    MeanTag upper = MeanTag::A;
    MeanTag lower = MeanTag::A;

    /// Validates the ordering; throws std::invalid_argument otherwise.
    static MeasurePair make(MeanTag upper, MeanTag lower);

    /// "SL", "N2L", "SN1", ...
    static MeasurePair parse(std::string_view name);
    std::string name() const;

    bool operator==(const MeasurePair&) const = default;
};

/// f(x), f'(x), f''(x) of the generating function f(x) = m_X(x) - m_Y(x),
/// where m(x) is the mean of (1, x).
struct GenDerivatives {
    double f0 = 0.0;
    double f1 = 0.0;
    double f2 = 0.0;
};

/// Half-width in ln x of the window where k and L' use their power series.
inline constexpr double kLogSeriesWindow = 0.5;

/// k(x) = [(x+1) ln x - 2(x-1)] / (x^2 (ln x)^3), k(1) = 1/6; equals -L''(x).
double k_fn(double x);

/// d/dx mean(1, x). Parameter-free tags only.
double mean_first_derivative(MeanTag tag, double x);

/// d^2/dx^2 mean(1, x). Parameter-free tags only.
double mean_second_derivative(MeanTag tag, double x);

/// Exact d^2/dx^2 mean(1, x) at x = 1.
Rational second_derivative_at_one(MeanTag tag);

double gen_value(const MeasurePair& pair, double x);
GenDerivatives gen_derivatives(const MeasurePair& pair, double x);

/// a * f(b/a), evaluated through the generating function.
double phi_lift(const MeasurePair& pair, const PositivePair& p);

/// X(a,b) - Y(a,b), evaluated from the means directly.
double measure_value(const MeasurePair& pair, const PositivePair& p);

/// SL, AL, N2L, N3L, N1L, SH, AG, SN1: the measures proved convex.
std::vector<MeasurePair> convex_measures();

/// Every measure used by the bundled claims, convex_measures() first.
std::vector<MeasurePair> registered_measures();

} // namespace logmean
