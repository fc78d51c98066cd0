#pragma once

#include "logmean/genfn.hpp"
#include "logmean/rational.hpp"
#include "logmean/sampling.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace logmean {

/// Finite-difference sign census of g' on a scan grid. The expected shape is
/// g' > 0 left of 1 and g' < 0 right of 1; points whose difference is below
/// rounding noise are counted as indeterminate rather than as mismatches.
struct SignPattern {
    std::size_t left_positive = 0;
    std::size_t left_negative = 0;
    std::size_t right_positive = 0;
    std::size_t right_negative = 0;
    std::size_t indeterminate = 0;

    bool rises_then_falls() const { return left_negative == 0 && right_positive == 0; }
};

struct RatioProfile {
    MeasurePair numerator;
    MeasurePair denominator;
    double value_at_one = 0.0;
    double sup = 0.0;
    double argmax = 1.0;
    double inf = 0.0;
    double arginf = 1.0;
    double alpha = 0.0;
    double beta = 0.0;
    SignPattern sign;

    /// alpha <= inf and beta >= sup, with `slack` for rounding in the scan.
    bool bounds_valid(double slack = 1e-9) const { return alpha <= inf + slack && beta >= sup - slack; }
};

struct ScanConfig {
    std::size_t grid_points = 10000;
    double x_min = 1e-6;
    double x_max = 1e6;
    double refine_tolerance = 1e-10; // relative, in x
};

/// f1''(x) / f2''(x). Throws std::domain_error when f2''(x) <= 0.
double ratio_g(const MeasurePair& num, const MeasurePair& den, double x);

/// Central-difference g'(x) with relative step 1e-4.
double ratio_g_derivative(const MeasurePair& num, const MeasurePair& den, double x);

/// g(1) as an exact rational from the closed-form m''(1) table.
/// Throws std::domain_error when the denominator's f''(1) is zero.
Rational ratio_at_one(const MeasurePair& num, const MeasurePair& den);

/// Dense log-grid scan of g, golden-section refinement of the maximum and
/// minimum brackets, and the sign census of g'. beta defaults to g(1) and
/// alpha to 0.
RatioProfile extremum_scan(const MeasurePair& num, const MeasurePair& den, const ScanConfig& config = {});

struct Lemma12Check {
    std::size_t samples = 0;
    std::size_t violations = 0;
    double worst_margin = 0.0; // most negative scale-normalized margin
    std::optional<double> witness_a;
    std::optional<double> witness_b; // violation closest to a = b
};

/// Counts pairs with alpha M2 <= M1 <= beta M2 violated beyond 1e-12 max(a,b).
Lemma12Check apply_lemma12(const RatioProfile& profile, const PairSet& samples);

struct ConstantClaim {
    MeasurePair numerator;
    MeasurePair denominator;
    Rational claimed;
    bool proposition = false; // one of the five sign-pattern claims
};

/// The eight best-constant claims, propositions first.
std::vector<ConstantClaim> constant_claims();

} // namespace logmean
