#pragma once

#include "logmean/genfn.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace logmean {

struct ConvexityConfig {
    std::uint64_t seed = 42;
    std::size_t eq13_samples = 10000;     // ordered pairs b > a
    std::size_t midpoint_samples = 10000; // random point pairs in the quadrant
    double coord_min = 1e-6;              // log-uniform coordinate range for midpoint checks
    double coord_max = 1e6;
};

/// First failing point of a sub-check, for diagnostics.
struct ConvexityWitness {
    std::string check;
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
};

struct ConvexityVerdict {
    MeasurePair pair;
    bool normalization_ok = false;
    double f_at_one = 0.0;
    double fprime_at_one = 0.0;
    double second_derivative_min = 0.0;
    double second_derivative_argmin = 0.0;
    double fd_max_rel_err = 0.0;
    std::size_t fd_points = 0;
    std::size_t eq13_violations = 0;
    std::size_t midpoint_violations = 0;
    std::size_t curvature_violations = 0;
    std::optional<ConvexityWitness> witness;

    bool passed() const
    {
        return normalization_ok && curvature_violations == 0 && eq13_violations == 0 && midpoint_violations == 0 &&
               fd_max_rel_err < kFdTolerance;
    }

    static constexpr double kNormalizationTolerance = 1e-12;
    static constexpr double kCurvatureFloor = -1e-12;
    static constexpr double kFdTolerance = 1e-6;
};

/// Checks the generating function of `pair` against the convexity lemma:
/// f(1) = f'(1) = 0, f'' >= 0 on `grid`, 0 <= a f(b/a) <= (b-a) f'(b/a) for
/// sampled b > a, and midpoint convexity of a f(b/a) on the quadrant.
/// Never throws for violations; they are counted and the first is kept.
/// Throws std::invalid_argument if the grid leaves [1e-8, 1e8].
ConvexityVerdict verify_lemma11(const MeasurePair& pair, std::span<const double> grid,
                                const ConvexityConfig& config = {});

/// |f''_analytic - f''_fd| / |f''_analytic| with a five-point central
/// difference of f at step h = 1e-5 x. Requires |x - 1| >= 1e-2 and
/// x in [1e-3, 1e3].
double fd_cross_check(const MeasurePair& pair, double x);

/// Five-point central-difference estimate of f''(x) with step h. The stencil
/// runs on oracle means: in binary64 the rounding in f swamps f'' wherever f
/// grows like x and f'' decays like 1/x^3.
double fd_second_derivative(const MeasurePair& pair, double x, double h);

inline constexpr double kFdRelativeStep = 1e-5;

} // namespace logmean
