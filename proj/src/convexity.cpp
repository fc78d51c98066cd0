#include "logmean/convexity.hpp"

#include "logmean/oracle.hpp"
#include "logmean/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace logmean {

double fd_second_derivative(const MeasurePair& pair, double x, double h)
{
    using oracle::Real;
    const Real one(1), xr(x), hr(h);
    const auto f = [&](const Real& t) {
        return oracle::mean(pair.upper, Real(0), one, t) - oracle::mean(pair.lower, Real(0), one, t);
    };
    const Real d = -f(xr + 2 * hr) + 16 * f(xr + hr) - 30 * f(xr) + 16 * f(xr - hr) - f(xr - 2 * hr);
    return oracle::to_double(d / (12 * hr * hr));
}

double fd_cross_check(const MeasurePair& pair, double x)
{
    if (!(x >= 1e-3 && x <= 1e3) || std::fabs(x - 1.0) < 1e-2)
        throw std::invalid_argument("fd_cross_check needs x in [1e-3, 1e3] with |x - 1| >= 1e-2");
    const double analytic = gen_derivatives(pair, x).f2;
    const double fd = fd_second_derivative(pair, x, kFdRelativeStep * x);
    if (analytic == 0.0)
        return std::fabs(fd) == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::fabs(analytic - fd) / std::fabs(analytic);
}

ConvexityVerdict verify_lemma11(const MeasurePair& pair, std::span<const double> grid, const ConvexityConfig& config)
{
    if (grid.empty())
        throw std::invalid_argument("verify_lemma11: empty grid");
    for (double x : grid)
        if (!(x >= 1e-8 && x <= 1e8))
            throw std::invalid_argument("verify_lemma11: grid must lie within [1e-8, 1e8]");

    ConvexityVerdict v;
    v.pair = pair;
    auto note = [&](const char* check, double a, double b, double value) {
        if (!v.witness)
            v.witness = ConvexityWitness{check, a, b, value};
    };

    const GenDerivatives at_one = gen_derivatives(pair, 1.0);
    v.f_at_one = at_one.f0;
    v.fprime_at_one = at_one.f1;
    v.normalization_ok = std::fabs(at_one.f0) < ConvexityVerdict::kNormalizationTolerance &&
                         std::fabs(at_one.f1) < ConvexityVerdict::kNormalizationTolerance;
    if (!v.normalization_ok)
        note("normalization", 1.0, 1.0, std::max(std::fabs(at_one.f0), std::fabs(at_one.f1)));

    v.second_derivative_min = std::numeric_limits<double>::infinity();
    for (double x : grid) {
        const double f2 = gen_derivatives(pair, x).f2;
        if (f2 < v.second_derivative_min) {
            v.second_derivative_min = f2;
            v.second_derivative_argmin = x;
        }
        if (f2 < ConvexityVerdict::kCurvatureFloor) {
            ++v.curvature_violations;
            note("second-derivative", 1.0, x, f2);
        }
        if (x >= 1e-3 && x <= 1e3 && std::fabs(x - 1.0) >= 1e-2) {
            v.fd_max_rel_err = std::max(v.fd_max_rel_err, fd_cross_check(pair, x));
            ++v.fd_points;
        }
    }

    const double x_max = std::max(*std::max_element(grid.begin(), grid.end()), 1e6);
    UniformSource rng(config.seed);
    constexpr double tol = 1e-12;
    for (std::size_t i = 0; i < config.eq13_samples; ++i) {
        const double a = rng.log_uniform(1e-3, 1e3);
        double x = rng.log_uniform(1.0, x_max);
        if (x == 1.0)
            x = std::nextafter(1.0, 2.0);
        const double b = a * x;
        const double lhs = phi_lift(pair, PositivePair(a, b));
        const double rhs = (b - a) * gen_derivatives(pair, b / a).f1;
        const double scale = tol * std::max(a, b);
        if (lhs < -scale) {
            ++v.eq13_violations;
            note("eq13-nonnegative", a, b, lhs);
        } else if (lhs > rhs + scale) {
            ++v.eq13_violations;
            note("eq13-upper", a, b, rhs - lhs);
        }
    }

    for (std::size_t i = 0; i < config.midpoint_samples; ++i) {
        const double a1 = rng.log_uniform(config.coord_min, config.coord_max);
        const double b1 = rng.log_uniform(config.coord_min, config.coord_max);
        const double a2 = rng.log_uniform(config.coord_min, config.coord_max);
        const double b2 = rng.log_uniform(config.coord_min, config.coord_max);
        const double mid = phi_lift(pair, PositivePair(0.5 * (a1 + a2), 0.5 * (b1 + b2)));
        const double chord =
            0.5 * (phi_lift(pair, PositivePair(a1, b1)) + phi_lift(pair, PositivePair(a2, b2)));
        const double scale = tol * std::max({a1, b1, a2, b2});
        if (mid > chord + scale) {
            ++v.midpoint_violations;
            note("midpoint", 0.5 * (a1 + a2), 0.5 * (b1 + b2), chord - mid);
        }
    }
    return v;
}

} // namespace logmean
