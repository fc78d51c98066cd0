#include "logmean/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace logmean {

double ratio_g(const MeasurePair& num, const MeasurePair& den, double x)
{
    const double d = gen_derivatives(den, x).f2;
    if (!(d > 0.0))
        throw std::domain_error("ratio_g: denominator " + den.name() + " has f'' <= 0");
    return gen_derivatives(num, x).f2 / d;
}

double ratio_g_derivative(const MeasurePair& num, const MeasurePair& den, double x)
{
    constexpr double h = 1e-4;
    return (ratio_g(num, den, x * (1 + h)) - ratio_g(num, den, x * (1 - h))) / (2 * h * x);
}

Rational ratio_at_one(const MeasurePair& num, const MeasurePair& den)
{
    const Rational d = second_derivative_at_one(den.upper) - second_derivative_at_one(den.lower);
    if (d.is_zero())
        throw std::domain_error("ratio_at_one: denominator " + den.name() + " has f''(1) = 0");
    return (second_derivative_at_one(num.upper) - second_derivative_at_one(num.lower)) / d;
}

namespace {

// Golden-section search on t = ln x over [t0, t1]; sense = +1 maximizes.
std::pair<double, double> golden(const MeasurePair& num, const MeasurePair& den, double t0, double t1, double sense,
                                 double tol)
{
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    auto f = [&](double t) { return sense * ratio_g(num, den, std::exp(t)); };
    double c = t1 - invphi * (t1 - t0);
    double d = t0 + invphi * (t1 - t0);
    double fc = f(c), fd = f(d);
    while (t1 - t0 > tol) {
        if (fc > fd) {
            t1 = d;
            d = c;
            fd = fc;
            c = t1 - invphi * (t1 - t0);
            fc = f(c);
        } else {
            t0 = c;
            c = d;
            fc = fd;
            d = t0 + invphi * (t1 - t0);
            fd = f(d);
        }
    }
    const double t = 0.5 * (t0 + t1);
    return {std::exp(t), sense * f(t)};
}

} // namespace

RatioProfile extremum_scan(const MeasurePair& num, const MeasurePair& den, const ScanConfig& config)
{
    const std::vector<double> grid = log_grid(config.x_min, config.x_max, config.grid_points);
    std::vector<double> g(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        g[i] = ratio_g(num, den, grid[i]);

    RatioProfile prof;
    prof.numerator = num;
    prof.denominator = den;
    prof.value_at_one = ratio_at_one(num, den).to_double();
    prof.alpha = 0.0;
    prof.beta = prof.value_at_one;

    std::size_t imax = 0, imin = 0;
    for (std::size_t i = 1; i < g.size(); ++i) {
        if (g[i] > g[imax])
            imax = i;
        if (g[i] < g[imin])
            imin = i;
    }
    prof.sup = g[imax];
    prof.argmax = grid[imax];
    prof.inf = g[imin];
    prof.arginf = grid[imin];

    auto refine = [&](std::size_t i, double sense, double& best, double& arg) {
        if (i == 0 || i + 1 == grid.size())
            return;
        auto [x, v] = golden(num, den, std::log(grid[i - 1]), std::log(grid[i + 1]), sense, config.refine_tolerance);
        if (sense * v > sense * best) {
            best = v;
            arg = x;
        }
    };
    refine(imax, 1.0, prof.sup, prof.argmax);
    refine(imin, -1.0, prof.inf, prof.arginf);

    // g(1) itself lies on the domain; the grid need not contain it.
    const double g1 = ratio_g(num, den, 1.0);
    if (g1 > prof.sup) {
        prof.sup = g1;
        prof.argmax = 1.0;
    }
    if (g1 < prof.inf) {
        prof.inf = g1;
        prof.arginf = 1.0;
    }

    constexpr double h = 1e-4;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (double x : grid) {
        if (x == 1.0)
            continue;
        const double gp = ratio_g(num, den, x * (1 + h));
        const double gm = ratio_g(num, den, x * (1 - h));
        const double diff = gp - gm;
        if (std::fabs(diff) <= 16.0 * eps * std::max(std::fabs(gp), std::fabs(gm))) {
            ++prof.sign.indeterminate;
            continue;
        }
        if (x < 1.0)
            ++(diff > 0 ? prof.sign.left_positive : prof.sign.left_negative);
        else
            ++(diff > 0 ? prof.sign.right_positive : prof.sign.right_negative);
    }
    return prof;
}

Lemma12Check apply_lemma12(const RatioProfile& profile, const PairSet& samples)
{
    Lemma12Check out;
    out.samples = samples.size();
    double closest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const PositivePair p = samples.at(i);
        const double m1 = measure_value(profile.numerator, p);
        const double m2 = measure_value(profile.denominator, p);
        const double scale = std::max(p.a(), p.b());
        const double margin = std::min(profile.beta * m2 - m1, m1 - profile.alpha * m2) / scale;
        out.worst_margin = std::min(out.worst_margin, margin);
        if (margin < -1e-12) {
            ++out.violations;
            const double dist = std::fabs(std::log(p.b() / p.a()));
            if (dist < closest) {
                closest = dist;
                out.witness_a = p.a();
                out.witness_b = p.b();
            }
        }
    }
    return out;
}

std::vector<ConstantClaim> constant_claims()
{
    using enum MeanTag;
    return {
        {{S, L}, {A, L}, Rational(5, 2), true},
        {{A, L}, {N3, L}, Rational(2), true},
        {{N3, L}, {N1, L}, Rational(2), true},
        {{S, L}, {N2, L}, Rational(4), true},
        {{N2, L}, {N1, L}, Rational(5, 2), true},
        {{S, H}, {S, L}, Rational(9, 5), false},
        {{A, G}, {A, L}, Rational(3, 2), false},
        {{S, N1}, {S, L}, Rational(9, 10), false},
    };
}

} // namespace logmean
