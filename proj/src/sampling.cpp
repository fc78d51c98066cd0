#include "logmean/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace logmean {

double UniformSource::log_uniform(double lo, double hi)
{
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

PairSet draw_pairs(const SamplingConfig& config)
{
    if (!(config.ratio_min > 0.0 && config.ratio_min <= config.ratio_max))
        throw std::invalid_argument("sampling: bad ratio range");
    if (!(config.near_equal_min > 0.0 && config.near_equal_min <= config.near_equal_max &&
          config.near_equal_max < 1.0))
        throw std::invalid_argument("sampling: bad near-equal range");
    if (!(config.scale > 0.0) || !std::isfinite(config.scale))
        throw std::invalid_argument("sampling: scale must be positive");

    UniformSource rng(config.seed);
    PairSet set;
    set.a.reserve(config.samples + config.near_equal_samples);
    set.b.reserve(config.samples + config.near_equal_samples);
    for (std::size_t i = 0; i < config.samples; ++i) {
        const double a = rng.log_uniform(1e-3, 1e3);
        const double ratio = rng.log_uniform(config.ratio_min, config.ratio_max);
        set.push(config.scale * a, config.scale * (a * ratio));
    }
    for (std::size_t i = 0; i < config.near_equal_samples; ++i) {
        const double a = rng.log_uniform(1e-3, 1e3);
        const double u = rng.log_uniform(config.near_equal_min, config.near_equal_max);
        const double sign = rng.next() < 0.5 ? -1.0 : 1.0;
        set.push(config.scale * a, config.scale * (a * (1.0 + sign * u)));
    }
    return set;
}

std::vector<double> log_grid(double xmin, double xmax, std::size_t n)
{
    if (!(xmin > 0.0 && xmin < xmax) || n < 2)
        throw std::invalid_argument("log_grid: need 0 < xmin < xmax and n >= 2");
    std::vector<double> grid(n);
    const double l0 = std::log(xmin), l1 = std::log(xmax);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = std::exp(l0 + (l1 - l0) * static_cast<double>(i) / static_cast<double>(n - 1));
    grid.front() = xmin;
    grid.back() = xmax;
    return grid;
}

} // namespace logmean
