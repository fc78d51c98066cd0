#pragma once

#include "logmean/means.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace logmean {

/// Uniform doubles in [0, 1) from the top 53 bits of mt19937_64, so draws are
/// identical across standard libraries.
class UniformSource {
public:
    explicit UniformSource(std::uint64_t seed) : engine_(seed) {}
    double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }
    double log_uniform(double lo, double hi);

private:
    std::mt19937_64 engine_;
};

struct SamplingConfig {
    std::uint64_t seed = 42;
    std::size_t samples = 100000;           // log-uniform pairs
    std::size_t near_equal_samples = 10000; // pairs with b/a close to 1
    double ratio_min = 1e-8;                // b/a range of the log-uniform pairs
    double ratio_max = 1e8;
    double near_equal_min = 1e-12;          // |b/a - 1| range of the near-equal pairs
    double near_equal_max = 1e-2;
    double scale = 1.0;                     // every pair is multiplied by this
};

/// Structure-of-arrays pair set, laid out for the batch kernels.
struct PairSet {
    std::vector<double> a;
    std::vector<double> b;

    std::size_t size() const { return a.size(); }
    PositivePair at(std::size_t i) const { return PositivePair(a[i], b[i]); }
    void push(double x, double y)
    {
        a.push_back(x);
        b.push_back(y);
    }
};

/// Log-uniform pairs (a in [1e-3, 1e3]) followed by near-equal pairs.
PairSet draw_pairs(const SamplingConfig& config);

/// n log-spaced points spanning [xmin, xmax] inclusive.
std::vector<double> log_grid(double xmin, double xmax, std::size_t n);

} // namespace logmean
