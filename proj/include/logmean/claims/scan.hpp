#pragma once

#include "logmean/claims/ast.hpp"

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace logmean::claims {

struct SignSample {
    double x = 0.0;
    double value = 0.0;
};

/// Signs of E(1, x) over a log grid. Values with |E| <= 1e-12 max(1, x) count
/// as zero.
struct SignReport {
    std::size_t points = 0;
    std::vector<SignSample> negatives;
    std::vector<SignSample> positives;
    std::size_t zeros = 0;
    std::size_t faults = 0;
    SignSample min_abs;  // smallest |E| over the grid
    SignSample most_negative;
    SignSample most_positive;

    bool single_signed() const { return negatives.empty() || positives.empty(); }
};

inline constexpr double kSignZeroBand = 1e-12;

/// Evaluates `expr` at (1, x) for `points` log-spaced x in [xmin, xmax], plus
/// every x in `probes`. With `use_oracle` each value comes from the oracle.
SignReport sign_change_scan(const Expr& expr, double xmin, double xmax, std::size_t points, bool use_oracle = false,
                            const std::vector<double>& probes = {});

struct NamedExpression {
    std::string_view name;
    std::string_view text;
};

/// T1..T4, the differences whose sign decides the composite chains.
/// T1, T2 and T4 are nonnegative; T3 changes sign.
std::span<const NamedExpression> difference_functions();

} // namespace logmean::claims
