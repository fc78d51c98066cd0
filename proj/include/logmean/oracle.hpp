#pragma once

#include "logmean/means.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace logmean::oracle {

/// 50 significant decimal digits.
using Real = boost::multiprecision::cpp_bin_float_50;

/// Direct closed-form evaluation in extended precision; no series, no
/// rescaling. `param` is t for Bt (may be +/-inf) and r for DP.
Real mean(MeanTag tag, const Real& param, const Real& a, const Real& b);
Real mean(const MeanKind& kind, const Real& a, const Real& b);

/// [(x+1) ln x - 2(x-1)] / (x^2 (ln x)^3), with k(1) = 1/6.
Real k(const Real& x);

/// (b^(r+1) - a^(r+1)) / ((r+1)(b-a)), a^r at a = b.
Real dp_mid(const Real& r, const Real& a, const Real& b);

inline double to_double(const Real& x) { return x.convert_to<double>(); }

} // namespace logmean::oracle
