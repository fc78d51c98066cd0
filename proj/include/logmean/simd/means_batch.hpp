#pragma once

#include "logmean/means.hpp"

#include <span>
#include <string_view>

namespace logmean::simd {

/// Instruction sets with a batch kernel. `scalar` is the reference.
enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);

/// Widest kernel the running CPU supports.
Isa best_isa();

/// out[i] = mean_value(kind, (a[i], b[i])).
///
/// Every kernel produces bit-identical results to the scalar reference for
/// the parameter-free means; Bt and DP run the scalar routine per lane.
/// Throws std::invalid_argument on size mismatch or a non-positive input.
void mean_batch(const MeanKind& kind, std::span<const double> a, std::span<const double> b,
                std::span<double> out);
void mean_batch(Isa isa, const MeanKind& kind, std::span<const double> a, std::span<const double> b,
                std::span<double> out);

namespace detail {
void mean_batch_scalar(const MeanKind& kind, const double* a, const double* b, double* out, std::size_t n);
void mean_batch_avx2(const MeanKind& kind, const double* a, const double* b, double* out, std::size_t n);
} // namespace detail

} // namespace logmean::simd
