#include "logmean/simd/means_batch.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace logmean::simd {

std::string_view isa_name(Isa isa)
{
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    }
    return "?";
}

bool isa_available(Isa isa)
{
    switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

Isa best_isa()
{
    static const Isa detected = isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
    return detected;
}

namespace detail {

void mean_batch_scalar(const MeanKind& kind, const double* a, const double* b, double* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        out[i] = mean_value(kind, PositivePair(a[i], b[i]));
}

} // namespace detail

void mean_batch(Isa isa, const MeanKind& kind, std::span<const double> a, std::span<const double> b,
                std::span<double> out)
{
    if (a.size() != b.size() || a.size() != out.size())
        throw std::invalid_argument("mean_batch: span sizes differ");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(std::isfinite(a[i]) && std::isfinite(b[i]) && a[i] > 0.0 && b[i] > 0.0))
            throw std::invalid_argument("mean_batch: non-positive or non-finite input at index " +
                                        std::to_string(i));
    if (!isa_available(isa))
        throw std::invalid_argument("mean_batch: " + std::string(isa_name(isa)) + " not supported on this CPU");

    switch (isa) {
    case Isa::scalar:
        detail::mean_batch_scalar(kind, a.data(), b.data(), out.data(), a.size());
        return;
    case Isa::avx2:
        detail::mean_batch_avx2(kind, a.data(), b.data(), out.data(), a.size());
        return;
    }
}

void mean_batch(const MeanKind& kind, std::span<const double> a, std::span<const double> b,
                std::span<double> out)
{
    mean_batch(best_isa(), kind, a, b, out);
}

} // namespace logmean::simd
