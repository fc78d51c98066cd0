#include "logmean/simd/means_batch.hpp"

#include <cmath>
#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define LOGMEAN_HAVE_X86 1
#else
#define LOGMEAN_HAVE_X86 0
#endif

namespace logmean::simd::detail {

#if LOGMEAN_HAVE_X86

namespace {

// Operation order mirrors mean_value() exactly so results are bit-identical.
// No FMA: contraction would change rounding.
__attribute__((target("avx2"))) inline __m256d kernel4(MeanTag tag, __m256d lo, __m256d hi)
{
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d rho = _mm256_div_pd(lo, hi);
    switch (tag) {
    case MeanTag::H:
        return _mm256_mul_pd(lo, _mm256_div_pd(_mm256_set1_pd(2.0), _mm256_add_pd(one, rho)));
    case MeanTag::G:
        return _mm256_mul_pd(_mm256_sqrt_pd(lo), _mm256_sqrt_pd(hi));
    case MeanTag::N1: {
        const __m256d h = _mm256_mul_pd(half, _mm256_add_pd(one, _mm256_sqrt_pd(rho)));
        return _mm256_mul_pd(hi, _mm256_mul_pd(h, h));
    }
    case MeanTag::N2: {
        const __m256d h = _mm256_mul_pd(half, _mm256_add_pd(one, _mm256_sqrt_pd(rho)));
        const __m256d s = _mm256_sqrt_pd(_mm256_mul_pd(half, _mm256_add_pd(one, rho)));
        return _mm256_mul_pd(hi, _mm256_mul_pd(h, s));
    }
    case MeanTag::N3: {
        const __m256d num = _mm256_add_pd(_mm256_add_pd(one, _mm256_sqrt_pd(rho)), rho);
        return _mm256_mul_pd(hi, _mm256_div_pd(num, _mm256_set1_pd(3.0)));
    }
    case MeanTag::A:
        return _mm256_add_pd(_mm256_mul_pd(half, lo), _mm256_mul_pd(half, hi));
    case MeanTag::S: {
        const __m256d q = _mm256_add_pd(one, _mm256_mul_pd(rho, rho));
        return _mm256_mul_pd(hi, _mm256_sqrt_pd(_mm256_mul_pd(half, q)));
    }
    case MeanTag::L: {
        // Vector gap, scalar log1p per lane.
        const __m256d u = _mm256_div_pd(_mm256_sub_pd(hi, lo), lo);
        alignas(32) double ub[4], lb[4], hb[4], vb[4];
        _mm256_store_pd(ub, u);
        _mm256_store_pd(lb, lo);
        _mm256_store_pd(hb, hi);
        for (int k = 0; k < 4; ++k) {
            if (std::isfinite(ub[k]))
                vb[k] = lb[k] * log_mean_factor(ub[k]);
            else
                vb[k] = (hb[k] - lb[k]) / (std::log(hb[k]) - std::log(lb[k]));
        }
        return _mm256_load_pd(vb);
    }
    case MeanTag::Bt:
    case MeanTag::DP:
        break;
    }
    return _mm256_setzero_pd();
}

} // namespace

__attribute__((target("avx2"))) void mean_batch_avx2(const MeanKind& kind, const double* a, const double* b,
                                                     double* out, std::size_t n)
{
    if (kind.tag == MeanTag::Bt || kind.tag == MeanTag::DP) {
        mean_batch_scalar(kind, a, b, out, n);
        return;
    }
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        const __m256d lo = _mm256_min_pd(va, vb);
        const __m256d hi = _mm256_max_pd(va, vb);
        __m256d v = kernel4(kind.tag, lo, hi);
        v = _mm256_max_pd(lo, _mm256_min_pd(v, hi));
        _mm256_storeu_pd(out + i, v);
    }
    mean_batch_scalar(kind, a + i, b + i, out + i, n - i);
}

#else

void mean_batch_avx2(const MeanKind&, const double*, const double*, double*, std::size_t)
{
    throw std::logic_error("avx2 kernel not compiled for this architecture");
}

#endif

} // namespace logmean::simd::detail
