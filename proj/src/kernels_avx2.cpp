#include "emden/kernels.hpp"

// AVX2 variants. Compiled with -mavx2 on x86-64 only; elsewhere this TU
// provides a null avx2_ops() and the scalar path is used.

#if defined(__x86_64__) && defined(__AVX2__)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

namespace emden::kernels::detail {

namespace {

// Four shifts per pass over the matrix. Per lane the operations (sub, sub,
// div, compare, blend) match the scalar recurrence exactly, so the counts
// are bit-for-bit identical to the scalar backend.
void sturm_counts_avx2(const double* diag, const double* off_sq, std::size_t n,
                       const double* shifts, int* counts, std::size_t m, double pivmin) {
    const __m256d vpivmin = _mm256_set1_pd(pivmin);
    const __m256d vneg_pivmin = _mm256_set1_pd(-pivmin);
    const __m256d vzero = _mm256_setzero_pd();
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

    std::size_t s = 0;
    for (; s + 4 <= m; s += 4) {
        const __m256d shift = _mm256_loadu_pd(shifts + s);
        __m256i neg = _mm256_setzero_si256();
        __m256d q = _mm256_sub_pd(_mm256_set1_pd(diag[0]), shift);
        __m256d small = _mm256_cmp_pd(_mm256_and_pd(q, abs_mask), vpivmin, _CMP_LT_OQ);
        q = _mm256_blendv_pd(q, vneg_pivmin, small);
        __m256d isneg = _mm256_cmp_pd(q, vzero, _CMP_LT_OQ);
        neg = _mm256_sub_epi64(neg, _mm256_castpd_si256(isneg));
        for (std::size_t i = 1; i < n; ++i) {
            const __m256d d = _mm256_sub_pd(_mm256_set1_pd(diag[i]), shift);
            q = _mm256_sub_pd(d, _mm256_div_pd(_mm256_set1_pd(off_sq[i - 1]), q));
            small = _mm256_cmp_pd(_mm256_and_pd(q, abs_mask), vpivmin, _CMP_LT_OQ);
            q = _mm256_blendv_pd(q, vneg_pivmin, small);
            isneg = _mm256_cmp_pd(q, vzero, _CMP_LT_OQ);
            neg = _mm256_sub_epi64(neg, _mm256_castpd_si256(isneg));
        }
        alignas(32) long long out[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(out), neg);
        for (int lane = 0; lane < 4; ++lane) counts[s + lane] = static_cast<int>(out[lane]);
    }
    // remainder lanes, scalar recurrence (same IEEE operations)
    for (; s < m; ++s) {
        const double shift = shifts[s];
        int neg = 0;
        double q = diag[0] - shift;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++neg;
        for (std::size_t i = 1; i < n; ++i) {
            q = (diag[i] - shift) - off_sq[i - 1] / q;
            if (std::abs(q) < pivmin) q = -pivmin;
            if (q < 0.0) ++neg;
        }
        counts[s] = neg;
    }
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

const Ops kAvx2Ops{&sturm_counts_avx2, &dot_avx2};

}  // namespace

const Ops* avx2_ops() { return &kAvx2Ops; }

}  // namespace emden::kernels::detail

#else

namespace emden::kernels::detail {
const Ops* avx2_ops() { return nullptr; }
}  // namespace emden::kernels::detail

#endif
