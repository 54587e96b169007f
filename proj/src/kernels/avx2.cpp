#include <immintrin.h>

#include "uelc/kernels.hpp"

namespace uelc::kernels::avx2 {

namespace {

// Lanes hold (s0, s1, s2, s3); combine as (s0 + s1) + (s2 + s3).
inline double combine(__m256d acc) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace

void spmv(const CsrView& a, const double* x, double* y) {
    const std::size_t rows = a.rows();
    const std::uint32_t* cols = a.cols.data();
    const double* vals = a.vals.data();
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t begin = a.row_ptr[r];
        const std::size_t end = a.row_ptr[r + 1];
        std::size_t k = begin;
        double total;
        if (end - begin >= 4) {
            __m256d acc = _mm256_setzero_pd();
            for (; k + 4 <= end; k += 4) {
                const __m128i idx =
                    _mm_loadu_si128(reinterpret_cast<const __m128i*>(cols + k));
                const __m256d xv = _mm256_i32gather_pd(x, idx, 8);
                acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(vals + k), xv));
            }
            total = combine(acc);
        } else {
            total = 0.0;
        }
        for (; k < end; ++k) total += vals[k] * x[cols[k]];
        y[r] = total;
    }
}

double dot(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    double total = combine(acc);
    for (; i < n; ++i) total += x[i] * y[i];
    return total;
}

double sum(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double total = combine(acc);
    for (; i < n; ++i) total += x[i];
    return total;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d a = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d yv = _mm256_add_pd(_mm256_loadu_pd(y + i),
                                         _mm256_mul_pd(a, _mm256_loadu_pd(x + i)));
        _mm256_storeu_pd(y + i, yv);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace uelc::kernels::avx2
