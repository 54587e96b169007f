#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel inner loops with a scalar reference and SIMD variants chosen
// at runtime.
//
// Every reduction uses one fixed order: four interleaved partial sums over
// whole blocks of four terms, combined as (s0 + s1) + (s2 + s3), then the
// remaining tail terms added left to right. SIMD variants reproduce this
// order exactly (and never contract into FMA), so all backends return
// bit-identical results.
namespace uelc::kernels {

/// Compressed sparse row view. row_ptr has rows + 1 entries.
struct CsrView {
    std::span<const std::size_t> row_ptr;
    std::span<const std::uint32_t> cols;
    std::span<const double> vals;

    std::size_t rows() const { return row_ptr.empty() ? 0 : row_ptr.size() - 1; }
};

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);

/// Backend used by the free functions below. Chosen on first use: the env
/// var UELC_KERNEL=scalar|avx2 if set and available, else the best the CPU
/// supports.
Backend active_backend();
/// Overrides the selection (tests, benchmarks). Throws if unavailable.
void set_backend(Backend b);

/// y = A x
void spmv(const CsrView& a, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> x, std::span<const double> y);
double sum(std::span<const double> x);
/// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);

// Backend-specific entry points, exposed for equivalence tests.
namespace scalar {
void spmv(const CsrView& a, const double* x, double* y);
double dot(const double* x, const double* y, std::size_t n);
double sum(const double* x, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
}  // namespace scalar

namespace avx2 {
void spmv(const CsrView& a, const double* x, double* y);
double dot(const double* x, const double* y, std::size_t n);
double sum(const double* x, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
}  // namespace avx2

}  // namespace uelc::kernels
