#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "uelc/kernels.hpp"

namespace uelc::kernels {

#ifndef UELC_BUILD_AVX2
// Not compiled for this target; never selected because backend_available()
// reports false.
namespace avx2 {
void spmv(const CsrView& a, const double* x, double* y) { scalar::spmv(a, x, y); }
double dot(const double* x, const double* y, std::size_t n) { return scalar::dot(x, y, n); }
double sum(const double* x, std::size_t n) { return scalar::sum(x, n); }
void axpy(double alpha, const double* x, double* y, std::size_t n) {
    scalar::axpy(alpha, x, y, n);
}
}  // namespace avx2
#endif

namespace {

struct Table {
    void (*spmv)(const CsrView&, const double*, double*);
    double (*dot)(const double*, const double*, std::size_t);
    double (*sum)(const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
};

constexpr Table scalar_table{scalar::spmv, scalar::dot, scalar::sum, scalar::axpy};
constexpr Table avx2_table{avx2::spmv, avx2::dot, avx2::sum, avx2::axpy};

Backend detect() {
    if (const char* env = std::getenv("UELC_KERNEL")) {
        const std::string want(env);
        if (want == "scalar") return Backend::scalar;
        if (want == "avx2" && backend_available(Backend::avx2)) return Backend::avx2;
    }
    return backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

std::atomic<int>& selected() {
    static std::atomic<int> backend{static_cast<int>(detect())};
    return backend;
}

const Table& table() {
    return static_cast<Backend>(selected().load(std::memory_order_relaxed)) == Backend::avx2
               ? avx2_table
               : scalar_table;
}

}  // namespace

std::string_view backend_name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

bool backend_available(Backend b) {
    if (b == Backend::scalar) return true;
#if defined(UELC_BUILD_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend active_backend() { return static_cast<Backend>(selected().load()); }

void set_backend(Backend b) {
    if (!backend_available(b))
        throw std::runtime_error("kernel backend not available: " + std::string(backend_name(b)));
    selected().store(static_cast<int>(b));
}

void spmv(const CsrView& a, std::span<const double> x, std::span<double> y) {
    table().spmv(a, x.data(), y.data());
}

double dot(std::span<const double> x, std::span<const double> y) {
    return table().dot(x.data(), y.data(), x.size());
}

double sum(std::span<const double> x) { return table().sum(x.data(), x.size()); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    table().axpy(alpha, x.data(), y.data(), x.size());
}

}  // namespace uelc::kernels
