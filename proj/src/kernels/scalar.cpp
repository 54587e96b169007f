#include "uelc/kernels.hpp"

namespace uelc::kernels::scalar {

namespace {

// Reduction in the canonical blocked order; term(i) yields the i-th summand.
template <class Term>
inline double blocked_sum(std::size_t n, Term term) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += term(i);
        s1 += term(i + 1);
        s2 += term(i + 2);
        s3 += term(i + 3);
    }
    double total = (s0 + s1) + (s2 + s3);
    for (; i < n; ++i) total += term(i);
    return total;
}

}  // namespace

void spmv(const CsrView& a, const double* x, double* y) {
    const std::size_t rows = a.rows();
    const std::uint32_t* cols = a.cols.data();
    const double* vals = a.vals.data();
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t begin = a.row_ptr[r];
        const std::size_t len = a.row_ptr[r + 1] - begin;
        y[r] = blocked_sum(len, [&](std::size_t k) {
            return vals[begin + k] * x[cols[begin + k]];
        });
    }
}

double dot(const double* x, const double* y, std::size_t n) {
    return blocked_sum(n, [&](std::size_t i) { return x[i] * y[i]; });
}

double sum(const double* x, std::size_t n) {
    return blocked_sum(n, [&](std::size_t i) { return x[i]; });
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace uelc::kernels::scalar
