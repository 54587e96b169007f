#include "uelc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "uelc/error.hpp"
#include "uelc/kernels.hpp"
#include "uelc/rng.hpp"

namespace uelc {

void MarkovGenerator::apply(std::span<const double> v, std::span<double> out) const {
    kernels::spmv(t_->csr(), v, out);
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] - out[i];
}

namespace {

// Removes the component along the uniform vector.
void deflate(std::span<double> v) {
    const double mean = kernels::sum(v) / static_cast<double>(v.size());
    for (double& x : v) x -= mean;
}

double norm(std::span<const double> v) { return std::sqrt(kernels::dot(v, v)); }

struct Ritz {
    double value;
    double last_component;
};

Ritz largest_ritz(const std::vector<double>& diag, const std::vector<double>& off) {
    const Eigen::Index k = static_cast<Eigen::Index>(diag.size());
    Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(diag.data(), k);
    Eigen::VectorXd e(std::max<Eigen::Index>(k - 1, 0));
    for (Eigen::Index i = 0; i + 1 < k; ++i) e[i] = off[static_cast<std::size_t>(i)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw ConvergenceError("tridiagonal eigensolver failed");
    // Eigenvalues are ascending.
    return {solver.eigenvalues()[k - 1], solver.eigenvectors()(k - 1, k - 1)};
}

}  // namespace

Lambda2Estimate estimate_lambda2(const MarkovGenerator& gen, double tol, std::size_t max_iter) {
    const std::size_t m = gen.dimension();
    if (m < 2) throw InputError("lambda2 needs at least 2 edges");
    const std::size_t krylov_cap = std::min(max_iter, m - 1);
    const auto csr = gen.transition().csr();

    // S = (I + Q) / 2 restricted to the complement of the uniform vector.
    std::vector<double> qv(m);
    auto apply_shifted = [&](std::span<const double> v, std::span<double> out) {
        kernels::spmv(csr, v, qv);
        for (std::size_t i = 0; i < m; ++i) out[i] = 0.5 * (v[i] + qv[i]);
        deflate(out);
    };

    std::vector<std::vector<double>> basis;
    std::vector<double> diag, off;
    std::vector<double> w(m);

    std::vector<double> q(m);
    Rng rng(0x1a2b3c4dULL);
    for (double& x : q) x = 2.0 * rng.uniform01() - 1.0;
    deflate(q);
    {
        const double nq = norm(q);
        for (double& x : q) x /= nq;
    }

    Lambda2Estimate est;
    for (std::size_t j = 0; j < krylov_cap; ++j) {
        basis.push_back(q);
        apply_shifted(basis.back(), w);
        const double a = kernels::dot(w, basis.back());
        diag.push_back(a);
        kernels::axpy(-a, basis.back(), w);
        if (j > 0) kernels::axpy(-off.back(), basis[j - 1], w);
        // Full reorthogonalization, two passes.
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) kernels::axpy(-kernels::dot(w, b), b, w);
        deflate(w);
        const double beta = norm(w);

        const std::size_t k = j + 1;
        const bool exhausted = beta <= 1e-14 || k == krylov_cap;
        const bool check = exhausted || k <= 16 || k % 8 == 0;
        if (check) {
            const Ritz ritz = largest_ritz(diag, off);
            est.lambda2 = 2.0 * (1.0 - ritz.value);
            est.iterations = k;
            est.residual = 2.0 * beta * std::abs(ritz.last_component);
            if (est.residual <= tol || beta <= 1e-14 || k == m - 1) {
                if (est.lambda2 < 1e-10)
                    throw DisconnectedError("lambda2 is zero: the line graph is disconnected");
                return est;
            }
            if (k == krylov_cap) break;
        }
        off.push_back(beta);
        for (std::size_t i = 0; i < m; ++i) q[i] = w[i] / beta;
    }
    throw ConvergenceError("Lanczos did not reach tolerance " + std::to_string(tol) + " in " +
                           std::to_string(krylov_cap) + " iterations (residual " +
                           std::to_string(est.residual) + ")");
}

std::size_t steps_for_lambda2(double lambda2) {
    const double inv = 1.0 / lambda2;
    const double nearest = std::round(inv);
    double steps = std::abs(inv - nearest) <= 1e-9 * std::max(1.0, inv) ? nearest : std::ceil(inv);
    return static_cast<std::size_t>(std::max(1.0, steps));
}

StepBound step_bound(const StepPolicy& policy, const MarkovGenerator* gen) {
    StepBound out;
    out.steps = policy.cap;
    if (policy.mode == StepMode::fixed) return out;
    if (!gen) throw InputError("spectral step mode needs a Markov generator");
    try {
        out.estimate = estimate_lambda2(*gen, policy.tol, policy.max_iter);
        out.steps = std::min(steps_for_lambda2(out.estimate->lambda2), policy.cap);
    } catch (const NumericalError&) {
        out.fell_back = true;
    }
    return out;
}

}  // namespace uelc
