#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "uelc/linkdyn.hpp"

namespace uelc {

/// Matrix-free M = I - Q on the weighted line graph, with Q the link
/// transition operator. M is symmetric PSD with spectrum in [0, 2] and the
/// uniform vector in its kernel.
class MarkovGenerator {
public:
    explicit MarkovGenerator(const LinkTransition& t) : t_(&t) {}

    std::size_t dimension() const { return t_->edge_count(); }
    const LinkTransition& transition() const { return *t_; }

    /// out = v - Q v
    void apply(std::span<const double> v, std::span<double> out) const;

private:
    const LinkTransition* t_;
};

struct Lambda2Estimate {
    double lambda2 = 0.0;
    std::size_t iterations = 0;
    double residual = 0.0;  // Ritz residual norm, in units of lambda2
};

/**
 * Second-smallest eigenvalue of M by Lanczos with full reorthogonalization.
 * The known kernel vector (uniform) is projected out, and the largest
 * eigenvalue mu of S = (2I - M)/2 = (I + Q)/2 on its complement gives
 * lambda2 = 2 (1 - mu). Stops once the Ritz residual bound guarantees
 * |error| <= tol.
 *
 * Throws DisconnectedError when lambda2 is numerically zero, InputError
 * for m < 2, ConvergenceError when max_iter is exhausted.
 */
Lambda2Estimate estimate_lambda2(const MarkovGenerator& gen, double tol = 1e-8,
                                 std::size_t max_iter = 1000);

enum class StepMode { fixed, spectral };

struct StepPolicy {
    StepMode mode = StepMode::fixed;
    std::size_t cap = 100;
    double tol = 1e-8;
    std::size_t max_iter = 1000;
};

struct StepBound {
    std::size_t steps = 0;
    bool fell_back = false;  // spectral mode failed; steps == cap
    std::optional<Lambda2Estimate> estimate;
};

/// fixed: cap. spectral: min(ceil(1/lambda2), cap), or cap with fell_back
/// set if the eigensolver throws. `gen` may be null in fixed mode only.
StepBound step_bound(const StepPolicy& policy, const MarkovGenerator* gen);

/// ceil(1/lambda2), ignoring rounding noise just above an integer.
std::size_t steps_for_lambda2(double lambda2);

}  // namespace uelc
