#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "uelc/graph.hpp"
#include "uelc/kernels.hpp"

namespace uelc {

/**
 * One-step transition operator of the link-node-link walk, stored as CSR
 * over edge ids. From edge e the walker picks an endpoint with probability
 * 1/2, then one of that endpoint's k incident edges uniformly, so
 *
 *   p(e, f) = 1/(2 k_x)               if e and f share exactly node x,
 *   p(e, e) = 1/(2 k_i) + 1/(2 k_j)   for e = (i, j).
 *
 * The matrix is symmetric and doubly stochastic; it doubles as the weighted
 * adjacency (and transition matrix) of the line graph.
 */
class LinkTransition {
public:
    explicit LinkTransition(const Graph& g);

    std::size_t edge_count() const { return row_ptr_.size() - 1; }
    std::size_t nonzeros() const { return cols_.size(); }

    std::span<const std::uint32_t> row_columns(EdgeId e) const {
        return {cols_.data() + row_ptr_[e], cols_.data() + row_ptr_[e + 1]};
    }
    std::span<const double> row_values(EdgeId e) const {
        return {vals_.data() + row_ptr_[e], vals_.data() + row_ptr_[e + 1]};
    }
    /// Entry p(e, f); 0 when not stored.
    double at(EdgeId e, EdgeId f) const;

    kernels::CsrView csr() const { return {row_ptr_, cols_, vals_}; }

private:
    std::vector<std::size_t> row_ptr_;
    std::vector<std::uint32_t> cols_;  // sorted within each row
    std::vector<double> vals_;
};

LinkTransition build_transition(const Graph& g);

/// Walk position distribution over edges after `step` steps.
struct EdgeDistribution {
    std::vector<double> prob;
    std::size_t step = 0;

    std::size_t edge_count() const { return prob.size(); }
};

/// One-hot start at `seed`. Throws InputError if seed >= m.
EdgeDistribution unit_distribution(std::size_t m, EdgeId seed);

/// Applies `steps` walk steps. Because the operator is symmetric, each step
/// a <- a^T P is the row-wise product P a. Throws InputError on a size
/// mismatch.
EdgeDistribution propagate(const LinkTransition& t, EdgeDistribution a, std::size_t steps);

}  // namespace uelc
