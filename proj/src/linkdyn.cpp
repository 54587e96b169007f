#include "uelc/linkdyn.hpp"

#include <algorithm>
#include <string>

#include "uelc/error.hpp"

namespace uelc {

LinkTransition::LinkTransition(const Graph& g) {
    const std::size_t m = g.edge_count();
    row_ptr_.assign(m + 1, 0);
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& edge = g.edge(e);
        row_ptr_[e + 1] = row_ptr_[e] + g.degree(edge.u) + g.degree(edge.v) - 1;
    }
    cols_.resize(row_ptr_.back());
    vals_.resize(row_ptr_.back());

    std::vector<std::pair<std::uint32_t, double>> row;
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& edge = g.edge(e);
        const double wu = 1.0 / (2.0 * static_cast<double>(g.degree(edge.u)));
        const double wv = 1.0 / (2.0 * static_cast<double>(g.degree(edge.v)));
        row.clear();
        for (const Incidence& inc : g.incidences(edge.u))
            if (inc.edge != e) row.emplace_back(inc.edge, wu);
        for (const Incidence& inc : g.incidences(edge.v))
            if (inc.edge != e) row.emplace_back(inc.edge, wv);
        row.emplace_back(e, wu + wv);
        std::sort(row.begin(), row.end());
        std::size_t k = row_ptr_[e];
        for (const auto& [col, val] : row) {
            cols_[k] = col;
            vals_[k] = val;
            ++k;
        }
    }
}

double LinkTransition::at(EdgeId e, EdgeId f) const {
    auto cols = row_columns(e);
    auto it = std::lower_bound(cols.begin(), cols.end(), f);
    if (it == cols.end() || *it != f) return 0.0;
    return vals_[row_ptr_[e] + static_cast<std::size_t>(it - cols.begin())];
}

LinkTransition build_transition(const Graph& g) { return LinkTransition(g); }

EdgeDistribution unit_distribution(std::size_t m, EdgeId seed) {
    if (seed >= m)
        throw InputError("seed edge " + std::to_string(seed) + " out of range for m = " +
                         std::to_string(m));
    EdgeDistribution a;
    a.prob.assign(m, 0.0);
    a.prob[seed] = 1.0;
    return a;
}

EdgeDistribution propagate(const LinkTransition& t, EdgeDistribution a, std::size_t steps) {
    if (a.edge_count() != t.edge_count())
        throw InputError("distribution has " + std::to_string(a.edge_count()) +
                         " entries, operator has " + std::to_string(t.edge_count()));
    std::vector<double> next(a.prob.size());
    const auto csr = t.csr();
    for (std::size_t s = 0; s < steps; ++s) {
        kernels::spmv(csr, a.prob, next);
        a.prob.swap(next);
    }
    a.step += steps;
    return a;
}

}  // namespace uelc
