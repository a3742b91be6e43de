#include "emc/walk.hpp"

#include <cmath>
#include <string>

#include "emc/errors.hpp"
#include "emc/tolerances.hpp"

namespace emc {

WalkState initial_walk_state(std::int64_t lo, Eigen::VectorXd probs) {
    if (probs.size() == 0)
        throw invalid_input_error("initial walk support must be nonempty");
    double total = 0.0;
    for (Eigen::Index i = 0; i < probs.size(); ++i) {
        if (!(probs(i) >= 0.0))
            throw invalid_input_error("initial walk probabilities must be nonnegative");
        total += probs(i);
    }
    if (std::abs(total - 1.0) > tol::stochastic)
        throw invalid_input_error("initial walk probabilities must sum to 1, got sum " +
                                  std::to_string(total));
    WalkState state;
    state.steps = 0;
    state.support_lo = lo;
    state.initial_support_size = static_cast<int>(probs.size());
    state.marginal = std::move(probs);
    return state;
}

WalkState delta_walk_state(std::int64_t site) {
    Eigen::VectorXd probs(1);
    probs(0) = 1.0;
    return initial_walk_state(site, std::move(probs));
}

WalkState step(const WalkState& state, const LatticeWalkKernel& kernel) {
    const std::int64_t spread = kernel.max_offset() - kernel.min_offset();
    const std::int64_t new_size = state.marginal.size() + spread;
    if (new_size > budget::max_density_dim)
        throw resource_error("walk support of " + std::to_string(new_size) +
                             " sites exceeds the configured limit");

    WalkState next;
    next.steps = state.steps + 1;
    next.support_lo = state.support_lo + kernel.min_offset();
    next.initial_support_size = state.initial_support_size;
    next.marginal = Eigen::VectorXd::Zero(new_size);
    for (Eigen::Index i = 0; i < state.marginal.size(); ++i) {
        const double mass = state.marginal(i);
        if (mass == 0.0)
            continue;
        for (const auto& [offset, prob] : kernel.hopping())
            next.marginal(i + offset - kernel.min_offset()) += mass * prob;
    }
    return next;
}

DensityMatrix walk_sigma(const WalkState& state, const LatticeWalkKernel& kernel) {
    const std::int64_t spread = kernel.max_offset() - kernel.min_offset();
    const std::int64_t dim = state.marginal.size() + spread;
    if (dim > budget::max_density_dim)
        throw resource_error("boundary matrix of dimension " + std::to_string(dim) +
                             " exceeds the configured limit");

    // sigma = sum_i marg(i) v_i v_i^T with v_i(j) = sqrt(hop(j-i)), so it is
    // positive semidefinite with unit trace by construction.
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < state.marginal.size(); ++i) {
        const double mass = state.marginal(i);
        if (mass == 0.0)
            continue;
        for (const auto& [c1, p1] : kernel.hopping()) {
            const std::int64_t row = i + c1 - kernel.min_offset();
            for (const auto& [c2, p2] : kernel.hopping()) {
                const std::int64_t col = i + c2 - kernel.min_offset();
                sigma(row, col) += mass * std::sqrt(p1) * std::sqrt(p2);
            }
        }
    }
    return DensityMatrix(std::move(sigma), {static_cast<int>(dim)});
}

std::vector<WalkProfileRow> walk_entropy_profile(const LatticeWalkKernel& kernel,
                                                 const WalkState& initial,
                                                 int max_steps,
                                                 LogBase base) {
    if (max_steps < 0)
        throw invalid_input_error("max_steps must be nonnegative");

    std::vector<WalkProfileRow> rows;
    rows.reserve(static_cast<std::size_t>(max_steps) + 1);
    WalkState state = initial;
    for (int n = 0; n <= max_steps; ++n) {
        const DensityMatrix sigma = walk_sigma(state, kernel);
        WalkProfileRow row;
        row.steps = n;
        row.support_size = sigma.dim();
        row.entropy = von_neumann_entropy(sigma, base).entropy;
        const double reach = static_cast<double>(initial.initial_support_size) +
                             2.0 * static_cast<double>(kernel.range()) * (n + 1);
        row.bound = log_in_base(reach, base);
        row.density = row.entropy / static_cast<double>(n + 1);
        rows.push_back(row);
        if (n < max_steps)
            state = step(state, kernel);
    }
    return rows;
}

} // namespace emc
