#pragma once

#include <cstdint>
#include <vector>

#include "emc/density_matrix.hpp"
#include "emc/model.hpp"
#include "emc/spectral.hpp"

namespace emc {

/// Snapshot of a lattice chain after `steps` hops: the occupation law over a
/// dense integer interval. Immutable; step() produces the next snapshot.
struct WalkState {
    int steps = 0;
    std::int64_t support_lo = 0;
    Eigen::VectorXd marginal;
    /// Width of the interval the walk started from; enters the entropy bound.
    int initial_support_size = 1;

    std::int64_t support_hi() const {
        return support_lo + static_cast<std::int64_t>(marginal.size()) - 1;
    }
};

/// Walk state at step 0 with the given occupation law on [lo, lo+probs.size()).
WalkState initial_walk_state(std::int64_t lo, Eigen::VectorXd probs);

/// Point mass at `site`.
WalkState delta_walk_state(std::int64_t site);

/// One exact convolution with the hopping law; the support grows by at most
/// the hopping range on each side. No truncation of small probabilities.
WalkState step(const WalkState& state, const LatticeWalkKernel& kernel);

/// Boundary matrix over the sites reachable one hop past the current support:
///   sigma[j,k] = sum_i marg(i) sqrt(hop(j-i)) sqrt(hop(k-i)).
/// Its dimension is at most |Lambda| + 2V(steps+1).
DensityMatrix walk_sigma(const WalkState& state, const LatticeWalkKernel& kernel);

struct WalkProfileRow {
    int steps = 0;
    std::int64_t support_size = 0; // dimension of the boundary matrix
    double entropy = 0.0;
    /// log(|Lambda| + 2V(steps+1)) in the chosen base.
    double bound = 0.0;
    double density = 0.0;
};

/// Entropy of the boundary matrix at every step up to max_steps, with the
/// support-growth bound alongside. Each row satisfies entropy <= bound up to
/// rounding; the density column is reported, not asserted monotone.
std::vector<WalkProfileRow> walk_entropy_profile(const LatticeWalkKernel& kernel,
                                                 const WalkState& initial,
                                                 int max_steps,
                                                 LogBase base = LogBase::two);

} // namespace emc
