#pragma once

#include <span>

#include "emc/density_matrix.hpp"
#include "emc/model.hpp"
#include "emc/statevec.hpp"

namespace emc {

/// Occupation law of the last site after `steps` kernel applications.
using MarginalVector = Eigen::VectorXd;

/// Reduced state on sites {0..chain_length}, obtained by tracing one extra
/// site out of the pure chain state on chain_length + 2 sites. One factor of
/// dimension d per remaining site.
DensityMatrix rho_n(const TransitionKernel& kernel, const InitialDistribution& init,
                    int chain_length);

/// Trace out every tensor factor not listed in `keep` (strictly increasing
/// factor positions). Index arithmetic only; no permutation matrices.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// init * kernel^steps by row-vector iteration; O(steps * d^2).
MarginalVector marginal(const TransitionKernel& kernel, const InitialDistribution& init,
                        int steps);

/// Boundary matrix of the chain after chain_length steps:
///   sigma[j,k] = sum_i marg(i) * sqrt(P(i->j)) * sqrt(P(i->k)).
/// Shares its nonzero spectrum with rho_n of the same arguments; costs
/// O(chain_length * d^2 + d^3) instead of anything exponential.
DensityMatrix sigma_matrix(const TransitionKernel& kernel,
                           const InitialDistribution& init, int chain_length);

} // namespace emc
