#pragma once

#include <span>

#include <Eigen/Dense>

#include "emc/model.hpp"

namespace emc {

class DensityMatrix;

/// Real amplitude vector over basis strings (i_0 ... i_N) of a fixed alphabet,
/// indexed mixed-radix with site 0 as the most significant digit:
///   index(i_0 ... i_N) = sum_k i_k * d^(N-k).
/// Normalized within tol::norm; amplitudes built from chain data are >= 0,
/// eigenvector constructions may carry signs.
class PureStateVector {
public:
    PureStateVector(int num_sites, int alphabet_size, Eigen::VectorXd amplitudes);

    int num_sites() const { return num_sites_; }
    int alphabet_size() const { return alphabet_size_; }
    Eigen::Index dim() const { return amplitudes_.size(); }
    double amplitude(Eigen::Index index) const { return amplitudes_(index); }
    const Eigen::VectorXd& amplitudes() const { return amplitudes_; }

    Eigen::Index index_of(std::span<const int> symbols) const;
    /// Digit of `index` at `site` (site 0 most significant).
    int symbol_at(Eigen::Index index, int site) const;

private:
    int num_sites_;
    int alphabet_size_;
    Eigen::VectorXd amplitudes_;
};

/// Amplitude at (i_0 ... i_N) is sqrt(P(i_0) * prod_k P(i_{k-1} -> i_k)),
/// over chain_length + 1 sites. Throws resource_error when d^(N+1) exceeds
/// budget::max_amplitudes, numerical_error if normalization drifts.
PureStateVector build_state(const TransitionKernel& kernel,
                            const InitialDistribution& init,
                            int chain_length);

/// Rank-1 projector |psi><psi| with one tensor factor per site.
DensityMatrix density_from_state(const PureStateVector& psi);

} // namespace emc
