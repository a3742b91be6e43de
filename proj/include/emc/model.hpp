#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "emc/errors.hpp"
#include "emc/tolerances.hpp"

namespace emc {

/// Row-stochastic transition matrix P(i -> j) on a finite alphabet.
/// Validated on construction: square, entries in [0,1], rows sum to 1
/// within tol::stochastic. Immutable afterwards.
class TransitionKernel {
public:
    explicit TransitionKernel(Eigen::MatrixXd rows);

    int alphabet_size() const { return static_cast<int>(rows_.rows()); }
    double operator()(int from, int to) const { return rows_(from, to); }
    const Eigen::MatrixXd& matrix() const { return rows_; }

private:
    Eigen::MatrixXd rows_;
};

/// Probability vector P(i) over the kernel's alphabet.
class InitialDistribution {
public:
    explicit InitialDistribution(Eigen::VectorXd probs);

    int alphabet_size() const { return static_cast<int>(probs_.size()); }
    double operator()(int symbol) const { return probs_(symbol); }
    const Eigen::VectorXd& vector() const { return probs_; }

private:
    Eigen::VectorXd probs_;
};

/// Binary channel with staying probability q on both symbols:
/// P(0->0) = P(1->1) = q, P(0->1) = P(1->0) = 1-q, uniform initial law.
class SymmetricChannel {
public:
    explicit SymmetricChannel(double stay_probability);

    double stay_probability() const { return q_; }

private:
    double q_;
};

/// Translation-invariant hopping law on the integer lattice: offset -> probability,
/// with every nonzero offset bounded by the hopping range V.
class LatticeWalkKernel {
public:
    explicit LatticeWalkKernel(std::map<int, double> hopping);

    /// V = max |c| over offsets with nonzero probability.
    int range() const { return range_; }
    int min_offset() const { return min_offset_; }
    int max_offset() const { return max_offset_; }
    double hop(int offset) const;
    const std::map<int, double>& hopping() const { return hopping_; }

private:
    std::map<int, double> hopping_;
    int range_ = 0;
    int min_offset_ = 0;
    int max_offset_ = 0;
};

/// True iff init is a fixed point of the kernel:
/// max_j |sum_i P(i) P(i->j) - P(j)| <= tol::stochastic.
bool is_stationary(const TransitionKernel& kernel, const InitialDistribution& init);

/// The 2x2 kernel ((q,1-q),(1-q,q)) together with the uniform initial law.
std::pair<TransitionKernel, InitialDistribution>
kernel_from_symmetric(const SymmetricChannel& channel);

/// Solves pi P = pi, sum pi = 1. Requires the chain to admit a unique
/// stationary law (irreducible); throws numerical_error otherwise.
InitialDistribution stationary_distribution(const TransitionKernel& kernel);

struct KernelFile {
    TransitionKernel kernel;
    InitialDistribution init;
};

/// Plain-text model format: first line d, then d rows of d kernel entries,
/// final line of d initial probabilities. '#' starts a comment.
KernelFile parse_kernel_text(std::istream& in);
KernelFile load_kernel_file(const std::string& path);

} // namespace emc
