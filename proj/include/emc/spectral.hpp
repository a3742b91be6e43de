#pragma once

#include <vector>

#include "emc/density_matrix.hpp"
#include "emc/model.hpp"

namespace emc {

/// Log base for every entropy in the library. The underlying sums use the
/// natural logarithm and are rescaled, so the two selections agree up to the
/// exact factor ln 2.
enum class LogBase { two, natural };

double log_in_base(double x, LogBase base);

struct SpectralSummary {
    /// Descending, clamped to [0,1].
    std::vector<double> eigenvalues;
    double entropy = 0.0;
    bool is_pure = false;

    int rank(double cutoff = tol::rank_cutoff) const;
};

/// Full symmetric eigendecomposition, then -sum lambda log lambda with
/// 0 log 0 := 0. Throws numerical_error if an eigenvalue is below -tol::psd.
SpectralSummary von_neumann_entropy(const DensityMatrix& rho,
                                    LogBase base = LogBase::two);

/// Per-site entropy rate -sum_i P(i) sum_j P(i->j) log P(i->j) of a
/// stationary chain; throws invalid_input_error when init is not stationary
/// for the kernel.
double shannon_entropy_density(const TransitionKernel& kernel,
                               const InitialDistribution& init,
                               LogBase base = LogBase::two);

struct EntropyBoundRow {
    int chain_length = 0;
    double entropy = 0.0;
    /// entropy / (chain_length + 1)
    double density = 0.0;
    bool within_bound = false;
};

struct EntropyBoundReport {
    /// log d in the chosen base; every entropy must stay below it.
    double dimension_bound = 0.0;
    std::vector<EntropyBoundRow> rows;
    bool all_within_bound = false;
};

/// Entropies of the reduced chain states for every chain length up to
/// max_chain_length, each checked against log d + 1e-9.
EntropyBoundReport check_entropy_bound(const TransitionKernel& kernel,
                                       const InitialDistribution& init,
                                       int max_chain_length,
                                       LogBase base = LogBase::two);

} // namespace emc
