#include "emc/statevec.hpp"

#include <cmath>
#include <sstream>

#include "emc/density_matrix.hpp"

namespace emc {

namespace {

// d^n with a budget guard; throws resource_error when the result would
// exceed `cap`.
std::size_t checked_power(int base, int exponent, std::size_t cap) {
    std::size_t result = 1;
    for (int k = 0; k < exponent; ++k) {
        if (result > cap / static_cast<std::size_t>(base)) {
            std::ostringstream msg;
            msg << base << "^" << exponent << " exceeds the memory budget (" << cap << ")";
            throw resource_error(msg.str());
        }
        result *= static_cast<std::size_t>(base);
    }
    return result;
}

} // namespace

PureStateVector::PureStateVector(int num_sites, int alphabet_size,
                                 Eigen::VectorXd amplitudes)
    : num_sites_(num_sites), alphabet_size_(alphabet_size),
      amplitudes_(std::move(amplitudes)) {
    if (num_sites_ < 1 || alphabet_size_ < 1) {
        throw invalid_input_error("state vector needs at least one site and one symbol");
    }
    const std::size_t expected =
        checked_power(alphabet_size_, num_sites_, budget::max_amplitudes);
    if (static_cast<std::size_t>(amplitudes_.size()) != expected) {
        throw invalid_input_error("amplitude count does not match d^(number of sites)");
    }
    const double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > tol::norm) {
        std::ostringstream msg;
        msg << "state vector squared norm " << norm2 << " deviates from 1 beyond "
            << tol::norm;
        throw numerical_error(msg.str());
    }
}

Eigen::Index PureStateVector::index_of(std::span<const int> symbols) const {
    if (static_cast<int>(symbols.size()) != num_sites_) {
        throw invalid_input_error("symbol string length does not match site count");
    }
    Eigen::Index index = 0;
    for (const int s : symbols) {
        if (s < 0 || s >= alphabet_size_) {
            throw invalid_input_error("symbol out of alphabet range");
        }
        index = index * alphabet_size_ + s;
    }
    return index;
}

int PureStateVector::symbol_at(Eigen::Index index, int site) const {
    Eigen::Index divisor = 1;
    for (int k = 0; k < num_sites_ - 1 - site; ++k) divisor *= alphabet_size_;
    return static_cast<int>((index / divisor) % alphabet_size_);
}

PureStateVector build_state(const TransitionKernel& kernel,
                            const InitialDistribution& init, int chain_length) {
    if (kernel.alphabet_size() != init.alphabet_size()) {
        throw invalid_input_error("kernel and initial distribution sizes differ");
    }
    if (chain_length < 0) {
        throw invalid_input_error("chain length must be non-negative");
    }
    const int d = kernel.alphabet_size();
    const int num_sites = chain_length + 1;
    checked_power(d, num_sites, budget::max_amplitudes);

    const Eigen::VectorXd sqrt_init = init.vector().cwiseSqrt();
    const Eigen::MatrixXd sqrt_kernel = kernel.matrix().cwiseSqrt();

    // Grow the amplitude table one site at a time; after k sites the last
    // symbol of prefix p is p mod d (site 0 is most significant).
    Eigen::VectorXd amps = sqrt_init;
    for (int site = 1; site < num_sites; ++site) {
        Eigen::VectorXd next(amps.size() * d);
        for (Eigen::Index prefix = 0; prefix < amps.size(); ++prefix) {
            const int last = static_cast<int>(prefix % d);
            for (int j = 0; j < d; ++j) {
                next(prefix * d + j) = amps(prefix) * sqrt_kernel(last, j);
            }
        }
        amps.swap(next);
    }
    return PureStateVector(num_sites, d, std::move(amps));
}

DensityMatrix density_from_state(const PureStateVector& psi) {
    if (static_cast<std::size_t>(psi.dim()) > budget::max_density_dim) {
        std::ostringstream msg;
        msg << "outer product of a " << psi.dim()
            << "-dimensional state exceeds the density-matrix budget";
        throw resource_error(msg.str());
    }
    Eigen::MatrixXd rho = psi.amplitudes() * psi.amplitudes().transpose();
    return DensityMatrix(std::move(rho),
                         std::vector<int>(psi.num_sites(), psi.alphabet_size()));
}

} // namespace emc
