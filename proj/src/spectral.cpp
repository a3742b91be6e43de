#include "emc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "emc/reduction.hpp"

namespace emc {

double log_in_base(double x, LogBase base) {
    return base == LogBase::two ? std::log2(x) : std::log(x);
}

namespace {

double entropy_of_spectrum(const std::vector<double>& eigenvalues, LogBase base) {
    double nats = 0.0;
    for (const double lambda : eigenvalues) {
        if (lambda > 0.0) nats -= lambda * std::log(lambda);
    }
    return base == LogBase::two ? nats / std::log(2.0) : nats;
}

} // namespace

int SpectralSummary::rank(double cutoff) const {
    return static_cast<int>(std::count_if(eigenvalues.begin(), eigenvalues.end(),
                                          [&](double v) { return v > cutoff; }));
}

SpectralSummary von_neumann_entropy(const DensityMatrix& rho, LogBase base) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(rho.matrix(),
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw numerical_error("eigendecomposition failed to converge");
    }
    const Eigen::VectorXd& vals = solver.eigenvalues(); // ascending
    if (vals(0) < -tol::psd) {
        std::ostringstream msg;
        msg << "matrix is not positive semidefinite: eigenvalue " << vals(0);
        throw numerical_error(msg.str());
    }

    SpectralSummary summary;
    summary.eigenvalues.reserve(static_cast<std::size_t>(vals.size()));
    for (Eigen::Index i = vals.size() - 1; i >= 0; --i) {
        summary.eigenvalues.push_back(std::clamp(vals(i), 0.0, 1.0));
    }
    summary.entropy = entropy_of_spectrum(summary.eigenvalues, base);
    summary.is_pure = summary.eigenvalues.front() >= 1.0 - tol::purity;
    return summary;
}

double shannon_entropy_density(const TransitionKernel& kernel,
                               const InitialDistribution& init, LogBase base) {
    if (!is_stationary(kernel, init)) {
        throw invalid_input_error(
            "entropy density is defined for stationary chains; init is not stationary");
    }
    const int d = kernel.alphabet_size();
    double nats = 0.0;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const double p = kernel(i, j);
            if (p > 0.0) nats -= init(i) * p * std::log(p);
        }
    }
    return base == LogBase::two ? nats / std::log(2.0) : nats;
}

EntropyBoundReport check_entropy_bound(const TransitionKernel& kernel,
                                       const InitialDistribution& init,
                                       int max_chain_length, LogBase base) {
    if (max_chain_length < 0) {
        throw invalid_input_error("maximum chain length must be non-negative");
    }
    EntropyBoundReport report;
    report.dimension_bound =
        log_in_base(static_cast<double>(kernel.alphabet_size()), base);
    report.all_within_bound = true;
    for (int n = 0; n <= max_chain_length; ++n) {
        const SpectralSummary summary = von_neumann_entropy(rho_n(kernel, init, n), base);
        EntropyBoundRow row;
        row.chain_length = n;
        row.entropy = summary.entropy;
        row.density = summary.entropy / static_cast<double>(n + 1);
        row.within_bound = summary.entropy <= report.dimension_bound + 1e-9;
        report.all_within_bound = report.all_within_bound && row.within_bound;
        report.rows.push_back(row);
    }
    return report;
}

} // namespace emc
