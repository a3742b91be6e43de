#include "emc/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace emc {

DensityMatrix rho_n(const TransitionKernel& kernel, const InitialDistribution& init,
                    int chain_length) {
    if (chain_length < 0) {
        throw invalid_input_error("chain length must be non-negative");
    }
    const int d = kernel.alphabet_size();
    const PureStateVector psi = build_state(kernel, init, chain_length + 1);
    const Eigen::Index rows = psi.dim() / d;
    if (static_cast<std::size_t>(rows) > budget::max_density_dim) {
        std::ostringstream msg;
        msg << "reduced state dimension " << rows << " exceeds the density-matrix budget";
        throw resource_error(msg.str());
    }
    // The extra site is the least significant digit, so tracing it out is a
    // Gram product of the (prefix x last-symbol) reshape with itself.
    const auto reshaped = psi.amplitudes().reshaped<Eigen::RowMajor>(rows, d);
    Eigen::MatrixXd rho = reshaped * reshaped.transpose();
    return DensityMatrix(std::move(rho), std::vector<int>(chain_length + 1, d));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
    const auto& dims = rho.factor_dims();
    const int num_factors = static_cast<int>(dims.size());
    if (keep.empty()) {
        throw invalid_input_error("partial trace: keep set must be nonempty");
    }
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] < 0 || keep[k] >= num_factors) {
            throw invalid_input_error("partial trace: factor index out of range");
        }
        if (k > 0 && keep[k] <= keep[k - 1]) {
            throw invalid_input_error("partial trace: keep set must be strictly increasing");
        }
    }

    std::vector<bool> kept(dims.size(), false);
    for (const int k : keep) kept[static_cast<std::size_t>(k)] = true;

    std::vector<Eigen::Index> strides(dims.size());
    Eigen::Index stride = 1;
    for (int f = num_factors - 1; f >= 0; --f) {
        strides[static_cast<std::size_t>(f)] = stride;
        stride *= dims[static_cast<std::size_t>(f)];
    }

    // Offset tables: every kept (resp. traced) multi-index maps to its
    // contribution to the full flat index.
    const auto offsets_for = [&](bool want_kept) {
        std::vector<Eigen::Index> offsets{0};
        for (int f = 0; f < num_factors; ++f) {
            if (kept[static_cast<std::size_t>(f)] != want_kept) continue;
            const Eigen::Index df = dims[static_cast<std::size_t>(f)];
            const Eigen::Index sf = strides[static_cast<std::size_t>(f)];
            std::vector<Eigen::Index> grown;
            grown.reserve(offsets.size() * static_cast<std::size_t>(df));
            for (const Eigen::Index base : offsets)
                for (Eigen::Index digit = 0; digit < df; ++digit)
                    grown.push_back(base + digit * sf);
            offsets.swap(grown);
        }
        return offsets;
    };
    const std::vector<Eigen::Index> kept_offsets = offsets_for(true);
    const std::vector<Eigen::Index> traced_offsets = offsets_for(false);

    const Eigen::Index reduced_dim = static_cast<Eigen::Index>(kept_offsets.size());
    Eigen::MatrixXd reduced = Eigen::MatrixXd::Zero(reduced_dim, reduced_dim);
    const Eigen::MatrixXd& full = rho.matrix();
    for (Eigen::Index r = 0; r < reduced_dim; ++r) {
        for (Eigen::Index c = 0; c < reduced_dim; ++c) {
            double sum = 0.0;
            for (const Eigen::Index t : traced_offsets) {
                sum += full(kept_offsets[static_cast<std::size_t>(r)] + t,
                            kept_offsets[static_cast<std::size_t>(c)] + t);
            }
            reduced(r, c) = sum;
        }
    }

    std::vector<int> reduced_dims;
    reduced_dims.reserve(keep.size());
    for (const int k : keep) reduced_dims.push_back(dims[static_cast<std::size_t>(k)]);
    return DensityMatrix(std::move(reduced), std::move(reduced_dims));
}

MarginalVector marginal(const TransitionKernel& kernel, const InitialDistribution& init,
                        int steps) {
    if (kernel.alphabet_size() != init.alphabet_size()) {
        throw invalid_input_error("kernel and initial distribution sizes differ");
    }
    if (steps < 0) {
        throw invalid_input_error("step count must be non-negative");
    }
    Eigen::RowVectorXd p = init.vector().transpose();
    for (int k = 0; k < steps; ++k) p = p * kernel.matrix();
    return p.transpose();
}

DensityMatrix sigma_matrix(const TransitionKernel& kernel,
                           const InitialDistribution& init, int chain_length) {
    const int d = kernel.alphabet_size();
    const MarginalVector marg = marginal(kernel, init, chain_length);
    const Eigen::MatrixXd sqrt_kernel = kernel.matrix().cwiseSqrt();
    Eigen::MatrixXd sigma = sqrt_kernel.transpose() * marg.asDiagonal() * sqrt_kernel;
    return DensityMatrix(std::move(sigma), {d});
}

} // namespace emc
