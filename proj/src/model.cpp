#include "emc/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace emc {

namespace {

void check_probability_entries(const Eigen::MatrixXd& m, const char* what) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const double p = m(r, c);
            if (!std::isfinite(p) || p < 0.0 || p > 1.0 + tol::stochastic) {
                std::ostringstream msg;
                msg << what << ": entry (" << r << "," << c << ") = " << p
                    << " is not a probability";
                throw invalid_input_error(msg.str());
            }
        }
    }
}

} // namespace

TransitionKernel::TransitionKernel(Eigen::MatrixXd rows) : rows_(std::move(rows)) {
    if (rows_.rows() == 0 || rows_.rows() != rows_.cols()) {
        throw invalid_input_error("transition kernel must be a nonempty square matrix");
    }
    check_probability_entries(rows_, "transition kernel");
    for (Eigen::Index r = 0; r < rows_.rows(); ++r) {
        const double sum = rows_.row(r).sum();
        if (std::abs(sum - 1.0) > tol::stochastic) {
            std::ostringstream msg;
            msg << "transition kernel: row " << r << " sums to " << sum
                << ", expected 1 within " << tol::stochastic;
            throw invalid_input_error(msg.str());
        }
    }
}

InitialDistribution::InitialDistribution(Eigen::VectorXd probs) : probs_(std::move(probs)) {
    if (probs_.size() == 0) {
        throw invalid_input_error("initial distribution must be nonempty");
    }
    check_probability_entries(probs_, "initial distribution");
    const double sum = probs_.sum();
    if (std::abs(sum - 1.0) > tol::stochastic) {
        std::ostringstream msg;
        msg << "initial distribution sums to " << sum << ", expected 1 within "
            << tol::stochastic;
        throw invalid_input_error(msg.str());
    }
}

SymmetricChannel::SymmetricChannel(double stay_probability) : q_(stay_probability) {
    if (!std::isfinite(q_) || q_ < 0.0 || q_ > 1.0) {
        throw invalid_input_error("staying probability must lie in [0,1]");
    }
}

LatticeWalkKernel::LatticeWalkKernel(std::map<int, double> hopping)
    : hopping_(std::move(hopping)) {
    if (hopping_.empty()) {
        throw invalid_input_error("hopping law must contain at least one offset");
    }
    double sum = 0.0;
    bool first = true;
    for (const auto& [offset, p] : hopping_) {
        if (!std::isfinite(p) || p < 0.0 || p > 1.0 + tol::stochastic) {
            throw invalid_input_error("hopping probability out of range");
        }
        sum += p;
        if (p <= 0.0) continue;
        if (first) {
            min_offset_ = max_offset_ = offset;
            first = false;
        } else {
            min_offset_ = std::min(min_offset_, offset);
            max_offset_ = std::max(max_offset_, offset);
        }
    }
    if (first) {
        throw invalid_input_error("hopping law has no nonzero probability");
    }
    if (std::abs(sum - 1.0) > tol::stochastic) {
        std::ostringstream msg;
        msg << "hopping probabilities sum to " << sum << ", expected 1";
        throw invalid_input_error(msg.str());
    }
    range_ = std::max(std::abs(min_offset_), std::abs(max_offset_));
}

double LatticeWalkKernel::hop(int offset) const {
    const auto it = hopping_.find(offset);
    return it == hopping_.end() ? 0.0 : it->second;
}

bool is_stationary(const TransitionKernel& kernel, const InitialDistribution& init) {
    if (kernel.alphabet_size() != init.alphabet_size()) {
        throw invalid_input_error("kernel and initial distribution sizes differ");
    }
    const Eigen::RowVectorXd propagated = init.vector().transpose() * kernel.matrix();
    const double residual =
        (propagated.transpose() - init.vector()).cwiseAbs().maxCoeff();
    return residual <= tol::stochastic;
}

std::pair<TransitionKernel, InitialDistribution>
kernel_from_symmetric(const SymmetricChannel& channel) {
    const double q = channel.stay_probability();
    Eigen::MatrixXd rows(2, 2);
    rows << q, 1.0 - q, 1.0 - q, q;
    Eigen::VectorXd init(2);
    init << 0.5, 0.5;
    return {TransitionKernel(std::move(rows)), InitialDistribution(std::move(init))};
}

InitialDistribution stationary_distribution(const TransitionKernel& kernel) {
    // pi (P - I) = 0 with the first equation replaced by sum pi = 1.
    const int d = kernel.alphabet_size();
    Eigen::MatrixXd a = kernel.matrix().transpose() - Eigen::MatrixXd::Identity(d, d);
    // The fixed point is unique iff the kernel of P^T - I is one-dimensional.
    if (Eigen::FullPivLU<Eigen::MatrixXd>(a).rank() != d - 1) {
        throw numerical_error("kernel does not admit a unique stationary distribution");
    }
    a.row(0).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(d);
    rhs(0) = 1.0;
    Eigen::VectorXd pi = a.fullPivLu().solve(rhs);
    if ((a * pi - rhs).cwiseAbs().maxCoeff() > 1e-9 || pi.minCoeff() < -1e-12) {
        throw numerical_error("kernel does not admit a unique stationary distribution");
    }
    pi = pi.cwiseMax(0.0);
    pi /= pi.sum();
    return InitialDistribution(std::move(pi));
}

namespace {

std::vector<double> parse_numbers(std::istream& in, std::size_t count, const char* what) {
    std::vector<double> values;
    values.reserve(count);
    std::string token;
    while (values.size() < count && in >> token) {
        if (token.front() == '#') {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        try {
            std::size_t used = 0;
            const double v = std::stod(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            values.push_back(v);
        } catch (const std::exception&) {
            throw invalid_input_error("model file: expected a number for " +
                                      std::string(what) + ", got '" + token + "'");
        }
    }
    if (values.size() < count) {
        throw invalid_input_error("model file: unexpected end of input while reading " +
                                  std::string(what));
    }
    return values;
}

} // namespace

KernelFile parse_kernel_text(std::istream& in) {
    const auto header = parse_numbers(in, 1, "alphabet size");
    const double d_raw = header[0];
    if (d_raw < 1.0 || d_raw != std::floor(d_raw) || d_raw > 4096.0) {
        throw invalid_input_error("model file: alphabet size must be a small positive integer");
    }
    const int d = static_cast<int>(d_raw);

    const auto entries = parse_numbers(in, static_cast<std::size_t>(d) * d, "kernel rows");
    Eigen::MatrixXd rows(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) rows(r, c) = entries[static_cast<std::size_t>(r) * d + c];

    const auto init_vals = parse_numbers(in, static_cast<std::size_t>(d), "initial distribution");
    Eigen::VectorXd init(d);
    for (int i = 0; i < d; ++i) init(i) = init_vals[static_cast<std::size_t>(i)];

    return {TransitionKernel(std::move(rows)), InitialDistribution(std::move(init))};
}

KernelFile load_kernel_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open model file: " + path);
    }
    return parse_kernel_text(in);
}

} // namespace emc
