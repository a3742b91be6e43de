#include "emc/density_matrix.hpp"

#include <cmath>
#include <sstream>

namespace emc {

DensityMatrix::DensityMatrix(Eigen::MatrixXd entries, std::vector<int> factor_dims)
    : entries_(std::move(entries)), factor_dims_(std::move(factor_dims)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        throw invalid_input_error("density matrix must be square and nonempty");
    }
    if (factor_dims_.empty()) {
        throw invalid_input_error("density matrix needs a declared tensor factorization");
    }
    Eigen::Index product = 1;
    for (const int d : factor_dims_) {
        if (d < 1) throw invalid_input_error("factor dimensions must be positive");
        product *= d;
    }
    if (product != entries_.rows()) {
        std::ostringstream msg;
        msg << "factor dimensions multiply to " << product << " but matrix dimension is "
            << entries_.rows();
        throw invalid_input_error(msg.str());
    }
    const double asym = (entries_ - entries_.transpose()).cwiseAbs().maxCoeff();
    if (asym > tol::hermitian) {
        std::ostringstream msg;
        msg << "density matrix asymmetry " << asym << " exceeds " << tol::hermitian;
        throw invalid_input_error(msg.str());
    }
    const double tr = entries_.trace();
    if (std::abs(tr - 1.0) > tol::norm) {
        std::ostringstream msg;
        msg << "density matrix trace " << tr << " deviates from 1 beyond " << tol::norm;
        throw invalid_input_error(msg.str());
    }
}

} // namespace emc
