#pragma once

#include <vector>

#include <Eigen/Dense>

#include "emc/errors.hpp"
#include "emc/tolerances.hpp"

namespace emc {

/// Real symmetric unit-trace matrix with a declared tensor factorization of
/// its index space. Symmetry (tol::hermitian) and trace (tol::norm) are
/// enforced on construction; positive semidefiniteness is checked wherever a
/// spectrum is taken (see von_neumann_entropy).
class DensityMatrix {
public:
    DensityMatrix(Eigen::MatrixXd entries, std::vector<int> factor_dims);

    Eigen::Index dim() const { return entries_.rows(); }
    const Eigen::MatrixXd& matrix() const { return entries_; }
    const std::vector<int>& factor_dims() const { return factor_dims_; }
    double trace() const { return entries_.trace(); }

private:
    Eigen::MatrixXd entries_;
    std::vector<int> factor_dims_;
};

} // namespace emc
