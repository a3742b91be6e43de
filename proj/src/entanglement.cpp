#include "emc/entanglement.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>

namespace emc {

namespace {

void check_probability(double q) {
    if (!std::isfinite(q) || q < 0.0 || q > 1.0) {
        throw invalid_input_error("staying probability must lie in [0,1]");
    }
}

Eigen::Index two_pow(int n) { return Eigen::Index{1} << n; }

int flip_count(Eigen::Index basis_string, int num_sites) {
    int flips = 0;
    for (int site = 1; site < num_sites; ++site) {
        const int prev = static_cast<int>((basis_string >> (num_sites - site)) & 1);
        const int cur = static_cast<int>((basis_string >> (num_sites - 1 - site)) & 1);
        flips += prev ^ cur;
    }
    return flips;
}

double int_pow(double base, int exponent) {
    double result = 1.0;
    for (int k = 0; k < exponent; ++k) result *= base;
    return result;
}

} // namespace

ClosedFormSpectrum symmetric_spectrum(double stay_probability) {
    check_probability(stay_probability);
    const double root = std::sqrt(stay_probability * (1.0 - stay_probability));
    return {0.5 + root, 0.5 - root};
}

SymmetricEigensystem closed_form_eigensystem(double stay_probability, int chain_length) {
    check_probability(stay_probability);
    if (chain_length < 0) {
        throw invalid_input_error("chain length must be non-negative");
    }
    const double q = stay_probability;
    const ClosedFormSpectrum spectrum = symmetric_spectrum(q);
    const int num_sites = chain_length + 1;
    if (num_sites > 26) {
        throw resource_error("closed-form eigenvectors limited to 2^26 amplitudes");
    }
    const Eigen::Index dim = two_pow(num_sites);
    const double sqrt_q = std::sqrt(q);
    const double sqrt_p = std::sqrt(1.0 - q); // hopping amplitude

    const auto build = [&](int sign, double lambda) {
        Eigen::VectorXd amps(dim);
        const double scale = 1.0 / (2.0 * std::sqrt(lambda));
        for (Eigen::Index s = 0; s < dim; ++s) {
            const int flips = flip_count(s, num_sites);
            const int last = static_cast<int>(s & 1);
            // sqrt(P(last->0)) and sqrt(P(last->1))
            const double to0 = last == 0 ? sqrt_q : sqrt_p;
            const double to1 = last == 0 ? sqrt_p : sqrt_q;
            amps(s) = scale * int_pow(sqrt_p, flips) * int_pow(sqrt_q, chain_length - flips) *
                      (to0 + sign * to1);
        }
        return PureStateVector(num_sites, 2, std::move(amps));
    };

    SymmetricEigensystem system{spectrum, build(+1, spectrum.lambda_plus), std::nullopt};
    if (spectrum.lambda_minus > tol::degenerate_overlap) {
        system.psi_minus = build(-1, spectrum.lambda_minus);
    }
    return system;
}

PhiBasis phi_basis(double stay_probability, int chain_length) {
    check_probability(stay_probability);
    if (chain_length < 0) {
        throw invalid_input_error("chain length must be non-negative");
    }
    const double q = stay_probability;
    const int num_sites = chain_length + 1;
    if (num_sites > 26) {
        throw resource_error("phi basis limited to 2^26 amplitudes");
    }
    const Eigen::Index dim = two_pow(num_sites);
    const double sqrt_q = std::sqrt(q);
    const double sqrt_p = std::sqrt(1.0 - q);

    // Amplitude at (i_0 ... i_N): product of hop factors along the string,
    // times the final hop into the defining symbol b.
    const auto build = [&](int target) {
        Eigen::VectorXd amps(dim);
        for (Eigen::Index s = 0; s < dim; ++s) {
            const int flips = flip_count(s, num_sites);
            const int last = static_cast<int>(s & 1);
            const double final_hop = last == target ? sqrt_q : sqrt_p;
            amps(s) = int_pow(sqrt_p, flips) * int_pow(sqrt_q, chain_length - flips) * final_hop;
        }
        return PureStateVector(num_sites, 2, std::move(amps));
    };

    PureStateVector phi0 = build(0);
    PureStateVector phi1 = build(1);
    const double overlap = phi0.amplitudes().dot(phi1.amplitudes());
    return {std::move(phi0), std::move(phi1), overlap};
}

namespace {

// Coordinates of the phi pair in its symmetrically orthonormalized basis.
// The Gram matrix ((1,t),(t,1)) has square root
// ((g+h, g-h), (g-h, g+h))/2 with g = sqrt(1+t), h = sqrt(1-t), and those
// columns are the coordinates directly.
struct EffectiveCoordinates {
    Eigen::Vector2d phi0;
    Eigen::Vector2d phi1;
};

EffectiveCoordinates effective_coordinates(double overlap) {
    if (std::abs(1.0 - overlap) <= tol::degenerate_overlap) {
        // q = 1/2: the pair collapses to a single vector.
        return {{1.0, 0.0}, {1.0, 0.0}};
    }
    if (std::abs(overlap) <= tol::degenerate_overlap) {
        // q in {0,1}: already orthogonal.
        return {{1.0, 0.0}, {0.0, 1.0}};
    }
    const double g = std::sqrt(1.0 + overlap);
    const double h = std::sqrt(1.0 - overlap);
    return {{0.5 * (g + h), 0.5 * (g - h)}, {0.5 * (g - h), 0.5 * (g + h)}};
}

Eigen::Matrix4d assemble_effective(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                                   double overlap) {
    // rho = 1/2 (aa^T (x) |0><0| + bb^T (x) |1><1|)
    //     + t/2 (ab^T (x) |0><1| + ba^T (x) |1><0|),  t = <phi0|phi1>.
    Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            rho(2 * i + 0, 2 * j + 0) = 0.5 * a(i) * a(j);
            rho(2 * i + 1, 2 * j + 1) = 0.5 * b(i) * b(j);
            rho(2 * i + 0, 2 * j + 1) = 0.5 * overlap * a(i) * b(j);
            rho(2 * i + 1, 2 * j + 0) = 0.5 * overlap * b(i) * a(j);
        }
    }
    return rho;
}

Eigen::MatrixXd partial_transpose_second(const Eigen::MatrixXd& rho, Eigen::Index dim_first,
                                         Eigen::Index dim_second) {
    Eigen::MatrixXd pt(rho.rows(), rho.cols());
    for (Eigen::Index a = 0; a < dim_first; ++a)
        for (Eigen::Index b = 0; b < dim_second; ++b)
            for (Eigen::Index c = 0; c < dim_first; ++c)
                for (Eigen::Index e = 0; e < dim_second; ++e)
                    pt(a * dim_second + b, c * dim_second + e) =
                        rho(a * dim_second + e, c * dim_second + b);
    return pt;
}

double min_symmetric_eigenvalue(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw numerical_error("eigendecomposition failed to converge");
    }
    return solver.eigenvalues()(0);
}

} // namespace

DensityMatrix effective_two_qubit_state(double stay_probability, int chain_length) {
    const PhiBasis basis = phi_basis(stay_probability, chain_length);
    const EffectiveCoordinates coords = effective_coordinates(basis.overlap);
    return DensityMatrix(assemble_effective(coords.phi0, coords.phi1, basis.overlap),
                         {2, 2});
}

const char* to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::separable: return "separable";
    case Verdict::entangled: return "entangled";
    case Verdict::inconclusive_if_ppt: return "inconclusive-if-PPT";
    }
    return "unknown";
}

PptReport ppt_test(double stay_probability, int chain_length) {
    const PhiBasis basis = phi_basis(stay_probability, chain_length);
    const EffectiveCoordinates coords = effective_coordinates(basis.overlap);
    const Eigen::Matrix4d rho = assemble_effective(coords.phi0, coords.phi1, basis.overlap);
    const Eigen::MatrixXd pt = partial_transpose_second(rho, 2, 2);

    // Witness (phi1 (x) |0> - phi0 (x) |1>)/sqrt(2) in the same coordinates.
    Eigen::Vector4d witness;
    witness << coords.phi1(0), -coords.phi0(0), coords.phi1(1), -coords.phi0(1);
    witness /= std::sqrt(2.0);
    const double witness_norm = witness.squaredNorm();
    if (std::abs(witness_norm - 1.0) > tol::norm) {
        throw numerical_error("witness vector lost normalization");
    }
    const double witness_value = witness.dot(pt * witness);

    PptReport report;
    report.min_eigenvalue_pt = min_symmetric_eigenvalue(pt);
    report.witness_value = witness_value;
    if (report.min_eigenvalue_pt < -tol::psd) {
        report.verdict = Verdict::entangled;
    } else {
        report.verdict = Verdict::separable;
        report.near_boundary = report.min_eigenvalue_pt < 0.0;
    }
    return report;
}

PptReport generic_ppt(const DensityMatrix& rho, int cut) {
    const auto& dims = rho.factor_dims();
    if (cut < 1 || cut >= static_cast<int>(dims.size())) {
        throw invalid_input_error("cut must split the declared factors into two nonempty groups");
    }
    Eigen::Index dim_first = 1;
    Eigen::Index dim_second = 1;
    for (int f = 0; f < static_cast<int>(dims.size()); ++f) {
        (f < cut ? dim_first : dim_second) *= dims[static_cast<std::size_t>(f)];
    }

    const Eigen::MatrixXd pt = partial_transpose_second(rho.matrix(), dim_first, dim_second);

    PptReport report;
    report.min_eigenvalue_pt = min_symmetric_eigenvalue(pt);
    const bool conclusive_dims = dim_first * dim_second <= 6;
    if (report.min_eigenvalue_pt < -tol::psd) {
        report.verdict = Verdict::entangled;
    } else {
        report.near_boundary = report.min_eigenvalue_pt < 0.0;
        report.verdict = conclusive_dims ? Verdict::separable : Verdict::inconclusive_if_ppt;
    }
    return report;
}

} // namespace emc
