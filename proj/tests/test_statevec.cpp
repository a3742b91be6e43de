#include "doctest.h"

#include <array>
#include <random>

#include "emc/density_matrix.hpp"
#include "emc/statevec.hpp"
#include "support/oracles.hpp"

using namespace emc;

TEST_CASE("mixed-radix indexing puts site 0 in the most significant digit") {
    Eigen::VectorXd amps = Eigen::VectorXd::Zero(27);
    amps(0) = 1.0;
    const PureStateVector psi(3, 3, amps);

    for (Eigen::Index idx = 0; idx < 27; ++idx) {
        const auto digits = testing::digits_of(idx, 3, 3);
        CHECK(psi.index_of(digits) == idx);
        for (int site = 0; site < 3; ++site)
            CHECK(psi.symbol_at(idx, site) == digits[static_cast<std::size_t>(site)]);
    }

    const std::array<int, 3> string{2, 0, 1};
    CHECK(psi.index_of(string) == 2 * 9 + 0 * 3 + 1);
}

TEST_CASE("state vector construction enforces shape and normalization") {
    Eigen::VectorXd amps = Eigen::VectorXd::Zero(4);
    amps(1) = 1.0;
    CHECK_NOTHROW(PureStateVector(2, 2, amps));
    CHECK_THROWS_AS(PureStateVector(3, 2, amps), invalid_input_error);
    CHECK_THROWS_AS(PureStateVector(0, 2, amps), invalid_input_error);

    Eigen::VectorXd unnormalized = Eigen::VectorXd::Constant(4, 0.5);
    unnormalized(0) = 0.6; // squared norm 1.11
    CHECK_THROWS_AS(PureStateVector(2, 2, unnormalized), numerical_error);

    CHECK_THROWS_AS(PureStateVector(2, 2, Eigen::VectorXd::Zero(4)), numerical_error);
}

TEST_CASE("index_of validates strings") {
    Eigen::VectorXd amps = Eigen::VectorXd::Zero(4);
    amps(0) = 1.0;
    const PureStateVector psi(2, 2, amps);
    CHECK_THROWS_AS(psi.index_of(std::array<int, 1>{0}), invalid_input_error);
    CHECK_THROWS_AS(psi.index_of(std::array<int, 2>{0, 2}), invalid_input_error);
    CHECK_THROWS_AS(psi.index_of(std::array<int, 2>{-1, 0}), invalid_input_error);
}

TEST_CASE("build_state amplitudes are square roots of path probabilities") {
    std::mt19937_64 rng(7);
    for (const int d : {2, 3}) {
        for (int length = 0; length <= 4; ++length) {
            const auto model = testing::random_model(rng, d, d == 2);
            const PureStateVector psi = build_state(model.kernel, model.init, length);
            const Eigen::VectorXd oracle =
                testing::state_by_enumeration(model.kernel, model.init, length);
            CHECK(psi.num_sites() == length + 1);
            CHECK((psi.amplitudes() - oracle).cwiseAbs().maxCoeff() <= 1e-15);
            CHECK(std::abs(psi.amplitudes().squaredNorm() - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("build_state handles the degenerate deterministic channels") {
    const auto [kernel, init] = kernel_from_symmetric(SymmetricChannel(1.0));
    const PureStateVector psi = build_state(kernel, init, 3);
    // Only the all-0 and all-1 strings carry weight.
    const double root_half = std::sqrt(0.5);
    CHECK(psi.amplitude(0) == doctest::Approx(root_half).epsilon(1e-15));
    CHECK(psi.amplitude(15) == doctest::Approx(root_half).epsilon(1e-15));
    double off_weight = 0.0;
    for (Eigen::Index s = 1; s < 15; ++s)
        off_weight += std::abs(psi.amplitude(s));
    CHECK(off_weight == 0.0);
}

TEST_CASE("build_state rejects oversized requests before allocating") {
    const auto [kernel, init] = kernel_from_symmetric(SymmetricChannel(0.3));
    CHECK_THROWS_AS(build_state(kernel, init, 30), resource_error); // 2^31 amplitudes
    CHECK_THROWS_AS(build_state(kernel, init, -1), invalid_input_error);
}

TEST_CASE("density_from_state is the rank-1 projector with per-site factors") {
    const auto [kernel, init] = kernel_from_symmetric(SymmetricChannel(0.25));
    const PureStateVector psi = build_state(kernel, init, 2);
    const DensityMatrix rho = density_from_state(psi);
    CHECK(rho.dim() == 8);
    CHECK(rho.factor_dims() == std::vector<int>{2, 2, 2});
    CHECK(std::abs(rho.trace() - 1.0) <= 1e-12);
    const Eigen::MatrixXd expected = psi.amplitudes() * psi.amplitudes().transpose();
    CHECK((rho.matrix() - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("density_from_state refuses to materialize oversized projectors") {
    const auto [kernel, init] = kernel_from_symmetric(SymmetricChannel(0.3));
    const PureStateVector psi = build_state(kernel, init, 13); // 2^14 amplitudes
    CHECK_THROWS_AS(density_from_state(psi), resource_error);
}
