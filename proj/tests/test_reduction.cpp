#include "doctest.h"

#include <array>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "emc/reduction.hpp"
#include "emc/spectral.hpp"
#include "emc/statevec.hpp"
#include "support/oracles.hpp"

using namespace emc;

TEST_CASE("rho_n equals the enumeration oracle") {
    std::mt19937_64 rng(11);
    for (const int d : {2, 3}) {
        for (int length = 0; length <= 3; ++length) {
            const auto model = testing::random_model(rng, d, false);
            const DensityMatrix rho = rho_n(model.kernel, model.init, length);
            const Eigen::MatrixXd oracle = testing::reduced_by_enumeration(
                model.kernel, model.init, length + 2, length + 1);
            CHECK(rho.factor_dims() ==
                  std::vector<int>(static_cast<std::size_t>(length) + 1, d));
            CHECK((rho.matrix() - oracle).cwiseAbs().maxCoeff() <= 1e-14);
        }
    }
}

TEST_CASE("rho_n matches partial_trace of the one-site-longer projector") {
    const auto [kernel, init] = kernel_from_symmetric(SymmetricChannel(0.35));
    const int length = 3;
    const DensityMatrix direct = rho_n(kernel, init, length);

    const DensityMatrix full = density_from_state(build_state(kernel, init, length + 1));
    std::vector<int> keep;
    for (int f = 0; f <= length; ++f)
        keep.push_back(f);
    const DensityMatrix traced = partial_trace(full, keep);

    CHECK((direct.matrix() - traced.matrix()).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("partial_trace validates its keep set") {
    const auto [kernel, init] = kernel_from_symmetric(SymmetricChannel(0.4));
    const DensityMatrix rho = density_from_state(build_state(kernel, init, 2));

    CHECK_THROWS_AS(partial_trace(rho, std::vector<int>{}), invalid_input_error);
    CHECK_THROWS_AS(partial_trace(rho, std::array<int, 2>{1, 1}), invalid_input_error);
    CHECK_THROWS_AS(partial_trace(rho, std::array<int, 2>{2, 1}), invalid_input_error);
    CHECK_THROWS_AS(partial_trace(rho, std::array<int, 1>{3}), invalid_input_error);
}

TEST_CASE("partial_trace keeps everything as the identity") {
    const auto [kernel, init] = kernel_from_symmetric(SymmetricChannel(0.15));
    const DensityMatrix rho = density_from_state(build_state(kernel, init, 2));
    const DensityMatrix same = partial_trace(rho, std::array<int, 3>{0, 1, 2});
    CHECK((rho.matrix() - same.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("partial_trace splits product states exactly") {
    // rho = a a^T (x) b b^T on a 2 (x) 3 system.
    Eigen::Vector2d a(std::sqrt(0.3), -std::sqrt(0.7));
    Eigen::Vector3d b(std::sqrt(0.5), std::sqrt(0.25), std::sqrt(0.25));
    const Eigen::MatrixXd rho_a = a * a.transpose();
    const Eigen::MatrixXd rho_b = b * b.transpose();
    Eigen::MatrixXd prod(6, 6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            prod.block(3 * i, 3 * j, 3, 3) = rho_a(i, j) * rho_b;
    const DensityMatrix rho(prod, {2, 3});

    const DensityMatrix first = partial_trace(rho, std::array<int, 1>{0});
    CHECK((first.matrix() - rho_a).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(first.factor_dims() == std::vector<int>{2});

    const DensityMatrix second = partial_trace(rho, std::array<int, 1>{1});
    CHECK((second.matrix() - rho_b).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("partial_trace composes factor by factor") {
    const auto [kernel, init] = kernel_from_symmetric(SymmetricChannel(0.6));
    const DensityMatrix rho = density_from_state(build_state(kernel, init, 3));
    const DensityMatrix at_once = partial_trace(rho, std::array<int, 2>{0, 1});
    const DensityMatrix stepwise = partial_trace(
        partial_trace(rho, std::array<int, 3>{0, 1, 2}), std::array<int, 2>{0, 1});
    CHECK((at_once.matrix() - stepwise.matrix()).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("marginal iterates the kernel row vector") {
    const TransitionKernel kernel((Eigen::MatrixXd(2, 2) << 0.9, 0.1, 0.5, 0.5).finished());
    Eigen::VectorXd start(2);
    start << 1.0, 0.0;
    const InitialDistribution init(start);

    CHECK((marginal(kernel, init, 0) - start).cwiseAbs().maxCoeff() == 0.0);
    const MarginalVector one = marginal(kernel, init, 1);
    CHECK(one(0) == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(one(1) == doctest::Approx(0.1).epsilon(1e-15));
    const MarginalVector two = marginal(kernel, init, 2);
    CHECK(two(0) == doctest::Approx(0.9 * 0.9 + 0.1 * 0.5).epsilon(1e-15));
    CHECK_THROWS_AS(marginal(kernel, init, -1), invalid_input_error);
}

TEST_CASE("sigma_matrix implements its defining sum") {
    std::mt19937_64 rng(13);
    const auto model = testing::random_model(rng, 3, true);
    const int length = 4;
    const DensityMatrix sigma = sigma_matrix(model.kernel, model.init, length);
    const MarginalVector marg = marginal(model.kernel, model.init, length);

    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            double sum = 0.0;
            for (int i = 0; i < 3; ++i)
                sum += marg(i) * std::sqrt(model.kernel(i, j)) *
                       std::sqrt(model.kernel(i, k));
            CHECK(sigma.matrix()(j, k) == doctest::Approx(sum).epsilon(1e-14));
        }
    }
    CHECK(std::abs(sigma.trace() - 1.0) <= 1e-12);
    CHECK(sigma.factor_dims() == std::vector<int>{3});
}

TEST_CASE("sigma_matrix of the binary channel is the closed 2x2 form") {
    for (const double q : {0.05, 0.3, 0.5, 0.77, 1.0}) {
        const auto [kernel, init] = kernel_from_symmetric(SymmetricChannel(q));
        for (const int length : {1, 4, 9}) {
            const DensityMatrix sigma = sigma_matrix(kernel, init, length);
            const double off = std::sqrt(q * (1.0 - q));
            CHECK(std::abs(sigma.matrix()(0, 0) - 0.5) <= 1e-15);
            CHECK(std::abs(sigma.matrix()(1, 1) - 0.5) <= 1e-15);
            CHECK(std::abs(sigma.matrix()(0, 1) - off) <= 1e-15);
            CHECK(std::abs(sigma.matrix()(1, 0) - off) <= 1e-15);
        }
    }
}

TEST_CASE("sigma_matrix and rho_n share their nonzero spectrum") {
    std::mt19937_64 rng(17);
    for (int draw = 0; draw < 8; ++draw) {
        const int d = 2 + static_cast<int>(rng() % 3);
        const auto model = testing::random_model(rng, d, draw % 2 == 0);
        const int length = 3;

        const SpectralSummary brute = von_neumann_entropy(rho_n(model.kernel, model.init, length));
        const SpectralSummary fast =
            von_neumann_entropy(sigma_matrix(model.kernel, model.init, length));

        for (std::size_t k = 0; k < brute.eigenvalues.size(); ++k) {
            const double expectation =
                k < fast.eigenvalues.size() ? fast.eigenvalues[k] : 0.0;
            CHECK(std::abs(brute.eigenvalues[k] - expectation) <= 1e-9);
        }
    }
}
