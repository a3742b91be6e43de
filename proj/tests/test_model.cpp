#include "doctest.h"

#include <sstream>

#include "emc/model.hpp"

using namespace emc;

namespace {

Eigen::MatrixXd two_state(double a, double b) {
    Eigen::MatrixXd m(2, 2);
    m << a, 1.0 - a, b, 1.0 - b;
    return m;
}

} // namespace

TEST_CASE("transition kernel accepts row-stochastic matrices") {
    const TransitionKernel kernel(two_state(0.9, 0.5));
    CHECK(kernel.alphabet_size() == 2);
    CHECK(kernel(0, 0) == doctest::Approx(0.9));
    CHECK(kernel(1, 1) == doctest::Approx(0.5));
}

TEST_CASE("transition kernel tolerates rounding-level row-sum drift") {
    Eigen::MatrixXd m = two_state(0.3, 0.7);
    m(0, 0) += 5e-13; // inside tol::stochastic
    CHECK_NOTHROW(TransitionKernel{m});
}

TEST_CASE("transition kernel rejects malformed input") {
    CHECK_THROWS_AS(TransitionKernel{Eigen::MatrixXd::Zero(2, 3)}, invalid_input_error);
    CHECK_THROWS_AS(TransitionKernel{Eigen::MatrixXd{}}, invalid_input_error);

    Eigen::MatrixXd negative = two_state(0.5, 0.5);
    negative(0, 0) = -0.1;
    negative(0, 1) = 1.1;
    CHECK_THROWS_AS(TransitionKernel{negative}, invalid_input_error);

    Eigen::MatrixXd off = two_state(0.5, 0.5);
    off(0, 0) = 0.6; // row 0 sums to 1.1
    CHECK_THROWS_AS(TransitionKernel{off}, invalid_input_error);
}

TEST_CASE("initial distribution validates like a probability vector") {
    Eigen::VectorXd p(3);
    p << 0.2, 0.3, 0.5;
    const InitialDistribution init(p);
    CHECK(init.alphabet_size() == 3);
    CHECK(init(2) == doctest::Approx(0.5));

    Eigen::VectorXd bad(2);
    bad << 0.2, 0.3;
    CHECK_THROWS_AS(InitialDistribution{bad}, invalid_input_error);
    CHECK_THROWS_AS(InitialDistribution{Eigen::VectorXd{}}, invalid_input_error);
}

TEST_CASE("symmetric channel accepts [0,1] and rejects the rest") {
    CHECK(SymmetricChannel(0.0).stay_probability() == 0.0);
    CHECK(SymmetricChannel(1.0).stay_probability() == 1.0);
    CHECK_THROWS_AS(SymmetricChannel(-0.01), invalid_input_error);
    CHECK_THROWS_AS(SymmetricChannel(1.01), invalid_input_error);
    CHECK_THROWS_AS(SymmetricChannel(std::nan("")), invalid_input_error);
}

TEST_CASE("kernel_from_symmetric lays out the binary channel") {
    const auto [kernel, init] = kernel_from_symmetric(SymmetricChannel(0.3));
    CHECK(kernel(0, 0) == 0.3);
    CHECK(kernel(0, 1) == 0.7);
    CHECK(kernel(1, 0) == 0.7);
    CHECK(kernel(1, 1) == 0.3);
    CHECK(init(0) == 0.5);
    CHECK(init(1) == 0.5);
}

TEST_CASE("lattice walk kernel reports offsets and range") {
    const LatticeWalkKernel simple({{-1, 0.5}, {1, 0.5}});
    CHECK(simple.range() == 1);
    CHECK(simple.min_offset() == -1);
    CHECK(simple.max_offset() == 1);
    CHECK(simple.hop(1) == 0.5);
    CHECK(simple.hop(0) == 0.0);

    const LatticeWalkKernel skewed({{-3, 0.2}, {2, 0.8}});
    CHECK(skewed.range() == 3);
    CHECK(skewed.min_offset() == -3);
    CHECK(skewed.max_offset() == 2);

    // Zero-probability entries do not widen the range.
    const LatticeWalkKernel padded({{-5, 0.0}, {0, 1.0}});
    CHECK(padded.range() == 0);
    CHECK(padded.min_offset() == 0);
    CHECK(padded.max_offset() == 0);
}

TEST_CASE("lattice walk kernel rejects non-distributions") {
    CHECK_THROWS_AS(LatticeWalkKernel{{}}, invalid_input_error);
    CHECK_THROWS_AS(LatticeWalkKernel({{0, 0.5}}), invalid_input_error);
    CHECK_THROWS_AS(LatticeWalkKernel({{0, -0.5}, {1, 1.5}}), invalid_input_error);
    CHECK_THROWS_AS(LatticeWalkKernel({{0, 0.0}}), invalid_input_error);
}

TEST_CASE("is_stationary detects fixed points") {
    const auto [channel, uniform] = kernel_from_symmetric(SymmetricChannel(0.8));
    CHECK(is_stationary(channel, uniform));

    const TransitionKernel skew(two_state(0.9, 0.5));
    CHECK_FALSE(is_stationary(skew, uniform));
    CHECK(is_stationary(skew, stationary_distribution(skew)));

    Eigen::VectorXd three = Eigen::VectorXd::Constant(3, 1.0 / 3.0);
    CHECK_THROWS_AS(is_stationary(skew, InitialDistribution{three}), invalid_input_error);
}

TEST_CASE("stationary_distribution solves the fixed-point equation") {
    // 0.1 pi0 = 0.5 pi1 with pi0 + pi1 = 1 gives (5/6, 1/6).
    const TransitionKernel kernel(two_state(0.9, 0.5));
    const InitialDistribution pi = stationary_distribution(kernel);
    CHECK(pi(0) == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
    CHECK(pi(1) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

    // The period-2 flip chain still has a unique fixed point.
    const TransitionKernel flip(two_state(0.0, 1.0));
    const InitialDistribution half = stationary_distribution(flip);
    CHECK(half(0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("stationary_distribution refuses non-unique fixed points") {
    CHECK_THROWS_AS(stationary_distribution(TransitionKernel{Eigen::MatrixXd::Identity(2, 2)}),
                    numerical_error);

    // Block-diagonal chain: every mixture of the two blocks is stationary.
    Eigen::MatrixXd blocks = Eigen::MatrixXd::Zero(4, 4);
    blocks.block(0, 0, 2, 2) << 0.5, 0.5, 0.5, 0.5;
    blocks.block(2, 2, 2, 2) << 0.2, 0.8, 0.6, 0.4;
    CHECK_THROWS_AS(stationary_distribution(TransitionKernel{blocks}), numerical_error);
}

TEST_CASE("kernel text format round-trips with comments") {
    std::istringstream in(
        "# three-state example\n"
        "3\n"
        "0.5 0.5 0   # row 0\n"
        "0   0.5 0.5\n"
        "0.5 0   0.5\n"
        "0.2 0.3 0.5\n");
    const KernelFile file = parse_kernel_text(in);
    CHECK(file.kernel.alphabet_size() == 3);
    CHECK(file.kernel(0, 1) == 0.5);
    CHECK(file.kernel(2, 0) == 0.5);
    CHECK(file.init(1) == 0.3);
}

TEST_CASE("kernel text format rejects malformed content") {
    std::istringstream not_a_number("two\n");
    CHECK_THROWS_AS(parse_kernel_text(not_a_number), invalid_input_error);

    std::istringstream truncated("2\n0.5 0.5\n");
    CHECK_THROWS_AS(parse_kernel_text(truncated), invalid_input_error);

    std::istringstream bad_row("2\n0.6 0.6\n0.5 0.5\n0.5 0.5\n");
    CHECK_THROWS_AS(parse_kernel_text(bad_row), invalid_input_error);

    std::istringstream bad_dim("0\n");
    CHECK_THROWS_AS(parse_kernel_text(bad_dim), invalid_input_error);
}

TEST_CASE("load_kernel_file reports missing paths as I/O errors") {
    CHECK_THROWS_AS(load_kernel_file("/nonexistent/model.txt"), io_error);
}
