#include "emc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "emc/entanglement.hpp"
#include "emc/errors.hpp"
#include "emc/model.hpp"
#include "emc/reduction.hpp"
#include "emc/statevec.hpp"
#include "emc/tolerances.hpp"
#include "emc/walk.hpp"

namespace emc {

namespace {

/// Round-trip-exact double rendering for CSV and matrix dumps.
std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

void write_text(const std::string& path, const std::string& body) {
    if (path.empty()) {
        std::cout << body << std::flush;
        if (!std::cout)
            throw io_error("cannot write to standard output");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot open output file: " + path);
    out << body << std::flush;
    if (!out)
        throw io_error("failed while writing output file: " + path);
}

/// Runs fn(0..count-1) across a few worker threads; results land in grid
/// order, so the output is identical to a serial evaluation.
template <typename Row, typename Fn>
std::vector<Row> evaluate_grid(int count, Fn&& fn) {
    std::vector<Row> rows(static_cast<std::size_t>(count));
    const int workers = std::max(
        1, std::min<int>(static_cast<int>(std::thread::hardware_concurrency()), count));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::mutex error_mutex;
    std::exception_ptr first_error;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < count; i += workers)
                    rows[static_cast<std::size_t>(i)] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
            }
        });
    }
    for (auto& thread : pool)
        thread.join();
    if (first_error)
        std::rethrow_exception(first_error);
    return rows;
}

void validate_sweep(const SweepSpec& spec) {
    if (!(spec.q_start >= 0.0 && spec.q_start <= spec.q_end && spec.q_end <= 1.0))
        throw invalid_input_error("sweep grid must satisfy 0 <= q_start <= q_end <= 1");
    if (spec.q_steps < 1)
        throw invalid_input_error("q_steps must be at least 1");
    if (spec.chain_length < 1)
        throw invalid_input_error("chain length must be at least 1");
}

} // namespace

double grid_point(const SweepSpec& spec, int index) {
    if (spec.q_steps == 1)
        return spec.q_start;
    return spec.q_start +
           (static_cast<double>(index) * (spec.q_end - spec.q_start)) /
               static_cast<double>(spec.q_steps - 1);
}

std::map<int, double> walk_preset(const std::string& name) {
    if (name == "simple")
        return {{-1, 0.5}, {1, 0.5}};
    if (name == "lazy")
        return {{-1, 0.25}, {0, 0.5}, {1, 0.25}};
    if (name == "identity")
        return {{0, 1.0}};
    throw invalid_input_error("unknown walk preset: " + name);
}

std::map<int, double> parse_hopping(const std::string& text) {
    std::map<int, double> hopping;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw invalid_input_error("hopping entry '" + item + "' is not offset:prob");
        try {
            std::size_t used = 0;
            const int offset = std::stoi(item.substr(0, colon), &used);
            if (used != colon)
                throw invalid_input_error("bad hopping offset in '" + item + "'");
            const double prob = std::stod(item.substr(colon + 1), &used);
            if (colon + 1 + used != item.size())
                throw invalid_input_error("bad hopping probability in '" + item + "'");
            if (!hopping.emplace(offset, prob).second)
                throw invalid_input_error("duplicate hopping offset in '" + text + "'");
        } catch (const invalid_input_error&) {
            throw;
        } catch (const std::exception&) {
            throw invalid_input_error("cannot parse hopping entry '" + item + "'");
        }
    }
    if (hopping.empty())
        throw invalid_input_error("hopping law is empty");
    return hopping;
}

std::pair<std::int64_t, std::int64_t> parse_support(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw invalid_input_error("support '" + text + "' is not LO:HI");
    try {
        const std::int64_t lo = std::stoll(text.substr(0, colon));
        const std::int64_t hi = std::stoll(text.substr(colon + 1));
        if (lo > hi)
            throw invalid_input_error("support interval '" + text + "' is empty");
        return {lo, hi};
    } catch (const invalid_input_error&) {
        throw;
    } catch (const std::exception&) {
        throw invalid_input_error("cannot parse support interval '" + text + "'");
    }
}

void cmd_entropy(const SweepSpec& spec) {
    validate_sweep(spec);
    struct Row {
        double q = 0.0, lambda_plus = 0.0, lambda_minus = 0.0, entropy = 0.0;
    };
    const std::vector<Row> rows = evaluate_grid<Row>(spec.q_steps, [&](int i) {
        const double q = grid_point(spec, i);
        const auto [kernel, init] = kernel_from_symmetric(SymmetricChannel(q));
        const SpectralSummary summary =
            von_neumann_entropy(sigma_matrix(kernel, init, spec.chain_length), spec.log_base);
        return Row{q, summary.eigenvalues[0], summary.eigenvalues[1], summary.entropy};
    });

    std::string body = "q,lambda_plus,lambda_minus,entropy,N\n";
    for (const Row& row : rows) {
        body += fmt17(row.q) + "," + fmt17(row.lambda_plus) + "," + fmt17(row.lambda_minus) +
                "," + fmt17(row.entropy) + "," + std::to_string(spec.chain_length) + "\n";
    }
    write_text(spec.out_path, body);
}

void cmd_ppt(const SweepSpec& spec) {
    validate_sweep(spec);
    struct Row {
        double q = 0.0, witness = 0.0, min_eig = 0.0;
        Verdict verdict = Verdict::separable;
    };
    const std::vector<Row> rows = evaluate_grid<Row>(spec.q_steps, [&](int i) {
        const double q = grid_point(spec, i);
        const PptReport report = ppt_test(q, spec.chain_length);
        return Row{q, report.witness_value.value(), report.min_eigenvalue_pt, report.verdict};
    });

    std::string body = "q,witness_value,min_pt_eigenvalue,verdict\n";
    for (const Row& row : rows) {
        body += fmt17(row.q) + "," + fmt17(row.witness) + "," + fmt17(row.min_eig) + "," +
                to_string(row.verdict) + "\n";
    }
    write_text(spec.out_path, body);
}

void cmd_walk(const WalkSpec& spec) {
    if (spec.support_lo > spec.support_hi)
        throw invalid_input_error("walk support interval is empty");
    const LatticeWalkKernel kernel(spec.hopping);
    const auto width = spec.support_hi - spec.support_lo + 1;
    Eigen::VectorXd probs =
        Eigen::VectorXd::Constant(width, 1.0 / static_cast<double>(width));
    const WalkState initial = initial_walk_state(spec.support_lo, std::move(probs));
    const std::vector<WalkProfileRow> rows =
        walk_entropy_profile(kernel, initial, spec.max_steps, spec.log_base);

    std::string body = "N,support_size,entropy,bound,density\n";
    for (const WalkProfileRow& row : rows) {
        body += std::to_string(row.steps) + "," + std::to_string(row.support_size) + "," +
                fmt17(row.entropy) + "," + fmt17(row.bound) + "," + fmt17(row.density) + "\n";
    }
    write_text(spec.out_path, body);
}

void cmd_build(const BuildSpec& spec) {
    if (spec.object != "rho" && spec.object != "sigma")
        throw invalid_input_error("buildable objects are 'rho' and 'sigma', got '" +
                                  spec.object + "'");
    if (spec.chain_length < 1)
        throw invalid_input_error("chain length must be at least 1");
    if (spec.kernel_path.empty() == !spec.stay_probability.has_value())
        throw invalid_input_error(
            "exactly one of a model file and a channel parameter must be given");

    const auto [kernel, init] = spec.kernel_path.empty()
                                    ? kernel_from_symmetric(SymmetricChannel(*spec.stay_probability))
                                    : [&] {
                                          KernelFile file = load_kernel_file(spec.kernel_path);
                                          return std::pair(file.kernel, file.init);
                                      }();
    const DensityMatrix matrix = spec.object == "rho"
                                     ? rho_n(kernel, init, spec.chain_length)
                                     : sigma_matrix(kernel, init, spec.chain_length);

    std::string body = "dim " + std::to_string(matrix.dim()) + "\n";
    for (Eigen::Index r = 0; r < matrix.dim(); ++r) {
        for (Eigen::Index c = 0; c < matrix.dim(); ++c) {
            if (c > 0)
                body += ' ';
            body += fmt17(matrix.matrix()(r, c));
        }
        body += '\n';
    }
    write_text(spec.out_path, body);
}

namespace {

/// Collects [PASS]/[FAIL] lines; a check passes iff residual <= tolerance.
class Suite {
public:
    explicit Suite(std::ostream& out) : out_(out) {}

    void check(const std::string& name, double residual, double tolerance) {
        const bool ok = residual <= tolerance;
        all_ = all_ && ok;
        out_ << (ok ? "[PASS] " : "[FAIL] ") << name << "  (residual " << fmt_sci(residual)
             << ", tolerance " << fmt_sci(tolerance) << ")\n";
    }

    bool all_passed() const { return all_; }

private:
    std::ostream& out_;
    bool all_ = true;
};

struct RandomModel {
    TransitionKernel kernel;
    InitialDistribution init;
};

/// Row-stochastic kernel with uniform entries, optionally sparsified, paired
/// with a uniform, random, or stationary initial law.
RandomModel random_model(std::mt19937_64& rng, int alphabet, bool allow_zeros) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Eigen::MatrixXd rows(alphabet, alphabet);
    for (int r = 0; r < alphabet; ++r) {
        double total = 0.0;
        for (int c = 0; c < alphabet; ++c) {
            double w = unit(rng) + 1e-3;
            if (allow_zeros && unit(rng) < 0.3)
                w = 0.0;
            rows(r, c) = w;
            total += w;
        }
        if (total == 0.0) {
            rows(r, static_cast<int>(rng() % static_cast<unsigned>(alphabet))) = 1.0;
            total = 1.0;
        }
        rows.row(r) /= total;
    }
    TransitionKernel kernel(rows);

    const int variant = static_cast<int>(rng() % 3);
    if (variant == 1) {
        Eigen::VectorXd probs(alphabet);
        for (int i = 0; i < alphabet; ++i)
            probs(i) = unit(rng) + 1e-3;
        probs /= probs.sum();
        return {kernel, InitialDistribution(probs)};
    }
    if (variant == 2) {
        try {
            return {kernel, stationary_distribution(kernel)};
        } catch (const numerical_error&) {
            // reducible or periodic draw: fall through to the uniform law
        }
    }
    Eigen::VectorXd uniform =
        Eigen::VectorXd::Constant(alphabet, 1.0 / static_cast<double>(alphabet));
    return {kernel, InitialDistribution(uniform)};
}

/// Sorted-descending spectra of the brute-force reduced state and of the
/// boundary matrix; returns the largest gap, padding the short spectrum with
/// zeros.
double schmidt_residual(const TransitionKernel& kernel, const InitialDistribution& init,
                        int chain_length) {
    const SpectralSummary brute = von_neumann_entropy(rho_n(kernel, init, chain_length));
    const SpectralSummary fast =
        von_neumann_entropy(sigma_matrix(kernel, init, chain_length));
    double residual = 0.0;
    const std::size_t n = std::max(brute.eigenvalues.size(), fast.eigenvalues.size());
    for (std::size_t k = 0; k < n; ++k) {
        const double a = k < brute.eigenvalues.size() ? brute.eigenvalues[k] : 0.0;
        const double b = k < fast.eigenvalues.size() ? fast.eigenvalues[k] : 0.0;
        residual = std::max(residual, std::abs(a - b));
    }
    return residual;
}

/// Max entrywise gap between diag(rho_N) and the classical path law.
double classical_diagonal_residual(const TransitionKernel& kernel,
                                   const InitialDistribution& init, int chain_length) {
    const DensityMatrix rho = rho_n(kernel, init, chain_length);
    const int d = kernel.alphabet_size();
    const int sites = chain_length + 1;
    double residual = 0.0;
    std::vector<int> digits(static_cast<std::size_t>(sites), 0);
    for (Eigen::Index idx = 0; idx < rho.dim(); ++idx) {
        Eigen::Index rest = idx;
        for (int s = sites - 1; s >= 0; --s) {
            digits[static_cast<std::size_t>(s)] = static_cast<int>(rest % d);
            rest /= d;
        }
        double prob = init(digits[0]);
        for (int s = 1; s < sites; ++s)
            prob *= kernel(digits[static_cast<std::size_t>(s - 1)],
                           digits[static_cast<std::size_t>(s)]);
        residual = std::max(residual, std::abs(rho.matrix()(idx, idx) - prob));
    }
    return residual;
}

/// Reduced state built back from the closed-form eigensystem, compared
/// entrywise with the brute-force reduction.
double eigensystem_residual(double q, int chain_length) {
    const auto [kernel, init] = kernel_from_symmetric(SymmetricChannel(q));
    const DensityMatrix rho = rho_n(kernel, init, chain_length);
    const SymmetricEigensystem eigen = closed_form_eigensystem(q, chain_length);
    Eigen::MatrixXd rebuilt = eigen.spectrum.lambda_plus *
                              (eigen.psi_plus.amplitudes() *
                               eigen.psi_plus.amplitudes().transpose());
    if (eigen.psi_minus)
        rebuilt += eigen.spectrum.lambda_minus *
                   (eigen.psi_minus->amplitudes() * eigen.psi_minus->amplitudes().transpose());
    return (rebuilt - rho.matrix()).cwiseAbs().maxCoeff();
}

/// Embeds the walk in a finite alphabet on a window wide enough that no mass
/// reaches the patched boundary rows, then compares boundary matrices.
double walk_embedding_residual(const LatticeWalkKernel& hop, const WalkState& start,
                               int steps) {
    const std::int64_t pad = static_cast<std::int64_t>(steps) + 2;
    const std::int64_t window_lo = start.support_lo + std::min<std::int64_t>(0, pad * hop.min_offset());
    const std::int64_t window_hi = start.support_hi() + std::max<std::int64_t>(0, pad * hop.max_offset());
    const int m = static_cast<int>(window_hi - window_lo + 1);

    Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(m, m);
    for (int r = 0; r < m; ++r) {
        double leak = 0.0;
        for (const auto& [offset, prob] : hop.hopping()) {
            const std::int64_t target = window_lo + r + offset;
            if (target < window_lo || target > window_hi)
                leak += prob;
            else
                rows(r, static_cast<int>(target - window_lo)) += prob;
        }
        rows(r, r) += leak; // edge patch; never reached from the initial law
    }
    Eigen::VectorXd probs = Eigen::VectorXd::Zero(m);
    for (Eigen::Index i = 0; i < start.marginal.size(); ++i)
        probs(static_cast<int>(start.support_lo + i - window_lo)) = start.marginal(i);
    const TransitionKernel kernel(rows);
    const InitialDistribution init(probs);
    const DensityMatrix embedded = sigma_matrix(kernel, init, steps);

    WalkState state = start;
    for (int n = 0; n < steps; ++n)
        state = step(state, hop);
    const DensityMatrix direct = walk_sigma(state, hop);

    Eigen::MatrixXd lifted = Eigen::MatrixXd::Zero(m, m);
    const std::int64_t direct_lo = state.support_lo + hop.min_offset();
    const Eigen::Index at = static_cast<Eigen::Index>(direct_lo - window_lo);
    lifted.block(at, at, direct.dim(), direct.dim()) = direct.matrix();
    return (lifted - embedded.matrix()).cwiseAbs().maxCoeff();
}

/// Entrywise gap between rho_N of a deterministic channel (q = 1 or q = 0)
/// and the even mixture of its two surviving path strings.
double frozen_channel_residual(double q, int chain_length) {
    const auto [kernel, init] = kernel_from_symmetric(SymmetricChannel(q));
    const DensityMatrix rho = rho_n(kernel, init, chain_length);
    const int sites = chain_length + 1;
    Eigen::Index first = 0, second = 0;
    for (int s = 0; s < sites; ++s) {
        const int bit_first = q == 1.0 ? 0 : s % 2;
        first = first * 2 + bit_first;
        second = second * 2 + (1 - bit_first);
    }
    Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(rho.dim(), rho.dim());
    expected(first, first) = 0.5;
    expected(second, second) = 0.5;
    return (rho.matrix() - expected).cwiseAbs().maxCoeff();
}

} // namespace

bool cmd_verify(const VerifySpec& spec, std::ostream& report) {
    if (spec.max_chain_length < 1)
        throw invalid_input_error("verification budget must allow at least one chain step");

    Suite suite(report);
    const std::vector<double> q_grid = {0.05, 0.2, 0.35, 0.5, 0.65, 0.8, 0.95};
    const int n_max = spec.max_chain_length;

    {
        double residual = 0.0;
        for (double q : q_grid) {
            const auto [kernel, init] = kernel_from_symmetric(SymmetricChannel(q));
            for (int n = 1; n <= n_max; ++n)
                residual = std::max(residual, schmidt_residual(kernel, init, n));
        }
        suite.check("boundary matrix carries the brute-force reduced spectrum (binary channel)",
                    residual, 1e-9);
    }
    {
        double residual = 0.0;
        for (double q : q_grid) {
            const auto [kernel, init] = kernel_from_symmetric(SymmetricChannel(q));
            const double split = std::sqrt(q * (1.0 - q));
            for (int n = 1; n <= n_max; ++n) {
                const SpectralSummary summary =
                    von_neumann_entropy(sigma_matrix(kernel, init, n));
                residual = std::max(residual,
                                    std::abs(summary.eigenvalues[0] - (0.5 + split)));
                residual = std::max(residual,
                                    std::abs(summary.eigenvalues[1] - (0.5 - split)));
            }
        }
        suite.check("reduced spectrum equals 1/2 +- sqrt(q(1-q)) (binary channel)", residual,
                    1e-9);
    }
    {
        double spread = 0.0;
        for (double q : q_grid) {
            const auto [kernel, init] = kernel_from_symmetric(SymmetricChannel(q));
            double lo = 2.0, hi = -1.0;
            for (int n = 1; n <= n_max; ++n) {
                const double s =
                    von_neumann_entropy(sigma_matrix(kernel, init, n)).entropy;
                lo = std::min(lo, s);
                hi = std::max(hi, s);
            }
            spread = std::max(spread, hi - lo);
        }
        suite.check("entanglement entropy is flat in the chain length (binary channel)",
                    spread, 1e-9);
    }
    {
        double residual = 0.0;
        for (double q : q_grid)
            for (int n = 1; n <= std::min(n_max, 6); ++n)
                residual = std::max(residual, eigensystem_residual(q, n));
        suite.check("closed-form eigensystem reassembles the reduced state (binary channel)",
                    residual, 1e-9);
    }
    {
        std::mt19937_64 rng(spec.seed);
        double entropy_excess = -std::numeric_limits<double>::infinity();
        int rank_excess = 0;
        double schmidt_gap = 0.0;
        double diagonal_gap = 0.0;
        for (int draw = 0; draw < 12; ++draw) {
            const int alphabet = 2 + static_cast<int>(rng() % 3);
            const RandomModel model = random_model(rng, alphabet, draw % 2 == 0);
            const int n = std::min(n_max, alphabet == 2 ? 5 : 4);
            const SpectralSummary summary =
                von_neumann_entropy(rho_n(model.kernel, model.init, n));
            entropy_excess = std::max(
                entropy_excess, summary.entropy - std::log2(static_cast<double>(alphabet)));
            rank_excess = std::max(rank_excess, summary.rank() - alphabet);
            schmidt_gap = std::max(schmidt_gap, schmidt_residual(model.kernel, model.init, n));
            diagonal_gap = std::max(diagonal_gap,
                                    classical_diagonal_residual(model.kernel, model.init,
                                                                std::min(n, 4)));
        }
        suite.check("reduced-state entropy stays below log d (random kernels)",
                    entropy_excess, 1e-9);
        suite.check("reduced-state rank stays at or below d (random kernels)",
                    static_cast<double>(rank_excess), 0.0);
        suite.check("boundary matrix carries the brute-force reduced spectrum (random kernels)",
                    schmidt_gap, 1e-9);
        suite.check("diagonal of the reduced state is the classical path law (random kernels)",
                    diagonal_gap, 1e-13);
    }
    {
        double residual = 0.0;
        for (double q : q_grid) {
            const double split = std::sqrt(q * (1.0 - q));
            const double expected = 2.0 * split * (split - 0.5);
            for (int n = 1; n <= n_max; ++n) {
                const PptReport ppt = ppt_test(q, n);
                residual = std::max(residual, std::abs(*ppt.witness_value - expected));
            }
        }
        suite.check("partial-transpose witness matches 2 sqrt(q(1-q)) (sqrt(q(1-q)) - 1/2)",
                    residual, 1e-10);
    }
    {
        int disagreements = 0;
        for (double q : q_grid) {
            for (int n = 1; n <= std::min(n_max, 5); ++n) {
                const PptReport effective = ppt_test(q, n);
                const auto [kernel, init] = kernel_from_symmetric(SymmetricChannel(q));
                const PptReport full = generic_ppt(rho_n(kernel, init, n + 1), n + 1);
                const bool effective_negative = effective.verdict == Verdict::entangled;
                const bool full_negative = full.min_eigenvalue_pt < -tol::psd;
                if (effective_negative != full_negative)
                    ++disagreements;
            }
        }
        suite.check("effective and full-state partial-transpose signs agree (binary channel)",
                    static_cast<double>(disagreements), 0.0);
    }
    {
        double residual = 0.0;
        for (double q : q_grid) {
            const auto [kernel, init] = kernel_from_symmetric(SymmetricChannel(q));
            const double expected =
                q == 0.0 || q == 1.0
                    ? 0.0
                    : -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
            residual = std::max(
                residual, std::abs(shannon_entropy_density(kernel, init) - expected));
        }
        suite.check("per-site entropy rate matches the binary entropy of q", residual, 1e-12);
    }
    {
        double residual = 0.0;
        for (int n = 1; n <= n_max; ++n) {
            residual = std::max(residual, frozen_channel_residual(1.0, n));
            if (n % 2 == 1)
                residual = std::max(residual, frozen_channel_residual(0.0, n));
        }
        suite.check("deterministic channels freeze onto their two path strings", residual,
                    1e-12);
    }
    {
        double excess = -std::numeric_limits<double>::infinity();
        for (const char* preset : {"simple", "lazy"}) {
            const LatticeWalkKernel hop(walk_preset(preset));
            const auto rows = walk_entropy_profile(hop, delta_walk_state(0), 60);
            for (const WalkProfileRow& row : rows)
                excess = std::max(excess, row.entropy - row.bound);
        }
        suite.check("walk entropy stays below the support-growth bound", excess, 1e-9);
    }
    {
        double residual = 0.0;
        for (const char* preset : {"simple", "lazy"}) {
            const LatticeWalkKernel hop(walk_preset(preset));
            for (int n = 1; n <= std::min(n_max, 5); ++n)
                residual = std::max(residual,
                                    walk_embedding_residual(hop, delta_walk_state(0), n));
        }
        suite.check("walk boundary matrix matches a finite-alphabet embedding", residual,
                    1e-10);
    }

    if (!spec.kernel_path.empty()) {
        const KernelFile file = load_kernel_file(spec.kernel_path);
        const int d = file.kernel.alphabet_size();
        int n = 1;
        while (std::pow(static_cast<double>(d), n + 3) <= budget::max_density_dim &&
               n + 1 <= n_max)
            ++n;
        double schmidt_gap = 0.0;
        double entropy_excess = -std::numeric_limits<double>::infinity();
        for (int length = 1; length <= n; ++length) {
            schmidt_gap =
                std::max(schmidt_gap, schmidt_residual(file.kernel, file.init, length));
            entropy_excess = std::max(
                entropy_excess,
                von_neumann_entropy(rho_n(file.kernel, file.init, length)).entropy -
                    std::log2(static_cast<double>(d)));
        }
        suite.check("user model: boundary matrix carries the reduced spectrum", schmidt_gap,
                    1e-9);
        suite.check("user model: reduced-state entropy stays below log d", entropy_excess,
                    1e-9);
    }

    report << (suite.all_passed() ? "all checks passed\n" : "one or more checks FAILED\n");
    return suite.all_passed();
}

} // namespace emc
