#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "emc/spectral.hpp"

namespace emc {

/// Parameter sweep over the binary symmetric channel. The grid is
/// q_i = q_start + i * (q_end - q_start) / (q_steps - 1), a single point when
/// q_steps == 1.
struct SweepSpec {
    double q_start = 0.0;
    double q_end = 1.0;
    int q_steps = 21;
    int chain_length = 8;
    LogBase log_base = LogBase::two;
    std::string out_path; // empty writes to stdout
};

double grid_point(const SweepSpec& spec, int index);

struct WalkSpec {
    std::map<int, double> hopping;
    /// Uniform initial law on [support_lo, support_hi].
    std::int64_t support_lo = 0;
    std::int64_t support_hi = 0;
    int max_steps = 200;
    LogBase log_base = LogBase::two;
    std::string out_path;
};

struct BuildSpec {
    std::string object = "rho"; // "rho" or "sigma"
    std::optional<double> stay_probability;
    std::string kernel_path;
    int chain_length = 4;
    std::string out_path;
};

struct VerifySpec {
    int max_chain_length = 6;
    std::uint64_t seed = 2026;
    /// Optional model file folded into the randomized checks.
    std::string kernel_path;
};

/// "simple" (+-1 equally), "lazy" (stay 1/2, +-1 quarter each), "identity".
std::map<int, double> walk_preset(const std::string& name);

/// "offset:prob,offset:prob,..." with integer offsets.
std::map<int, double> parse_hopping(const std::string& text);

/// "LO:HI" inclusive integer interval, LO <= HI.
std::pair<std::int64_t, std::int64_t> parse_support(const std::string& text);

/// CSV columns q, lambda_plus, lambda_minus, entropy, N: the two eigenvalues
/// of the boundary matrix and their entropy at every grid point.
void cmd_entropy(const SweepSpec& spec);

/// CSV columns q, witness_value, min_pt_eigenvalue, verdict from the
/// partial-transpose test of the effective two-qubit state.
void cmd_ppt(const SweepSpec& spec);

/// CSV columns N, support_size, entropy, bound, density for a lattice walk.
void cmd_walk(const WalkSpec& spec);

/// Dumps rho (reduced chain state) or sigma (boundary matrix) as
/// "dim d" followed by d whitespace-separated rows.
void cmd_build(const BuildSpec& spec);

/// Runs the invariant suite, one [PASS]/[FAIL] line with the measured
/// residual per check. Returns true iff every check passed.
bool cmd_verify(const VerifySpec& spec, std::ostream& report);

} // namespace emc
