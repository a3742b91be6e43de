#include <iostream>
#include <string>
#include <tuple>

#include "CLI11.hpp"

#include "emc/cli.hpp"
#include "emc/errors.hpp"

namespace {

emc::LogBase parse_log_base(const std::string& text) {
    if (text == "2")
        return emc::LogBase::two;
    if (text == "e")
        return emc::LogBase::natural;
    throw emc::invalid_input_error("log base must be 2 or e, got '" + text + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entangled Markov chain toolkit: spectra, entropies, and separability "
                 "of chain states built from classical transition kernels."};
    app.require_subcommand(1);

    emc::SweepSpec sweep;
    std::string log_base_text = "2";

    CLI::App* entropy = app.add_subcommand(
        "entropy", "Sweep q and emit boundary-matrix eigenvalues and entropy as CSV");
    CLI::App* ppt = app.add_subcommand(
        "ppt", "Sweep q and emit the partial-transpose witness, eigenvalue, and verdict");
    for (CLI::App* cmd : {entropy, ppt}) {
        cmd->add_option("--q-start", sweep.q_start, "left edge of the q grid")
            ->capture_default_str();
        cmd->add_option("--q-end", sweep.q_end, "right edge of the q grid")
            ->capture_default_str();
        cmd->add_option("--q-steps", sweep.q_steps, "number of grid points")
            ->capture_default_str();
        cmd->add_option("--sites", sweep.chain_length, "chain length N")
            ->capture_default_str();
        cmd->add_option("--out", sweep.out_path, "output path (default stdout)");
    }
    entropy->add_option("--log-base", log_base_text, "entropy log base, 2 or e")
        ->capture_default_str();

    emc::WalkSpec walk_spec;
    walk_spec.max_steps = 200;
    std::string walk_preset_name = "simple";
    std::string hop_text;
    std::string support_text = "0:0";
    CLI::App* walk = app.add_subcommand(
        "walk", "Entropy profile of a lattice walk against the support-growth bound");
    walk->add_option("--preset", walk_preset_name, "hopping preset: simple, lazy, identity")
        ->capture_default_str();
    walk->add_option("--hop", hop_text,
                     "custom hopping law offset:prob,offset:prob (overrides --preset)");
    walk->add_option("--support", support_text, "initial uniform support LO:HI")
        ->capture_default_str();
    walk->add_option("--sites", walk_spec.max_steps, "largest chain length N")
        ->capture_default_str();
    walk->add_option("--log-base", log_base_text, "entropy log base, 2 or e")
        ->capture_default_str();
    walk->add_option("--out", walk_spec.out_path, "output path (default stdout)");

    emc::BuildSpec build_spec;
    double build_q = 0.0;
    CLI::App* build = app.add_subcommand(
        "build", "Dump the reduced state (rho) or boundary matrix (sigma) as a matrix file");
    build->add_option("--object", build_spec.object, "rho or sigma")->capture_default_str();
    CLI::Option* build_q_opt = build->add_option(
        "--q-start", build_q, "channel parameter q of the binary symmetric kernel");
    build->add_option("--kernel", build_spec.kernel_path,
                      "model file: d, then d kernel rows, then the initial law");
    build->add_option("--sites", build_spec.chain_length, "chain length N")
        ->capture_default_str();
    build->add_option("--out", build_spec.out_path, "output path (default stdout)");

    emc::VerifySpec verify_spec;
    CLI::App* verify = app.add_subcommand(
        "verify", "Run the invariant suite and report each check with its residual");
    verify->add_option("--sites", verify_spec.max_chain_length,
                       "largest chain length exercised")
        ->capture_default_str();
    verify->add_option("--seed", verify_spec.seed, "seed for the random-kernel corpus")
        ->capture_default_str();
    verify->add_option("--kernel", verify_spec.kernel_path,
                       "extra model file folded into the checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (entropy->parsed() || ppt->parsed()) {
            sweep.log_base = parse_log_base(log_base_text);
            if (entropy->parsed())
                emc::cmd_entropy(sweep);
            else
                emc::cmd_ppt(sweep);
            return 0;
        }
        if (walk->parsed()) {
            walk_spec.hopping = hop_text.empty() ? emc::walk_preset(walk_preset_name)
                                                 : emc::parse_hopping(hop_text);
            std::tie(walk_spec.support_lo, walk_spec.support_hi) =
                emc::parse_support(support_text);
            walk_spec.log_base = parse_log_base(log_base_text);
            emc::cmd_walk(walk_spec);
            return 0;
        }
        if (build->parsed()) {
            if (build_q_opt->count() > 0)
                build_spec.stay_probability = build_q;
            emc::cmd_build(build_spec);
            return 0;
        }
        if (verify->parsed())
            return emc::cmd_verify(verify_spec, std::cout) ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
