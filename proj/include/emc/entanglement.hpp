#pragma once

#include <optional>

#include "emc/density_matrix.hpp"
#include "emc/statevec.hpp"

namespace emc {

/// The two possibly nonzero eigenvalues of the symmetric-channel reduced
/// states: 1/2 +- sqrt(q(1-q)).
struct ClosedFormSpectrum {
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
};

ClosedFormSpectrum symmetric_spectrum(double stay_probability);

struct SymmetricEigensystem {
    ClosedFormSpectrum spectrum;
    PureStateVector psi_plus;
    /// Absent at q = 1/2, where lambda_minus vanishes and the reduced state
    /// is pure.
    std::optional<PureStateVector> psi_minus;
};

/// Eigenvectors of the reduced chain state on chain_length + 1 sites, built
/// from the flip-count closed form: a string with x flips carries weight
/// sqrt(1-q)^x sqrt(q)^(N-x) times (sqrt(P(last->0)) +- sqrt(P(last->1))).
SymmetricEigensystem closed_form_eigensystem(double stay_probability, int chain_length);

/// Normalized but mutually non-orthogonal pair spanning the nonzero
/// eigenspace: phi_b has amplitude sqrt(P(i_0->i_1) ... P(i_N->b)).
struct PhiBasis {
    PureStateVector phi0;
    PureStateVector phi1;
    /// <phi0|phi1>; equals lambda_plus - lambda_minus.
    double overlap = 0.0;
};

PhiBasis phi_basis(double stay_probability, int chain_length);

/// The chain state on one more site, compressed to the 2 (x) 2 space spanned
/// by {phi0, phi1} (x) {last site}. The span is orthonormalized symmetrically
/// so the 0<->1 channel symmetry is preserved; at degenerate q the phi pair
/// is already orthogonal (q in {0,1}) or collapses to one vector (q = 1/2).
DensityMatrix effective_two_qubit_state(double stay_probability, int chain_length);

enum class Verdict { separable, entangled, inconclusive_if_ppt };

const char* to_string(Verdict verdict);

struct PptReport {
    double min_eigenvalue_pt = 0.0;
    Verdict verdict = Verdict::separable;
    /// <phi|rho^PT|phi> for the witness phi = (phi1 (x) |0> - phi0 (x) |1>)/sqrt(2);
    /// only produced by the symmetric-channel test.
    std::optional<double> witness_value;
    /// Minimal PT eigenvalue fell in [-tol::psd, 0): separable by threshold,
    /// but within rounding of the boundary.
    bool near_boundary = false;
};

/// Partial-transpose test of the effective two-qubit state. Conclusive both
/// ways (2 (x) 2): entangled iff the partial transpose has an eigenvalue
/// below -tol::psd.
PptReport ppt_test(double stay_probability, int chain_length);

/// Partial transpose over the factors at positions >= cut, for any density
/// matrix with a declared factorization. A negative eigenvalue always
/// certifies entanglement; a positive partial transpose is conclusive only
/// up to 2 (x) 3, and is otherwise reported as inconclusive.
PptReport generic_ppt(const DensityMatrix& rho, int cut);

} // namespace emc
