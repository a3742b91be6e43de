#pragma once

#include <cstddef>

namespace emc::tol {

// Stochasticity / stationarity checks on probability data.
inline constexpr double stochastic = 1e-12;
// State-vector and density-matrix normalization.
inline constexpr double norm = 1e-10;
// Symmetry of density matrices.
inline constexpr double hermitian = 1e-12;
// Allowed negative excursion of eigenvalues before a matrix counts as non-PSD.
inline constexpr double psd = 1e-10;
// Purity flag: largest eigenvalue >= 1 - purity.
inline constexpr double purity = 1e-9;
// Eigenvalues below this are treated as zero when counting rank.
inline constexpr double rank_cutoff = 1e-12;
// Degenerate-overlap detection for the symmetric-channel basis branches.
inline constexpr double degenerate_overlap = 1e-12;

} // namespace emc::tol

namespace emc::budget {

// Hard cap on state-vector length (amplitudes).
inline constexpr std::size_t max_amplitudes = std::size_t{1} << 26;
// Hard cap on the dimension of any materialized density matrix.
inline constexpr std::size_t max_density_dim = std::size_t{1} << 13;

} // namespace emc::budget
