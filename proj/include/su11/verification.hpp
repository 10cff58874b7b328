#pragma once

#include "su11/lemmas.hpp"
#include "su11/ledger.hpp"
#include "su11/report.hpp"

namespace su11 {

// Individual checks. Each draws from its own seeded substream, so results do
// not depend on which other checks run or in what order.

CheckResult bform_signature_check(const VerificationConfig& cfg);
CheckResult classify_eigensolver_check(const VerificationConfig& cfg);
CheckResult adjoint_invariance_check(const VerificationConfig& cfg);
CheckResult jacobi_check(const VerificationConfig& cfg);
CheckResult sp2_roundtrip_check(const VerificationConfig& cfg);

CheckResult isometry_check(const VerificationConfig& cfg);
CheckResult group_law_check(const VerificationConfig& cfg);
CheckResult fiber_disk_lemma_check(const VerificationConfig& cfg);

CheckResult omega_formula_check(const VerificationConfig& cfg);
CheckResult slice_reduce_check(const VerificationConfig& cfg);
/// 10^4 off-diagonal points classify elliptic-positive; 10^2 diagonal
/// points map to zero.
CheckResult cone_containment_check(const VerificationConfig& cfg);
/// |moment_vector(g p) - adjoint(g, moment_vector(p))| on random (g, p).
CheckResult equivariance_check(const VerificationConfig& cfg);
CheckResult coisotropy_check(const VerificationConfig& cfg);
CheckResult surjectivity_check(const VerificationConfig& cfg);
/// -d/ds rho(e^{-2s} t, -e^{-2s} t) at s = 0 against 8t / (1 - t^2).
CheckResult slice_formula_fd_check(const VerificationConfig& cfg);
/// The eta and zeta components of the potential moment map vanish on the
/// slice.
CheckResult slice_axis_check(const VerificationConfig& cfg);
CheckResult potential_moment_check(const VerificationConfig& cfg);

/// Curve positivity at t = 0.1, ..., 0.9 with |u| = 1e-2 along 8 directions.
CheckResult curve_positivity_sweep(const VerificationConfig& cfg);
/// Minimum Hessian eigenvalue over a 20 x 20 grid of off-diagonal points,
///   z_i = 0.85 (-1 + 2i/19) e^{0.3i},  w_j = 0.85 (-1 + 2j/19) e^{-0.7i}.
CheckResult psh_grid_check(const VerificationConfig& cfg);
/// |d^2 rho / du dv-bar| at points (z, -z) of L.
CheckResult psh_mixed_along_l_check(const VerificationConfig& cfg);

/// KS distance of the uniform Monte-Carlo sample against cdf_quadrature,
/// plus self-distance and split-half consistency, plus the MC mean. KS
/// tolerances hold at 10^6 samples and widen as sqrt(10^6 / n) below that.
std::vector<CheckResult> monte_carlo_checks(const VerificationConfig& cfg);
/// e^{-rho} reweighting against importance-sampled MC, and the bitwise
/// identity for the uniform weight.
std::vector<CheckResult> reweight_checks(const VerificationConfig& cfg);

/// Every check above plus the spectral discrepancy ledger.
VerificationReport run_all(const VerificationConfig& cfg);

}  // namespace su11
