#pragma once

#include "qpredict/twoqubit_state.hpp"

namespace qpredict {

// Leading-order top-antitop spin correlations in the helicity basis (k, r, n).
// The matrix index order is k = 0, r = 1, n = 2.

enum class Process { QQbar, GG };

// Normalized correlation coefficients of one production channel.
struct HelicityCorr {
  double a_tilde = 1.0;  // unnormalized cross-section weight
  double c_kk = 0.0;
  double c_rr = 0.0;
  double c_nn = 0.0;
  double c_kr = 0.0;

  CorrMatrix matrix() const;
};

struct PhasePoint {
  double beta = 0.0;   // pair velocity, [0, 1)
  double theta = 0.0;  // production angle in radians, (0, pi)
  double w_gg = 0.0;   // gluon-fusion fraction, [0, 1]
};

/// Throws DomainError outside the phase-space ranges and, for gg, at the
/// collinear singularity 1 - beta^2 cos^2 theta <= 1e-12.
HelicityCorr process_corr(Process process, double beta, double theta);

/// w_gg C^gg + (1 - w_gg) C^qq, entrywise.
CorrMatrix mixture_corr(const PhasePoint& p);

struct CpmEigen {
  double c_plus = 0.0;
  double c_nn = 0.0;
  double c_minus = 0.0;
};

/// Eigenvalues of the (k, r) block: (C_kk + C_rr)/2 +- sqrt(((C_kk - C_rr)/2)^2 + C_kr^2).
CpmEigen cpm_eigen(const HelicityCorr& h);

FanoState ttbar_state(const PhasePoint& p);

/// Bell-diagonal state diag(c_perp, c_perp, c_z) of the angle-integrated sample.
FanoState integrated_state(double c_perp, double c_z);

}  // namespace qpredict
