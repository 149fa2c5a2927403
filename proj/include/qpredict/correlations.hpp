#pragma once

#include "qpredict/twoqubit_state.hpp"

namespace qpredict {

// Steering, entanglement and Bell-nonlocality indicators of one state.
struct CorrelationReport {
  double f2 = 0.0;
  double f3 = 0.0;
  double f_haar = 0.0;
  bool steerable_2 = false;
  bool steerable_3 = false;
  bool steerable_haar = false;
  // f_haar witnesses steering only on the Bell-diagonal family.
  bool haar_applicable = false;
  double ppt_min_eig = 0.0;
  bool entangled = false;
  double horodecki_m = 0.0;
  bool nonlocal = false;
};

/// Two-setting CJWR value sqrt(s1^2 + s2^2); steerable when > 1.
double f2_cjwr(const FanoState& s);

/// Three-setting CJWR value |C|_F; steerable when > 1.
double f3_cjwr(const FanoState& s);

/// int dOmega sqrt(n.C C^T n) = 4 pi s1 R_G(s2^2/s1^2, s3^2/s1^2, 1); steerable when > 2 pi.
double f_haar(const FanoState& s);

/// True for states with vanishing Bloch vectors (Bell-diagonal up to local rotations).
bool is_bell_diagonal_type(const FanoState& s, double tol = 1e-12);

/// |c1| + |c2| + |c3| <= 1 (+1e-12). Throws NonPhysical outside the tetrahedron.
bool is_bd_separable(double c1, double c2, double c3);

/// Smallest eigenvalue of the partial transpose on B; negative iff entangled.
double ppt_min_eigenvalue(const FanoState& s);

/// Sum of the two largest eigenvalues of C^T C; the CHSH inequality can be
/// violated iff this exceeds 1.
double horodecki_m(const FanoState& s);

CorrelationReport analyze_correlations(const FanoState& s);

}  // namespace qpredict
