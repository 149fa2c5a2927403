#pragma once

#include "qpredict/twoqubit_state.hpp"

namespace qpredict {

// Qubit channel in Bloch form: v -> A v + b.
struct AffineChannel {
  Mat3 a = Mat3::Identity();
  BlochVector b = BlochVector::Zero();

  BlochVector apply(const BlochVector& v) const { return a * v + b; }
  static AffineChannel identity() { return {}; }
};

/// Damping towards |0>: A = diag(sqrt(1-p), sqrt(1-p), 1-p), b = (0, 0, p).
AffineChannel amplitude_damping(double p);

/// (E (x) F)(|Phi_k><Phi_k|): t_A = b_E, t_B = b_F, C = b_E b_F^T + A_E w_k A_F^T.
/// Throws NonPhysical if the result is not a state.
FanoState apply_to_bell(const AffineChannel& e, const AffineChannel& f, int k);

/// Phi+ under local amplitude damping with parameters p_a, p_b.
FanoState adc_state(double p_a, double p_b);

}  // namespace qpredict
