#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "qpredict/linalg.hpp"

namespace qpredict {

// Bloch vector of a single-qubit reduced state.
using BlochVector = Vec3;

// 3x3 real correlation matrix, C_ij = Tr[(sigma_i (x) sigma_j) rho].
using CorrMatrix = Mat3;

// 4x4 complex two-qubit density matrix in the computational basis |00>,|01>,|10>,|11>.
using DensityMatrix4 = Mat4c;

/// Unit 3-vector selecting the sharp observable a . sigma.
class MeasurementDirection {
 public:
  MeasurementDirection() : v_(Vec3::UnitZ()) {}

  /// Throws InvalidDirection unless |v| = 1 within 1e-12.
  explicit MeasurementDirection(const Vec3& v);
  MeasurementDirection(double x, double y, double z) : MeasurementDirection(Vec3(x, y, z)) {}

  /// Rescales any nonzero finite vector onto the unit sphere.
  static MeasurementDirection normalized(const Vec3& v);

  static MeasurementDirection x() { return MeasurementDirection(Vec3::UnitX()); }
  static MeasurementDirection y() { return MeasurementDirection(Vec3::UnitY()); }
  static MeasurementDirection z() { return MeasurementDirection(Vec3::UnitZ()); }

  const Vec3& vec() const { return v_; }
  operator const Vec3&() const { return v_; }
  double dot(const Vec3& w) const { return v_.dot(w); }

 private:
  Vec3 v_;
};

// Outcome of the positivity checks on Fano parameters.
//
// `conditions` holds the three polynomial positivity conditions, scaled so
// that each is a positive multiple of an elementary symmetric polynomial of the
// eigenvalues of rho:
//   [0] 4 - |r|^2                                      (= 32 e2)
//   [1] 2(t_A.C t_B - det C) - (|r|^2 - 2)             (= 16 e3)
//   [2] (|r|^2 - 2)^2 + 8(t_A.C t_B - det C) + 8 t_A.cof(C) t_B
//       - 4(|t_A|^2|t_B|^2 + |C^T t_A|^2 + |C t_B|^2 + |cof C|^2)   (= 256 det rho)
// with |r|^2 = 1 + |t_A|^2 + |t_B|^2 + |C|^2.
struct ValidityReport {
  std::array<double, 3> conditions{};
  double min_eigenvalue = 0.0;
  bool conditions_hold = false;
  bool eigenvalues_nonnegative = false;
  bool valid = false;
  bool criteria_agree = false;
};

inline constexpr double kValidityTol = 1e-10;

/// Two-qubit state in Fano form (t_A, t_B, C). Always physical: construction
/// throws NonPhysical when validate() rejects the parameters.
class FanoState {
 public:
  FanoState(const BlochVector& t_a, const BlochVector& t_b, const CorrMatrix& c);

  const BlochVector& t_a() const { return t_a_; }
  const BlochVector& t_b() const { return t_b_; }
  const CorrMatrix& c() const { return c_; }

  static FanoState maximally_mixed();

 private:
  BlochVector t_a_;
  BlochVector t_b_;
  CorrMatrix c_;
};

/// rho = (1/4)[I + t_A.sigma (x) I + I (x) t_B.sigma + sum_ij C_ij sigma_i (x) sigma_j].
DensityMatrix4 density_matrix(const FanoState& s);
DensityMatrix4 density_matrix(const BlochVector& t_a, const BlochVector& t_b, const CorrMatrix& c);

/// Pauli expectation values of rho. Throws NonPhysical if rho is not
/// Hermitian, not unit-trace (1e-10) or has an eigenvalue below -1e-10.
FanoState from_density_matrix(const DensityMatrix4& rho);

/// Fano parameters of an arbitrary Hermitian matrix without any physicality check.
struct FanoParams {
  BlochVector t_a;
  BlochVector t_b;
  CorrMatrix c;
};
FanoParams fano_params(const DensityMatrix4& rho);

ValidityReport validate(const BlochVector& t_a, const BlochVector& t_b, const CorrMatrix& c);

// Bell correlation matrices: Phi+ diag(1,-1,1), Phi- diag(-1,1,1),
// Psi+ diag(1,1,-1), Psi- diag(-1,-1,-1); index 1..4 in that order.
CorrMatrix bell_correlation(int k);

/// The four eigenvalues of a Bell-diagonal state, in Phi+, Phi-, Psi+, Psi- order.
std::array<double, 4> bell_diagonal_weights(double c1, double c2, double c3);

/// t_A = t_B = 0, C = diag(c1, c2, c3). Throws NonPhysical outside the tetrahedron.
FanoState bell_diagonal(double c1, double c2, double c3);

/// rho = p0 |n_a><n_a| (x) rho_B(tb0) + (1 - p0) |-n_a><-n_a| (x) rho_B(tb1).
FanoState classical_quantum(double p0, const MeasurementDirection& n_a, const BlochVector& tb0,
                            const BlochVector& tb1);

/// Descending singular values of C.
Vec3 singular_values(const CorrMatrix& c);

/// t_A -> R_A t_A, t_B -> R_B t_B, C -> R_A C R_B^T. Throws InvalidRotation.
FanoState local_rotate(const FanoState& s, const Mat3& r_a, const Mat3& r_b);

/// Ginibre construction rho = G G^dagger / Tr(G G^dagger), G with iid standard
/// normal real and imaginary parts, drawn from mt19937_64(seed).
FanoState random_state(std::uint64_t seed);

/// Uniformly distributed direction (normalized Gaussian triple).
MeasurementDirection random_direction(std::mt19937_64& rng);

}  // namespace qpredict
