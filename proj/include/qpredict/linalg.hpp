#pragma once

#include <array>

#include <Eigen/Dense>

namespace qpredict {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4c = Eigen::Matrix4cd;

// Eigen-decomposition of a real symmetric 3x3 matrix.
// Eigenvalues are sorted in descending order; column i of `vectors`
// is the unit eigenvector belonging to values[i].
struct SymEigen3 {
  Vec3 values;
  Mat3 vectors;
  int sweeps = 0;
};

/// Cyclic Jacobi iteration, run until the off-diagonal Frobenius norm falls
/// below 1e-14 (relative to the matrix norm) or 100 sweeps have elapsed.
/// Only the upper triangle of `m` is read.
SymEigen3 jacobi_eigen(const Mat3& m);

/// Singular values of a 3x3 matrix, descending and nonnegative. One-sided
/// (Hestenes) Jacobi: columns are rotated pairwise until mutually orthogonal,
/// the column norms are then the singular values. Squared, they are the
/// eigenvalues of m^T m, but small values keep full relative accuracy.
Vec3 singular_values3(const Mat3& m);

/// Cofactor matrix: cof(m)_ij = (-1)^{i+j} det(minor_ij).
Mat3 cofactor(const Mat3& m);

/// Rotation matrix from z-y-z Euler angles, R = Rz(alpha) Ry(beta) Rz(gamma).
Mat3 euler_zyz(double alpha, double beta, double gamma);

/// True iff r is orthogonal with determinant +1, entrywise within `tol`.
bool is_rotation(const Mat3& r, double tol = 1e-12);

// Pauli matrices in the computational basis, index 0 = identity.
const std::array<Eigen::Matrix2cd, 4>& pauli();

}  // namespace qpredict
