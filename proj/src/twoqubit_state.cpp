#include "qpredict/twoqubit_state.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "qpredict/errors.hpp"

namespace qpredict {

namespace {

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

const std::array<std::array<Eigen::Matrix4cd, 4>, 4>& pauli_products() {
  static const auto table = [] {
    std::array<std::array<Eigen::Matrix4cd, 4>, 4> t;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t[i][j] = kron(pauli()[i], pauli()[j]);
    return t;
  }();
  return table;
}

double min_eigenvalue(const DensityMatrix4& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

MeasurementDirection::MeasurementDirection(const Vec3& v) : v_(v) {
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "measurement direction must be a unit vector, got norm " << v.norm();
    throw InvalidDirection(msg.str());
  }
}

MeasurementDirection MeasurementDirection::normalized(const Vec3& v) {
  const double n = v.norm();
  if (!std::isfinite(n) || n == 0.0) throw InvalidDirection("cannot normalize a zero vector");
  return MeasurementDirection(v / n);
}

FanoState::FanoState(const BlochVector& t_a, const BlochVector& t_b, const CorrMatrix& c)
    : t_a_(t_a), t_b_(t_b), c_(c) {
  if (!t_a.allFinite() || !t_b.allFinite() || !c.allFinite())
    throw NonPhysical("Fano parameters must be finite");
  const ValidityReport report = validate(t_a, t_b, c);
  if (!report.valid) {
    std::ostringstream msg;
    msg << "Fano parameters do not describe a state (min eigenvalue " << report.min_eigenvalue
        << ")";
    throw NonPhysical(msg.str());
  }
}

FanoState FanoState::maximally_mixed() {
  return FanoState(Vec3::Zero(), Vec3::Zero(), Mat3::Zero());
}

DensityMatrix4 density_matrix(const BlochVector& t_a, const BlochVector& t_b, const CorrMatrix& c) {
  const auto& pp = pauli_products();
  DensityMatrix4 rho = pp[0][0];
  for (int i = 0; i < 3; ++i) {
    rho += t_a(i) * pp[i + 1][0];
    rho += t_b(i) * pp[0][i + 1];
    for (int j = 0; j < 3; ++j) rho += c(i, j) * pp[i + 1][j + 1];
  }
  return rho / 4.0;
}

DensityMatrix4 density_matrix(const FanoState& s) {
  return density_matrix(s.t_a(), s.t_b(), s.c());
}

FanoParams fano_params(const DensityMatrix4& rho) {
  const auto& pp = pauli_products();
  auto expect = [&](int i, int j) { return (pp[i][j] * rho).trace().real(); };
  FanoParams f;
  for (int i = 0; i < 3; ++i) {
    f.t_a(i) = expect(i + 1, 0);
    f.t_b(i) = expect(0, i + 1);
    for (int j = 0; j < 3; ++j) f.c(i, j) = expect(i + 1, j + 1);
  }
  return f;
}

FanoState from_density_matrix(const DensityMatrix4& rho) {
  if (!rho.allFinite()) throw NonPhysical("density matrix has non-finite entries");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw NonPhysical("density matrix is not Hermitian");
  if (std::abs(rho.trace() - std::complex<double>(1.0, 0.0)) > 1e-10)
    throw NonPhysical("density matrix does not have unit trace");
  const DensityMatrix4 herm = 0.5 * (rho + rho.adjoint());
  if (min_eigenvalue(herm) < -kValidityTol)
    throw NonPhysical("density matrix is not positive semidefinite");
  const FanoParams f = fano_params(herm);
  return FanoState(f.t_a, f.t_b, f.c);
}

ValidityReport validate(const BlochVector& t_a, const BlochVector& t_b, const CorrMatrix& c) {
  ValidityReport rep;
  const double ta2 = t_a.squaredNorm();
  const double tb2 = t_b.squaredNorm();
  const double r2 = 1.0 + ta2 + tb2 + c.squaredNorm();
  const double tct = t_a.dot(c * t_b);
  const double det = c.determinant();
  const Mat3 cof = cofactor(c);

  rep.conditions[0] = 4.0 - r2;
  rep.conditions[1] = 2.0 * (tct - det) - (r2 - 2.0);
  rep.conditions[2] = (r2 - 2.0) * (r2 - 2.0) + 8.0 * (tct - det) + 8.0 * t_a.dot(cof * t_b) -
                      4.0 * (ta2 * tb2 + (c.transpose() * t_a).squaredNorm() +
                             (c * t_b).squaredNorm() + cof.squaredNorm());

  rep.min_eigenvalue = min_eigenvalue(density_matrix(t_a, t_b, c));
  rep.conditions_hold = rep.conditions[0] >= -kValidityTol && rep.conditions[1] >= -kValidityTol &&
                        rep.conditions[2] >= -kValidityTol;
  rep.eigenvalues_nonnegative = rep.min_eigenvalue >= -kValidityTol;
  rep.valid = rep.conditions_hold && rep.eigenvalues_nonnegative;
  rep.criteria_agree = rep.conditions_hold == rep.eigenvalues_nonnegative;
  return rep;
}

CorrMatrix bell_correlation(int k) {
  switch (k) {
    case 1: return Vec3(1, -1, 1).asDiagonal();
    case 2: return Vec3(-1, 1, 1).asDiagonal();
    case 3: return Vec3(1, 1, -1).asDiagonal();
    case 4: return Vec3(-1, -1, -1).asDiagonal();
    default: throw DomainError("Bell index must be in 1..4");
  }
}

std::array<double, 4> bell_diagonal_weights(double c1, double c2, double c3) {
  return {(1 + c1 - c2 + c3) / 4, (1 - c1 + c2 + c3) / 4, (1 + c1 + c2 - c3) / 4,
          (1 - c1 - c2 - c3) / 4};
}

FanoState bell_diagonal(double c1, double c2, double c3) {
  for (double w : bell_diagonal_weights(c1, c2, c3)) {
    if (!(w >= -kValidityTol)) throw NonPhysical("point lies outside the Bell tetrahedron");
  }
  return FanoState(Vec3::Zero(), Vec3::Zero(), Vec3(c1, c2, c3).asDiagonal());
}

FanoState classical_quantum(double p0, const MeasurementDirection& n_a, const BlochVector& tb0,
                            const BlochVector& tb1) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) throw DomainError("p0 must lie in [0, 1]");
  if (tb0.norm() > 1.0 + 1e-12 || tb1.norm() > 1.0 + 1e-12)
    throw DomainError("conditional Bloch vectors must lie in the unit ball");
  const double p1 = 1.0 - p0;
  const Vec3 t_a = (p0 - p1) * n_a.vec();
  const Vec3 t_b = p0 * tb0 + p1 * tb1;
  const Mat3 c = n_a.vec() * (p0 * tb0 - p1 * tb1).transpose();
  return FanoState(t_a, t_b, c);
}

Vec3 singular_values(const CorrMatrix& c) { return singular_values3(c); }

FanoState local_rotate(const FanoState& s, const Mat3& r_a, const Mat3& r_b) {
  if (!is_rotation(r_a) || !is_rotation(r_b))
    throw InvalidRotation("local rotations must be proper orthogonal matrices");
  return FanoState(r_a * s.t_a(), r_b * s.t_b(), r_a * s.c() * r_b.transpose());
}

FanoState random_state(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Matrix4cd g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = {re, im};
    }
  Eigen::Matrix4cd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return from_density_matrix(rho);
}

MeasurementDirection random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec3 v;
  do {
    v = Vec3(normal(rng), normal(rng), normal(rng));
  } while (v.norm() < 1e-8);
  return MeasurementDirection::normalized(v);
}

}  // namespace qpredict
