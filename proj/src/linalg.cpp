#include "qpredict/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

namespace qpredict {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffTol = 1e-14;

double off_norm(const Mat3& a) {
  return std::sqrt(2.0 * (a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2)));
}

}  // namespace

SymEigen3 jacobi_eigen(const Mat3& m) {
  Mat3 a = m.selfadjointView<Eigen::Upper>();
  Mat3 v = Mat3::Identity();
  const double scale = std::max(a.norm(), 1e-300);

  int sweep = 0;
  for (; sweep < kMaxSweeps && off_norm(a) > kOffTol * scale; ++sweep) {
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rutishauser's formulation of the rotation that zeroes a(p, q).
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < 3; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < 3; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) > a(j, j); });
  SymEigen3 out;
  out.sweeps = sweep;
  for (int i = 0; i < 3; ++i) {
    out.values(i) = a(order[i], order[i]);
    out.vectors.col(i) = v.col(order[i]);
  }
  return out;
}

Vec3 singular_values3(const Mat3& m) {
  Mat3 u = m;
  const double scale = m.norm();
  if (scale == 0.0) return Vec3::Zero();

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const double alpha = u.col(p).squaredNorm();
        const double beta = u.col(q).squaredNorm();
        const double gamma = u.col(p).dot(u.col(q));
        if (std::abs(gamma) <= kOffTol * std::sqrt(alpha * beta) || gamma == 0.0) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) /
                         (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = c * t;
        const Vec3 up = u.col(p);
        const Vec3 uq = u.col(q);
        u.col(p) = c * up - s * uq;
        u.col(q) = s * up + c * uq;
      }
    }
    if (!rotated) break;
  }

  Vec3 sv(u.col(0).norm(), u.col(1).norm(), u.col(2).norm());
  std::sort(sv.data(), sv.data() + 3, std::greater<>());
  return sv;
}

Mat3 cofactor(const Mat3& m) {
  Mat3 c;
  c(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  c(0, 1) = -(m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0));
  c(0, 2) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  c(1, 0) = -(m(0, 1) * m(2, 2) - m(0, 2) * m(2, 1));
  c(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  c(1, 2) = -(m(0, 0) * m(2, 1) - m(0, 1) * m(2, 0));
  c(2, 0) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  c(2, 1) = -(m(0, 0) * m(1, 2) - m(0, 2) * m(1, 0));
  c(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return c;
}

Mat3 euler_zyz(double alpha, double beta, double gamma) {
  using Eigen::AngleAxisd;
  return (AngleAxisd(alpha, Vec3::UnitZ()) * AngleAxisd(beta, Vec3::UnitY()) *
          AngleAxisd(gamma, Vec3::UnitZ()))
      .toRotationMatrix();
}

bool is_rotation(const Mat3& r, double tol) {
  if (!r.allFinite()) return false;
  const Mat3 gram = r.transpose() * r;
  if ((gram - Mat3::Identity()).cwiseAbs().maxCoeff() > tol) return false;
  return std::abs(r.determinant() - 1.0) <= tol;
}

const std::array<Eigen::Matrix2cd, 4>& pauli() {
  static const std::array<Eigen::Matrix2cd, 4> sigma = [] {
    using C = std::complex<double>;
    std::array<Eigen::Matrix2cd, 4> s;
    s[0] << C(1, 0), C(0, 0), C(0, 0), C(1, 0);
    s[1] << C(0, 0), C(1, 0), C(1, 0), C(0, 0);
    s[2] << C(0, 0), C(0, -1), C(0, 1), C(0, 0);
    s[3] << C(1, 0), C(0, 0), C(0, 0), C(-1, 0);
    return s;
  }();
  return sigma;
}

}  // namespace qpredict
