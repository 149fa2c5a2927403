#include "qpredict/correlations.hpp"

#include <cmath>
#include <numbers>

#include "qpredict/carlson.hpp"
#include "qpredict/errors.hpp"

namespace qpredict {

double f2_cjwr(const FanoState& s) {
  const Vec3 sv = singular_values(s.c());
  return std::hypot(sv(0), sv(1));
}

double f3_cjwr(const FanoState& s) { return s.c().norm(); }

double f_haar(const FanoState& s) {
  const Vec3 sv = singular_values(s.c());
  const double s1 = sv(0);
  if (s1 == 0.0) return 0.0;
  return 4.0 * std::numbers::pi * s1 *
         carlson_rg(sv(1) * sv(1) / (s1 * s1), sv(2) * sv(2) / (s1 * s1), 1.0);
}

bool is_bell_diagonal_type(const FanoState& s, double tol) {
  // With maximally mixed marginals, C = R_A D R_B^T by a signed SVD with
  // proper rotations, so the state is locally equivalent to a Bell-diagonal one.
  return s.t_a().norm() <= tol && s.t_b().norm() <= tol;
}

bool is_bd_separable(double c1, double c2, double c3) {
  for (double w : bell_diagonal_weights(c1, c2, c3)) {
    if (!(w >= -kValidityTol)) throw NonPhysical("point lies outside the Bell tetrahedron");
  }
  return std::abs(c1) + std::abs(c2) + std::abs(c3) <= 1.0 + 1e-12;
}

double ppt_min_eigenvalue(const FanoState& s) {
  const DensityMatrix4 rho = density_matrix(s);
  DensityMatrix4 pt;
  // rho_{(a b),(a' b')} -> rho_{(a b'),(a' b)}
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp) pt(2 * a + b, 2 * ap + bp) = rho(2 * a + bp, 2 * ap + b);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(pt, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double horodecki_m(const FanoState& s) {
  const Vec3 sv = singular_values(s.c());
  return sv(0) * sv(0) + sv(1) * sv(1);
}

CorrelationReport analyze_correlations(const FanoState& s) {
  CorrelationReport r;
  r.f2 = f2_cjwr(s);
  r.f3 = f3_cjwr(s);
  r.f_haar = f_haar(s);
  r.steerable_2 = r.f2 > 1.0;
  r.steerable_3 = r.f3 > 1.0;
  r.haar_applicable = is_bell_diagonal_type(s);
  r.steerable_haar = r.f_haar > 2.0 * std::numbers::pi;
  r.ppt_min_eig = ppt_min_eigenvalue(s);
  r.entangled = r.ppt_min_eig < -kValidityTol;
  r.horodecki_m = horodecki_m(s);
  r.nonlocal = r.horodecki_m > 1.0;
  return r;
}

}  // namespace qpredict
