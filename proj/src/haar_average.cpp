#include "qpredict/haar_average.hpp"

#include <cmath>
#include <vector>

#include "qpredict/carlson.hpp"
#include "qpredict/errors.hpp"
#include "qpredict/predictability.hpp"
#include "qpredict/sphere.hpp"

namespace qpredict {

namespace {

constexpr double kMarginTol = 1e-9;

double bloch_norm(const BlochVector& t) {
  const double n = t.norm();
  if (!(n <= 1.0 + 1e-12)) throw DomainError("Bloch vector must lie in the unit ball");
  return std::min(n, 1.0);
}

}  // namespace

double sphere_quadrature(const std::function<double(const Vec3&)>& f, int n) {
  if (n < 1000) throw DomainError("sphere_quadrature needs at least 1000 points");
  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) values[i] = f(fibonacci_point(i, n));
  return pairwise_sum(values) / n;
}

double correlation_margin(const FanoState& s) {
  const Mat3 m = s.c() * s.c().transpose() - s.t_a() * s.t_a().transpose();
  return jacobi_eigen(m).values(2);
}

AverageResult avg_min_bayes_risk(const FanoState& s, int quad_n) {
  AverageResult r;
  const Vec3 sv = singular_values(s.c());
  const double ta = s.t_a().norm();

  if (sv(2) >= ta || correlation_margin(s) >= -kMarginTol) {
    r.method = AverageMethod::ClosedForm;
    r.assumption_verified = true;
    const double s1 = sv(0);
    if (s1 == 0.0) {
      r.value = 0.5;
    } else {
      r.value = 0.5 * (1.0 - s1 * carlson_rg(sv(1) * sv(1) / (s1 * s1),
                                             sv(2) * sv(2) / (s1 * s1), 1.0));
    }
    return r;
  }

  const Mat3 m = s.t_a() * s.t_a().transpose() - s.c() * s.c().transpose();
  if (jacobi_eigen(m).values(2) >= -kMarginTol) {
    // Local information wins for every observable.
    r.method = AverageMethod::ClosedForm;
    r.assumption_verified = true;
    r.value = avg_min_bayes_risk_local(s.t_a());
    return r;
  }

  r.method = AverageMethod::Quadrature;
  r.assumption_verified = false;
  r.value = sphere_quadrature(
      [&](const Vec3& a) { return min_bayes_risk(s, MeasurementDirection(a)).value; }, quad_n);
  return r;
}

double avg_min_bayes_risk_local(const BlochVector& t_a) {
  return 0.5 * (1.0 - bloch_norm(t_a) / 2.0);
}

AverageResult avg_min_inference_variance(const FanoState& s) {
  AverageResult r;
  r.method = AverageMethod::ClosedForm;
  r.assumption_verified = true;
  const double gap = 1.0 - s.t_b().squaredNorm();
  if (gap < 1e-12) {
    r.value = avg_min_inference_variance_local(s.t_a());
    return r;
  }
  const Vec3 cse = steering_ellipsoid_center(s);
  r.value = 0.25 * (1.0 - (gap * cse.squaredNorm() + s.c().squaredNorm()) / 3.0);
  return r;
}

double avg_min_inference_variance_local(const BlochVector& t_a) {
  const double t = bloch_norm(t_a);
  return 0.25 * (1.0 - t * t / 3.0);
}

}  // namespace qpredict
