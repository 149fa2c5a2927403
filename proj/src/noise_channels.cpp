#include "qpredict/noise_channels.hpp"

#include <cmath>

#include "qpredict/errors.hpp"

namespace qpredict {

AffineChannel amplitude_damping(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("damping parameter must lie in [0, 1]");
  const double s = std::sqrt(1.0 - p);
  return {Vec3(s, s, 1.0 - p).asDiagonal(), Vec3(0.0, 0.0, p)};
}

FanoState apply_to_bell(const AffineChannel& e, const AffineChannel& f, int k) {
  const Mat3 c = e.b * f.b.transpose() + e.a * bell_correlation(k) * f.a.transpose();
  return FanoState(e.b, f.b, c);
}

FanoState adc_state(double p_a, double p_b) {
  if (!(p_a >= 0.0 && p_a <= 1.0 && p_b >= 0.0 && p_b <= 1.0))
    throw DomainError("damping parameters must lie in [0, 1]");
  const double c = std::sqrt((1.0 - p_a) * (1.0 - p_b));
  const Mat3 corr = Vec3(c, -c, c * c + p_a * p_b).asDiagonal();
  return FanoState(Vec3(0.0, 0.0, p_a), Vec3(0.0, 0.0, p_b), corr);
}

}  // namespace qpredict
