#include "qpredict/predictability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qpredict/errors.hpp"
#include "qpredict/sphere.hpp"

namespace qpredict {

namespace {

constexpr double kDegenerateB = 1e-12;
constexpr double kTinyNorm = 1e-14;

double sign(int bit) { return bit == 0 ? 1.0 : -1.0; }

double evaluate(Measure m, const FanoState& s, const MeasurementDirection& a, const Vec3& b) {
  const MeasurementDirection dir(b);
  return m == Measure::BayesRisk ? bayes_risk(s, a, dir) : inference_variance(s, a, dir);
}

// Any unit vector orthogonal to v, and the completing third axis.
std::pair<Vec3, Vec3> tangent_basis(const Vec3& v) {
  const Vec3 helper = std::abs(v.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 e1 = v.cross(helper).normalized();
  return {e1, v.cross(e1)};
}

}  // namespace

JointDist22 joint_prob(const FanoState& s, const MeasurementDirection& a,
                       const MeasurementDirection& b) {
  const double at = a.dot(s.t_a());
  const double bt = b.dot(s.t_b());
  const double acb = a.dot(s.c() * b.vec());
  JointDist22 d;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      d.p[x][y] = 0.25 * (1.0 + sign(x) * at + sign(y) * bt + sign(x) * sign(y) * acb);
  return d;
}

ConditionalState conditional_state(const FanoState& s, const MeasurementDirection& b, int y) {
  if (y != 0 && y != 1) throw DomainError("outcome must be 0 or 1");
  const double prob = 0.5 * (1.0 + sign(y) * b.dot(s.t_b()));
  if (prob <= kZeroProbability) throw ZeroProbabilityBranch("outcome has zero probability");
  return {prob, (s.t_a() + sign(y) * (s.c() * b.vec())) / (2.0 * prob)};
}

double conditional_expectation(const FanoState& s, const MeasurementDirection& a,
                               const MeasurementDirection& b, int y) {
  const ConditionalState cs = conditional_state(s, b, y);
  return 0.5 * (1.0 - a.dot(cs.t_a));
}

double bayes_risk(const FanoState& s, const MeasurementDirection& a,
                  const MeasurementDirection& b) {
  const JointDist22 d = joint_prob(s, a, b);
  double risk = 0.0;
  for (int y = 0; y < 2; ++y) {
    // g*(y) = 1 only when P(1, y) > P(0, y); the error is the other mass.
    risk += d.p[1][y] > d.p[0][y] ? d.p[0][y] : d.p[1][y];
  }
  return risk;
}

double qber(const FanoState& s, const MeasurementDirection& a, const MeasurementDirection& b) {
  return 0.5 * (1.0 - a.dot(s.c() * b.vec()));
}

PredictabilityResult min_bayes_risk(const FanoState& s, const MeasurementDirection& a) {
  const Vec3 cta = s.c().transpose() * a.vec();
  const double corr = cta.norm();
  const double local = std::abs(a.dot(s.t_a()));
  PredictabilityResult r;
  if (corr < local) {
    r.value = 0.5 * (1.0 - local);
    r.branch = Branch::LocalInfo;
    r.b_star = corr < kTinyNorm ? MeasurementDirection::z() : MeasurementDirection(cta / corr);
  } else {
    r.value = 0.5 * (1.0 - corr);
    r.branch = Branch::Correlation;
    r.b_star = corr < kTinyNorm ? MeasurementDirection::z() : MeasurementDirection(cta / corr);
  }
  return r;
}

double inference_variance(const FanoState& s, const MeasurementDirection& a,
                          const MeasurementDirection& b) {
  const JointDist22 d = joint_prob(s, a, b);
  double delta = 0.0;
  for (int y = 0; y < 2; ++y) {
    const double py = d.marginal_y(y);
    if (py <= kZeroProbability) continue;
    delta += d.p[0][y] * d.p[1][y] / py;
  }
  return delta;
}

double conditional_quadratic_entropy(const FanoState& s, const MeasurementDirection& a,
                                     const MeasurementDirection& b) {
  const JointDist22 d = joint_prob(s, a, b);
  double h = 0.0;
  for (int y = 0; y < 2; ++y) {
    const double py = d.marginal_y(y);
    if (py <= kZeroProbability) continue;
    const double q0 = d.p[0][y] / py;
    const double q1 = d.p[1][y] / py;
    h += py * (1.0 - q0 * q0 - q1 * q1);
  }
  return h;
}

BlochVector steering_ellipsoid_center(const FanoState& s) {
  const double gap = 1.0 - s.t_b().squaredNorm();
  if (gap < kDegenerateB) throw DegenerateB("|t_B| = 1: steering ellipsoid is degenerate");
  return (s.t_a() - s.c() * s.t_b()) / gap;
}

PredictabilityResult min_inference_variance(const FanoState& s, const MeasurementDirection& a) {
  PredictabilityResult r;
  const double gap = 1.0 - s.t_b().squaredNorm();
  if (gap < kDegenerateB) {
    const double at = a.dot(s.t_a());
    r.value = 0.25 * (1.0 - at * at);
    r.branch = Branch::LocalInfo;
    r.degenerate = true;
    r.b_star = MeasurementDirection::z();
    return r;
  }
  const Vec3 cse = steering_ellipsoid_center(s);
  const Vec3 cta = s.c().transpose() * a.vec();
  const double acse = a.dot(cse);
  const double c_star = gap * acse * acse + cta.squaredNorm();
  r.value = 0.25 * (1.0 - c_star);
  r.branch = Branch::Correlation;
  const Vec3 v = cta - acse * s.t_b();
  const double vn = v.norm();
  r.b_star = vn < kTinyNorm ? MeasurementDirection::z() : MeasurementDirection(v / vn);
  return r;
}

BruteForceMin brute_force_min(Measure measure, const FanoState& s, const MeasurementDirection& a,
                              int n) {
  if (n < 100) throw DomainError("brute_force_min needs at least 100 grid points");

  std::vector<std::pair<double, int>> scored;
  scored.reserve(n);
  for (int i = 0; i < n; ++i) {
    scored.emplace_back(evaluate(measure, s, a, fibonacci_point(i, n)), i);
  }
  constexpr int kStarts = 4;
  std::partial_sort(scored.begin(), scored.begin() + kStarts, scored.end());

  BruteForceMin best{scored.front().first, MeasurementDirection(fibonacci_point(scored.front().second, n))};
  const double initial_step = 2.0 * std::sqrt(4.0 * std::numbers::pi / n);

  for (int k = 0; k < kStarts; ++k) {
    Vec3 b = fibonacci_point(scored[k].second, n);
    double value = scored[k].first;
    double step = initial_step;
    while (step > 1e-10) {
      const auto [e1, e2] = tangent_basis(b);
      bool improved = false;
      for (const Vec3& dir : {e1, Vec3(-e1), e2, Vec3(-e2)}) {
        const Vec3 trial = (b + step * dir).normalized();
        const double v = evaluate(measure, s, a, trial);
        if (v < value) {
          value = v;
          b = trial;
          improved = true;
          break;
        }
      }
      if (!improved) step *= 0.5;
    }
    if (value < best.value) best = {value, MeasurementDirection(b)};
  }
  return best;
}

}  // namespace qpredict
