#pragma once

#include <array>
#include <utility>

#include "qpredict/twoqubit_state.hpp"

namespace qpredict {

// Joint outcome distribution p[x][y] of Alice's a.sigma (x) and Bob's b.sigma (y).
struct JointDist22 {
  std::array<std::array<double, 2>, 2> p{};

  double marginal_x(int x) const { return p[x][0] + p[x][1]; }
  double marginal_y(int y) const { return p[0][y] + p[1][y]; }
};

// Which branch of the minimal Bayes risk is active.
enum class Branch { LocalInfo, Correlation };

struct PredictabilityResult {
  double value = 0.0;
  MeasurementDirection b_star;
  Branch branch = Branch::Correlation;
  // Set when |t_B| = 1 forced the product-state fallback of the inference variance.
  bool degenerate = false;
};

inline constexpr double kZeroProbability = 1e-14;

JointDist22 joint_prob(const FanoState& s, const MeasurementDirection& a,
                       const MeasurementDirection& b);

// Probability of Bob's outcome y and Alice's conditional Bloch vector.
struct ConditionalState {
  double prob = 0.0;
  BlochVector t_a;
};

/// Throws ZeroProbabilityBranch when P(y) <= 1e-14.
ConditionalState conditional_state(const FanoState& s, const MeasurementDirection& b, int y);

/// f*(y) = P(X = 1 | Y = y). Throws ZeroProbabilityBranch.
double conditional_expectation(const FanoState& s, const MeasurementDirection& a,
                               const MeasurementDirection& b, int y);

/// Error of the Bayes classifier g*(y) = [f*(y) > 1/2]; ties predict 0.
double bayes_risk(const FanoState& s, const MeasurementDirection& a, const MeasurementDirection& b);

/// Probability that the two outcomes disagree, (1 - a.C b)/2.
double qber(const FanoState& s, const MeasurementDirection& a, const MeasurementDirection& b);

/// Minimum of bayes_risk over Bob's direction, in closed form.
PredictabilityResult min_bayes_risk(const FanoState& s, const MeasurementDirection& a);

/// Expected squared error of the conditional-expectation regressor,
/// sum_y P(y) f*(y)(1 - f*(y)). This is half the conditional quadratic entropy.
double inference_variance(const FanoState& s, const MeasurementDirection& a,
                          const MeasurementDirection& b);

/// sum_y P(y)[1 - sum_x P(x|y)^2], computed from the joint distribution.
double conditional_quadratic_entropy(const FanoState& s, const MeasurementDirection& a,
                                     const MeasurementDirection& b);

/// Minimum of inference_variance over Bob's direction, (1/4)(1 - C*).
/// Falls back to (1/4)(1 - (a.t_A)^2) with degenerate = true when 1 - |t_B|^2 < 1e-12.
PredictabilityResult min_inference_variance(const FanoState& s, const MeasurementDirection& a);

/// Centroid (t_A - C t_B)/(1 - |t_B|^2) of Alice's steering ellipsoid.
/// Throws DegenerateB when 1 - |t_B|^2 < 1e-12.
BlochVector steering_ellipsoid_center(const FanoState& s);

enum class Measure { BayesRisk, InferenceVariance };

struct BruteForceMin {
  double value = 0.0;
  MeasurementDirection direction;
};

/// Direct minimization of the pointwise measure over Bob's direction: scan n
/// Fibonacci-sphere points, then refine the best few by compass search on the
/// sphere down to a 1e-10 step. Requires n >= 100.
BruteForceMin brute_force_min(Measure measure, const FanoState& s, const MeasurementDirection& a,
                              int n);

}  // namespace qpredict
