#pragma once

#include <functional>

#include "qpredict/twoqubit_state.hpp"

namespace qpredict {

enum class AverageMethod { ClosedForm, Quadrature };

struct AverageResult {
  double value = 0.0;
  AverageMethod method = AverageMethod::ClosedForm;
  // True when the regime assumption behind the closed form was verified.
  bool assumption_verified = false;
};

inline constexpr int kDefaultQuadratureN = 200000;

/// Mean of f over n Fibonacci-sphere points (n >= 1000), summed pairwise.
double sphere_quadrature(const std::function<double(const Vec3&)>& f, int n);

/// Signed margin min_a (|C^T a|^2 - (a.t_A)^2) over unit a: the smallest
/// eigenvalue of C C^T - t_A t_A^T. Nonnegative iff correlations dominate for
/// every observable.
double correlation_margin(const FanoState& s);

/// Haar average of the minimal Bayes risk. Closed form through R_G when the
/// correlation branch is active for every a; the local-information closed form
/// when it is inactive for every a; quadrature of the pointwise minimum otherwise.
AverageResult avg_min_bayes_risk(const FanoState& s, int quad_n = kDefaultQuadratureN);

/// (1/2)(1 - |t_A|/2).
double avg_min_bayes_risk_local(const BlochVector& t_a);

/// (1/4)[1 - ((1 - |t_B|^2)|c_se|^2 + |C|^2)/3]; product formula when |t_B| = 1.
AverageResult avg_min_inference_variance(const FanoState& s);

/// (1/4)(1 - |t_A|^2/3).
double avg_min_inference_variance_local(const BlochVector& t_a);

/// Thresholds no state without correlations can beat.
inline constexpr double kLocalBayesThreshold = 0.25;
inline constexpr double kLocalVarianceThreshold = 1.0 / 6.0;

}  // namespace qpredict
