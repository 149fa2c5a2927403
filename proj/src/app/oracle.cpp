#include "qpredict/app/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qpredict/app/state_io.hpp"
#include "qpredict/haar_average.hpp"
#include "qpredict/predictability.hpp"
#include "qpredict/qkd.hpp"

namespace qpredict::app {

Suite parse_suite(const std::string& name) {
  if (name == "results12") return Suite::Results12;
  if (name == "averages") return Suite::Averages;
  if (name == "qkd") return Suite::Qkd;
  throw ParseError("unknown oracle suite '" + name + "'");
}

OracleSummary run_oracle(Suite suite, int n, std::uint64_t seed, int quad_n) {
  if (n < 10) throw ParseError("oracle needs n >= 10");
  OracleSummary sum;
  sum.n = n;

  for (int i = 0; i < n; ++i) {
    const FanoState s = random_state(seed + i);
    std::mt19937_64 rng(seed + i);
    switch (suite) {
      case Suite::Results12: {
        sum.suite = "results12";
        sum.tolerance = 1e-8;
        const MeasurementDirection a = random_direction(rng);
        const double d1 = std::abs(min_bayes_risk(s, a).value -
                                   brute_force_min(Measure::BayesRisk, s, a, kOracleGrid).value);
        const double d2 =
            std::abs(min_inference_variance(s, a).value -
                     brute_force_min(Measure::InferenceVariance, s, a, kOracleGrid).value);
        const double d = std::max(d1, d2);
        sum.max_deviation = std::max(sum.max_deviation, d);
        if (!(d <= sum.tolerance)) ++sum.failures;
        break;
      }
      case Suite::Averages: {
        sum.suite = "averages";
        sum.tolerance = 2e-3;
        double d = 0.0;
        const AverageResult bayes = avg_min_bayes_risk(s, quad_n);
        if (bayes.assumption_verified) {
          const double q = sphere_quadrature(
              [&](const Vec3& a) { return min_bayes_risk(s, MeasurementDirection(a)).value; },
              quad_n);
          d = std::max(d, std::abs(bayes.value - q) / q);
        }
        const double var = avg_min_inference_variance(s).value;
        const double q = sphere_quadrature(
            [&](const Vec3& a) { return min_inference_variance(s, MeasurementDirection(a)).value; },
            quad_n);
        d = std::max(d, std::abs(var - q) / q);
        sum.max_deviation = std::max(sum.max_deviation, d);
        if (!(d <= sum.tolerance)) ++sum.failures;
        break;
      }
      case Suite::Qkd: {
        sum.suite = "qkd";
        sum.tolerance = 1e-9;
        const KeyRateReport r = k_star_opt(s);
        const double d = std::max(0.0, r.k_bb84 - r.k_star);
        sum.max_deviation = std::max(sum.max_deviation, d);
        if (!(d <= sum.tolerance)) ++sum.failures;
        break;
      }
    }
  }
  sum.passed = sum.failures == 0;
  return sum;
}

}  // namespace qpredict::app
