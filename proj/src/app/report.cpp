#include "qpredict/app/report.hpp"

#include "qpredict/correlations.hpp"
#include "qpredict/qkd.hpp"

namespace qpredict::app {

namespace {

nlohmann::json to_json(const Vec3& v) { return {v(0), v(1), v(2)}; }

const char* method_name(AverageMethod m) {
  return m == AverageMethod::ClosedForm ? "closed-form" : "quadrature";
}

}  // namespace

nlohmann::json state_report(const FanoState& s, int quad_n) {
  const ValidityReport validity = validate(s.t_a(), s.t_b(), s.c());
  const CorrelationReport corr = analyze_correlations(s);
  const AverageResult bayes = avg_min_bayes_risk(s, quad_n);
  const AverageResult variance = avg_min_inference_variance(s);
  const KeyRateReport keys = k_star_opt(s);

  nlohmann::json j;
  j["valid"] = validity.valid;
  j["singular_values"] = to_json(singular_values(s.c()));
  j["f2"] = corr.f2;
  j["f3"] = corr.f3;
  j["f_haar"] = corr.f_haar;
  j["steerable_2"] = corr.steerable_2;
  j["steerable_3"] = corr.steerable_3;
  j["steerable_haar"] = corr.steerable_haar;
  j["haar_applicable"] = corr.haar_applicable;
  j["ppt_min_eig"] = corr.ppt_min_eig;
  j["entangled"] = corr.entangled;
  j["horodecki_m"] = corr.horodecki_m;
  j["nonlocal"] = corr.nonlocal;
  j["bayes_avg"] = bayes.value;
  j["bayes_avg_method"] = method_name(bayes.method);
  j["bayes_avg_assumption_verified"] = bayes.assumption_verified;
  j["variance_avg"] = variance.value;
  j["variance_avg_method"] = method_name(variance.method);
  j["k_bb84"] = keys.k_bb84;
  j["k_star"] = keys.k_star;
  j["a1_star"] = to_json(keys.a1_star.vec());
  j["a2_star"] = to_json(keys.a2_star.vec());
  j["b1_star"] = to_json(keys.b1_star.vec());
  j["b2_star"] = to_json(keys.b2_star.vec());
  j["secure_bb84"] = keys.secure_bb84;
  j["secure_star"] = keys.secure_star;
  return j;
}

}  // namespace qpredict::app
