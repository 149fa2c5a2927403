#pragma once

#include <json.hpp>

#include "qpredict/haar_average.hpp"
#include "qpredict/twoqubit_state.hpp"

namespace qpredict::app {

/// Full analysis of one state. Stable keys: valid, singular_values, f2, f3,
/// f_haar, ppt_min_eig, horodecki_m, bayes_avg, variance_avg, k_bb84, k_star,
/// a1_star, a2_star; plus method flags and the optimal partner directions.
nlohmann::json state_report(const FanoState& s, int quad_n = kDefaultQuadratureN);

}  // namespace qpredict::app
