#pragma once

#include <functional>

#include "qpredict/twoqubit_state.hpp"

namespace qpredict {

struct KeyRateReport {
  double k_bb84 = 0.0;
  double k_star = 0.0;
  MeasurementDirection a1_star;
  MeasurementDirection a2_star;
  MeasurementDirection b1_star;
  MeasurementDirection b2_star;
  bool secure_bb84 = false;
  bool secure_star = false;
};

/// h(p) = -p log2 p - (1-p) log2(1-p), h(0) = h(1) = 0. Throws DomainError off [0, 1].
double binary_entropy(double p);

/// 1 - h(eps_z) - h(eps_x) with both parties measuring along z and along x.
double k_bb84(const FanoState& s);

/// 1 - h(L*_min(a1)) - h(L*_min(a2)). Throws NotOrthogonal unless |a1.a2| <= 1e-10.
double k_star(const FanoState& s, const MeasurementDirection& a1, const MeasurementDirection& a2);

struct KeyRateOptions {
  int grid = 24;             // Euler-angle grid points per axis
  int restarts = 5;          // simplex refinements started from the best cells
  double tolerance = 1e-8;   // simplex diameter, radians
};

/// Maximum of k_star over orthonormal pairs (R z, R x), R = Rz Ry Rz.
KeyRateReport k_star_opt(const FanoState& s, const KeyRateOptions& opt = {});

enum class Rate { BB84, Star };

/// Parameter where the chosen rate crosses zero along `family`, by bisection
/// to `tol`. Throws NoSignChange unless the rate changes sign on [lo, hi].
double security_threshold(const std::function<FanoState(double)>& family, Rate rate, double lo,
                          double hi, double tol = 1e-4);

}  // namespace qpredict
