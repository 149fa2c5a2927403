#include "qpredict/qkd.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "qpredict/errors.hpp"
#include "qpredict/predictability.hpp"

namespace qpredict {

namespace {

using Angles = std::array<double, 3>;

struct Candidate {
  double value;  // -k_star, minimized
  Angles angles;
};

double rate_at(const FanoState& s, const Angles& x) {
  const Mat3 r = euler_zyz(x[0], x[1], x[2]);
  const double l1 = min_bayes_risk(s, MeasurementDirection::normalized(r.col(2))).value;
  const double l2 = min_bayes_risk(s, MeasurementDirection::normalized(r.col(0))).value;
  return 1.0 - binary_entropy(std::clamp(l1, 0.0, 0.5)) - binary_entropy(std::clamp(l2, 0.0, 0.5));
}

// Nelder-Mead on the three Euler angles, stopping once the simplex diameter
// drops below `tol` (or after a generous iteration cap).
Candidate nelder_mead(const FanoState& s, const Angles& start, double scale, double tol) {
  std::array<Candidate, 4> simplex;
  simplex[0] = {-rate_at(s, start), start};
  for (int i = 0; i < 3; ++i) {
    Angles p = start;
    p[i] += scale;
    simplex[i + 1] = {-rate_at(s, p), p};
  }
  auto by_value = [](const Candidate& a, const Candidate& b) { return a.value < b.value; };
  auto blend = [](const Angles& a, const Angles& b, double t) {
    Angles out;
    for (int i = 0; i < 3; ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
  };

  for (int iter = 0; iter < 5000; ++iter) {
    std::sort(simplex.begin(), simplex.end(), by_value);
    double diameter = 0.0;
    for (int i = 1; i < 4; ++i)
      for (int k = 0; k < 3; ++k)
        diameter = std::max(diameter, std::abs(simplex[i].angles[k] - simplex[0].angles[k]));
    if (diameter < tol) break;

    Angles centroid{0.0, 0.0, 0.0};
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) centroid[k] += simplex[i].angles[k] / 3.0;

    const Angles reflected = blend(centroid, simplex[3].angles, -1.0);
    const double fr = -rate_at(s, reflected);
    if (fr < simplex[0].value) {
      const Angles expanded = blend(centroid, simplex[3].angles, -2.0);
      const double fe = -rate_at(s, expanded);
      simplex[3] = fe < fr ? Candidate{fe, expanded} : Candidate{fr, reflected};
      continue;
    }
    if (fr < simplex[2].value) {
      simplex[3] = {fr, reflected};
      continue;
    }
    const bool outside = fr < simplex[3].value;
    const Angles contracted = blend(centroid, outside ? reflected : simplex[3].angles, 0.5);
    const double fc = -rate_at(s, contracted);
    if (fc < std::min(fr, simplex[3].value)) {
      simplex[3] = {fc, contracted};
      continue;
    }
    for (int i = 1; i < 4; ++i) {
      simplex[i].angles = blend(simplex[0].angles, simplex[i].angles, 0.5);
      simplex[i].value = -rate_at(s, simplex[i].angles);
    }
  }
  return *std::min_element(simplex.begin(), simplex.end(), by_value);
}

}  // namespace

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binary entropy needs p in [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double k_bb84(const FanoState& s) {
  const auto z = MeasurementDirection::z();
  const auto x = MeasurementDirection::x();
  const double ez = std::clamp(qber(s, z, z), 0.0, 1.0);
  const double ex = std::clamp(qber(s, x, x), 0.0, 1.0);
  return 1.0 - binary_entropy(ez) - binary_entropy(ex);
}

double k_star(const FanoState& s, const MeasurementDirection& a1, const MeasurementDirection& a2) {
  if (std::abs(a1.dot(a2.vec())) > 1e-10) throw NotOrthogonal("a1 and a2 must be orthogonal");
  const double l1 = std::clamp(min_bayes_risk(s, a1).value, 0.0, 0.5);
  const double l2 = std::clamp(min_bayes_risk(s, a2).value, 0.0, 0.5);
  return 1.0 - binary_entropy(l1) - binary_entropy(l2);
}

KeyRateReport k_star_opt(const FanoState& s, const KeyRateOptions& opt) {
  const double pi = std::numbers::pi;
  const int n = std::max(opt.grid, 2);

  // The identity rotation is the BB84 pair (z, x); seeding it keeps k_star >= k_bb84.
  std::vector<Candidate> cells;
  cells.reserve(static_cast<std::size_t>(n) * n * n + 1);
  cells.push_back({-rate_at(s, {0.0, 0.0, 0.0}), {0.0, 0.0, 0.0}});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Angles x{2.0 * pi * i / n, pi * (j + 0.5) / n, 2.0 * pi * k / n};
        cells.push_back({-rate_at(s, x), x});
      }
  const int starts = std::min<int>(opt.restarts, static_cast<int>(cells.size()));
  std::partial_sort(cells.begin(), cells.begin() + starts, cells.end(),
                    [](const Candidate& a, const Candidate& b) { return a.value < b.value; });

  Candidate best = cells.front();
  for (int i = 0; i < starts; ++i) {
    const Candidate refined = nelder_mead(s, cells[i].angles, pi / n, opt.tolerance);
    if (refined.value < best.value) best = refined;
  }

  KeyRateReport r;
  r.k_bb84 = k_bb84(s);
  const Mat3 rot = euler_zyz(best.angles[0], best.angles[1], best.angles[2]);
  r.a1_star = MeasurementDirection::normalized(rot.col(2));
  // Gram-Schmidt guards the 1e-10 orthogonality contract against rounding.
  r.a2_star = MeasurementDirection::normalized(rot.col(0) - rot.col(0).dot(r.a1_star.vec()) *
                                                                 r.a1_star.vec());
  r.k_star = k_star(s, r.a1_star, r.a2_star);
  r.b1_star = min_bayes_risk(s, r.a1_star).b_star;
  r.b2_star = min_bayes_risk(s, r.a2_star).b_star;
  r.secure_bb84 = r.k_bb84 > 0.0;
  r.secure_star = r.k_star > 0.0;
  return r;
}

double security_threshold(const std::function<FanoState(double)>& family, Rate rate, double lo,
                          double hi, double tol) {
  auto eval = [&](double t) {
    const FanoState s = family(t);
    return rate == Rate::BB84 ? k_bb84(s) : k_star_opt(s).k_star;
  };
  double f_lo = eval(lo);
  const double f_hi = eval(hi);
  if (!(f_lo * f_hi < 0.0)) throw NoSignChange("rate does not change sign on the interval");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = eval(mid);
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qpredict
