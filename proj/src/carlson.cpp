#include "qpredict/carlson.hpp"

#include <algorithm>
#include <cmath>

#include "qpredict/errors.hpp"

namespace qpredict {

namespace {

constexpr double kSpreadTol = 1e-14;
constexpr int kMaxIter = 100;

}  // namespace

double carlson_rf(double x, double y, double z) {
  if (!(x >= 0 && y >= 0 && z >= 0) || !std::isfinite(x + y + z))
    throw DomainError("carlson_rf: arguments must be finite and nonnegative");
  if ((x == 0) + (y == 0) + (z == 0) > 1)
    throw DomainError("carlson_rf: at most one argument may be zero");

  double mu = (x + y + z) / 3;
  for (int i = 0; i < kMaxIter; ++i) {
    const double spread = std::max({std::abs(mu - x), std::abs(mu - y), std::abs(mu - z)}) / mu;
    if (spread < kSpreadTol) break;
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lambda = sx * sy + sx * sz + sy * sz;
    x = (x + lambda) / 4;
    y = (y + lambda) / 4;
    z = (z + lambda) / 4;
    mu = (x + y + z) / 3;
  }
  // Fifth-order Taylor tail in the symmetric deviations.
  const double dx = 1 - x / mu, dy = 1 - y / mu, dz = 1 - z / mu;
  const double e2 = dx * dy - dz * dz;
  const double e3 = dx * dy * dz;
  return (1 - e2 / 10 + e3 / 14 + e2 * e2 / 24 - 3 * e2 * e3 / 44) / std::sqrt(mu);
}

double carlson_rd(double x, double y, double z) {
  if (!(x >= 0 && y >= 0 && z > 0) || !std::isfinite(x + y + z))
    throw DomainError("carlson_rd: need x, y >= 0 and z > 0");
  if (x == 0 && y == 0) throw DomainError("carlson_rd: x and y may not both be zero");

  double sum = 0;
  double fac = 1;
  double mu = (x + y + 3 * z) / 5;
  for (int i = 0; i < kMaxIter; ++i) {
    const double spread = std::max({std::abs(mu - x), std::abs(mu - y), std::abs(mu - z)}) / mu;
    if (spread < kSpreadTol) break;
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lambda = sx * sy + sx * sz + sy * sz;
    sum += fac / (sz * (z + lambda));
    fac /= 4;
    x = (x + lambda) / 4;
    y = (y + lambda) / 4;
    z = (z + lambda) / 4;
    mu = (x + y + 3 * z) / 5;
  }
  const double dx = (mu - x) / mu, dy = (mu - y) / mu, dz = (mu - z) / mu;
  const double ea = dx * dy;
  const double eb = dz * dz;
  const double ec = ea - eb;
  const double ed = ea - 6 * eb;
  const double ee = ed + ec + ec;
  const double series = 1 + ed * (-3.0 / 14 + 9.0 / 88 * ed - 9.0 / 52 * dz * ee) +
                        dz * (ee / 6 + dz * (-9.0 / 22 * ec + dz * 3.0 / 26 * ea));
  return 3 * sum + fac * series / (mu * std::sqrt(mu));
}

double carlson_rg(double x, double y, double z) {
  if (!(x >= 0 && y >= 0 && z >= 0) || !std::isfinite(x + y + z))
    throw DomainError("carlson_rg: arguments must be finite and nonnegative");
  // Largest argument last keeps (x - z)(y - z) >= 0 and z > 0 unless all vanish.
  double v[3] = {x, y, z};
  std::sort(v, v + 3);
  const double a = v[0], b = v[1], c = v[2];
  if (c == 0) return 0;
  if (b == 0) return std::sqrt(c) / 2;
  return (c * carlson_rf(a, b, c) - (a - c) * (b - c) * carlson_rd(a, b, c) / 3 +
          std::sqrt(a * b / c)) /
         2;
}

}  // namespace qpredict
