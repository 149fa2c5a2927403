#include "qpredict/ttbar.hpp"

#include <cmath>
#include <numbers>

#include "qpredict/errors.hpp"

namespace qpredict {

namespace {

void check_phase_point(double beta, double theta) {
  if (!(beta >= 0.0 && beta < 1.0)) throw DomainError("beta must lie in [0, 1)");
  if (!(theta > 0.0 && theta < std::numbers::pi)) throw DomainError("theta must lie in (0, pi)");
}

HelicityCorr qqbar(double beta, double theta) {
  constexpr double fq = 1.0 / 18.0;
  const double b2 = beta * beta;
  const double s2 = std::sin(theta) * std::sin(theta);
  const double a = fq * (2.0 - b2 * s2);
  HelicityCorr h;
  h.a_tilde = a;
  h.c_rr = fq * (2.0 - b2) * s2 / a;
  h.c_nn = -fq * b2 * s2 / a;
  h.c_kk = fq * (2.0 - (2.0 - b2) * s2) / a;
  h.c_kr = fq * std::sqrt(1.0 - b2) * std::sin(2.0 * theta) / a;
  return h;
}

HelicityCorr gg(double beta, double theta) {
  const double b2 = beta * beta;
  const double b4 = b2 * b2;
  const double c2 = std::cos(theta) * std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  const double s4 = s2 * s2;
  const double sin2t = std::sin(2.0 * theta);
  const double collinear = 1.0 - b2 * c2;
  if (collinear <= 1e-12) throw DomainError("gg coefficients diverge at 1 - beta^2 cos^2 theta = 0");
  const double fg = (7.0 + 9.0 * b2 * c2) / (192.0 * collinear * collinear);
  const double a = fg * (1.0 + 2.0 * b2 * s2 - b4 * (1.0 + s4));
  HelicityCorr h;
  h.a_tilde = a;
  h.c_rr = -fg * (1.0 - b2 * (2.0 - b2) * (1.0 + s4)) / a;
  h.c_nn = -fg * (1.0 - 2.0 * b2 + b4 * (1.0 + s4)) / a;
  h.c_kk = -fg * (1.0 - b2 * sin2t * sin2t / 2.0 - b4 * (1.0 + s4)) / a;
  h.c_kr = fg * std::sqrt(1.0 - b2) * b2 * sin2t * s2 / a;
  return h;
}

}  // namespace

CorrMatrix HelicityCorr::matrix() const {
  CorrMatrix m = CorrMatrix::Zero();
  m(0, 0) = c_kk;
  m(1, 1) = c_rr;
  m(2, 2) = c_nn;
  m(0, 1) = m(1, 0) = c_kr;
  return m;
}

HelicityCorr process_corr(Process process, double beta, double theta) {
  check_phase_point(beta, theta);
  return process == Process::QQbar ? qqbar(beta, theta) : gg(beta, theta);
}

CorrMatrix mixture_corr(const PhasePoint& p) {
  if (!(p.w_gg >= 0.0 && p.w_gg <= 1.0)) throw DomainError("w_gg must lie in [0, 1]");
  check_phase_point(p.beta, p.theta);
  CorrMatrix c = CorrMatrix::Zero();
  if (p.w_gg > 0.0) c += p.w_gg * gg(p.beta, p.theta).matrix();
  if (p.w_gg < 1.0) c += (1.0 - p.w_gg) * qqbar(p.beta, p.theta).matrix();
  return c;
}

CpmEigen cpm_eigen(const HelicityCorr& h) {
  const double mean = 0.5 * (h.c_kk + h.c_rr);
  const double radius = std::hypot(0.5 * (h.c_kk - h.c_rr), h.c_kr);
  return {mean + radius, h.c_nn, mean - radius};
}

FanoState ttbar_state(const PhasePoint& p) {
  return FanoState(Vec3::Zero(), Vec3::Zero(), mixture_corr(p));
}

FanoState integrated_state(double c_perp, double c_z) { return bell_diagonal(c_perp, c_perp, c_z); }

}  // namespace qpredict
