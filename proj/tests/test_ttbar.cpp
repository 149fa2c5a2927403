#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "qpredict/correlations.hpp"
#include "qpredict/errors.hpp"
#include "qpredict/qkd.hpp"
#include "qpredict/ttbar.hpp"

using namespace qpredict;
using doctest::Approx;
using std::numbers::pi;

TEST_CASE("process_corr examples") {
  const auto q = process_corr(Process::QQbar, 0, pi / 2);
  CHECK(q.c_rr == Approx(1.0));
  CHECK(std::abs(q.c_kk) < 1e-15);
  CHECK(std::abs(q.c_nn) < 1e-15);
  CHECK(std::abs(q.c_kr) < 1e-15);

  for (double t : {0.1, 1.0, 2.5}) {
    const auto g = process_corr(Process::GG, 0, t);
    CHECK(g.c_kk == Approx(-1.0));
    CHECK(g.c_rr == Approx(-1.0));
    CHECK(g.c_nn == Approx(-1.0));
    CHECK(std::abs(g.c_kr) < 1e-15);
    const FanoState s(Vec3::Zero(), Vec3::Zero(), g.matrix());
    CHECK(validate(s.t_a(), s.t_b(), s.c()).valid);
  }

  const auto hi = process_corr(Process::GG, 0.9999, pi / 2);
  CHECK(hi.c_kk == Approx(1.0).epsilon(1e-3));
  CHECK(hi.c_rr == Approx(1.0).epsilon(1e-3));
  CHECK(hi.c_nn == Approx(-1.0).epsilon(1e-3));
  CHECK(std::abs(hi.c_kr) < 1e-3);

  CHECK_THROWS_AS(process_corr(Process::GG, 1 - 1e-14, 1e-8), DomainError);
  CHECK_THROWS_AS(process_corr(Process::QQbar, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(process_corr(Process::QQbar, 0.5, 0.0), DomainError);
}

TEST_CASE("mixture_corr") {
  const double b = 0.6, t = 0.9;
  CHECK((mixture_corr({b, t, 0}) - process_corr(Process::QQbar, b, t).matrix()).norm() == 0.0);
  CHECK((mixture_corr({b, t, 1}) - process_corr(Process::GG, b, t).matrix()).norm() == 0.0);
  CHECK_THROWS_AS(mixture_corr({b, t, 1.5}), DomainError);
  for (double w : {0.0, 0.3, 1 / std::sqrt(2.0), 0.9}) {
    for (double th : {0.3, pi / 4, 2.0}) {
      Eigen::SelfAdjointEigenSolver<Mat3> es(mixture_corr({0, th, w}));
      Vec3 ev = es.eigenvalues();
      CHECK(ev(2) == Approx(1 - 2 * w).epsilon(1e-13));
      CHECK(ev(0) == Approx(-w).epsilon(1e-13));
      CHECK(ev(1) == Approx(-w).epsilon(1e-13));
    }
  }
}

TEST_CASE("cpm_eigen") {
  HelicityCorr h;
  h.c_kk = 0.3;
  h.c_rr = -0.2;
  const auto e = cpm_eigen(h);
  CHECK(e.c_plus == 0.3);
  CHECK(e.c_minus == -0.2);

  const auto q = cpm_eigen(process_corr(Process::QQbar, 0, pi / 4));
  CHECK(q.c_plus == Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(q.c_minus) < 1e-14);
  CHECK(std::abs(q.c_nn) < 1e-14);

  const auto g = cpm_eigen(process_corr(Process::GG, 0, 1.0));
  CHECK(g.c_plus == Approx(-1.0));
  CHECK(g.c_minus == Approx(-1.0));

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> ub(0, 0.99), ut(0.01, pi - 0.01);
  for (int i = 0; i < 1000; ++i) {
    const auto proc = i % 2 ? Process::GG : Process::QQbar;
    const auto hc = process_corr(proc, ub(rng), ut(rng));
    const auto c = cpm_eigen(hc);
    Eigen::SelfAdjointEigenSolver<Mat3> es(hc.matrix());
    std::array<double, 3> mine{c.c_plus, c.c_nn, c.c_minus};
    std::sort(mine.begin(), mine.end());
    for (int k = 0; k < 3; ++k) CHECK(std::abs(mine[k] - es.eigenvalues()(k)) < 1e-12);
  }
}

TEST_CASE("ttbar_state") {
  const FanoState singlet = ttbar_state({0, 1.0, 1});
  CHECK((singlet.c() - bell_correlation(4)).norm() < 1e-14);
  CHECK(ppt_min_eigenvalue(ttbar_state({0, pi / 2, 0})) >= -1e-12);
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j)
      for (int k = 0; k < 5; ++k) {
        const PhasePoint p{0.99 * i / 19.0, pi * (j + 0.5) / 20.0, k / 4.0};
        CHECK_NOTHROW(ttbar_state(p));
      }
  for (int j = 1; j < 40; ++j) {
    const FanoState s = ttbar_state({0, pi * j / 40.0, 0});
    CHECK(ppt_min_eigenvalue(s) >= -1e-12);
  }
}

TEST_CASE("Horodecki boundary of the threshold mixture") {
  const double w0 = 1 / std::sqrt(2.0);
  CHECK(horodecki_m(ttbar_state({0, pi / 4, w0})) == Approx(1.0).epsilon(1e-13));
  CHECK(horodecki_m(ttbar_state({0, pi / 4, w0 - 1e-3})) < 1);
  CHECK(horodecki_m(ttbar_state({0, pi / 4, w0 + 1e-3})) > 1);
}

TEST_CASE("integrated_state") {
  CHECK(integrated_state(0, 0).c().norm() == 0.0);
  CHECK((integrated_state(-1, -1).c() - bell_correlation(4)).norm() == 0.0);
  const FanoState s = integrated_state(0.5, -0.9);
  CHECK(validate(s.t_a(), s.t_b(), s.c()).valid);
  CHECK(std::isfinite(k_bb84(s)));
  CHECK_THROWS_AS(integrated_state(1, 1), NonPhysical);
}
