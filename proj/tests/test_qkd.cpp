#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "qpredict/errors.hpp"
#include "qpredict/noise_channels.hpp"
#include "qpredict/predictability.hpp"
#include "qpredict/qkd.hpp"

using namespace qpredict;
using doctest::Approx;
using std::numbers::pi;

namespace {

const MeasurementDirection kZ = MeasurementDirection::z();
const MeasurementDirection kX = MeasurementDirection::x();

double h(double p) { return -p * std::log2(p) - (1 - p) * std::log2(1 - p); }

std::pair<MeasurementDirection, MeasurementDirection> random_pair(std::mt19937_64& rng) {
  const Vec3 a = random_direction(rng).vec();
  Vec3 b = random_direction(rng).vec();
  b = (b - b.dot(a) * a).normalized();
  return {MeasurementDirection::normalized(a), MeasurementDirection::normalized(b)};
}

}  // namespace

TEST_CASE("binary_entropy") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == 1.0);
  // -0.11 log2 0.11 - 0.89 log2 0.89, reference from 30-digit arithmetic
  CHECK(std::abs(binary_entropy(0.11) - 0.49991595816452800) < 1e-14);
  CHECK(std::abs(binary_entropy(0.11) - 0.49993) < 1e-4);
  CHECK_THROWS_AS(binary_entropy(-0.1), DomainError);
  CHECK_THROWS_AS(binary_entropy(1.1), DomainError);
}

TEST_CASE("k_bb84") {
  CHECK(k_bb84(bell_diagonal(1, -1, 1)) == Approx(1.0));
  CHECK(k_bb84(FanoState::maximally_mixed()) == -1.0);
  const double ex = (1 - std::sqrt(0.8)) / 2;
  const double ref = 1 - h(0.1) - h(ex);
  CHECK(k_bb84(adc_state(0, 0.2)) == Approx(ref).epsilon(1e-13));
  CHECK(std::abs(ref - 0.232) < 1e-3);
}

TEST_CASE("k_star") {
  CHECK(k_star(bell_diagonal(1, -1, 1), kZ, kX) == Approx(1.0));
  CHECK(k_star(FanoState::maximally_mixed(), kZ, kX) == -1.0);
  const FanoState adc = adc_state(0, 0.2);
  CHECK(k_star(adc, kZ, kX) == Approx(k_bb84(adc)).epsilon(1e-13));
  CHECK((min_bayes_risk(adc, kZ).b_star.vec() - Vec3::UnitZ()).norm() < 1e-14);
  CHECK((min_bayes_risk(adc, kX).b_star.vec() - Vec3::UnitX()).norm() < 1e-14);
  CHECK_THROWS_AS(k_star(adc, kZ, MeasurementDirection::normalized(Vec3(1, 0, 1))), NotOrthogonal);
}

TEST_CASE("k_star_opt examples") {
  const auto phi = k_star_opt(bell_diagonal(1, -1, 1));
  CHECK(phi.k_star == Approx(1.0));
  CHECK(phi.k_bb84 == Approx(1.0));

  const auto w = k_star_opt(bell_diagonal(-0.8, -0.8, -0.8));
  CHECK(w.k_star == Approx(1 - 2 * h(0.1)).epsilon(1e-12));
  CHECK(w.k_bb84 == Approx(w.k_star).epsilon(1e-12));

  // a one-sided damping strong enough to break BB84 but not the modified protocol
  const auto adc = k_star_opt(adc_state(0, 0.35));
  CHECK(adc.k_bb84 < 0);
  CHECK(adc.k_star > 0);
  CHECK_FALSE(adc.secure_bb84);
  CHECK(adc.secure_star);

  // symmetric damping at 0.35 is insecure for both: L_min >= 0.175 in every direction
  const auto sym = k_star_opt(adc_state(0.35, 0.35));
  CHECK(sym.k_bb84 < 0);
  CHECK(sym.k_star < 0);
}

TEST_CASE("k_star_opt report invariants on random states") {
  std::mt19937_64 rng(3);
  for (std::uint64_t i = 0; i < 10; ++i) {
    const FanoState s = random_state(i);
    const auto r = k_star_opt(s);
    CHECK(std::abs(r.a1_star.dot(r.a2_star.vec())) < 1e-10);
    CHECK(r.k_star >= r.k_bb84 - 1e-9);
    CHECK(std::abs(k_star(s, r.a1_star, r.a2_star) - r.k_star) < 1e-12);
    CHECK((min_bayes_risk(s, r.a1_star).b_star.vec() - r.b1_star.vec()).norm() < 1e-12);
    for (int k = 0; k < 100; ++k) {
      const auto [a1, a2] = random_pair(rng);
      CHECK(r.k_star >= k_star(s, a1, a2) - 1e-9);
    }
  }
}

TEST_CASE("rates under local rotations") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0, 2 * pi), cb(-1, 1);
  for (std::uint64_t i = 0; i < 5; ++i) {
    const FanoState s = random_state(20 + i);
    const Mat3 ra = euler_zyz(u(rng), std::acos(cb(rng)), u(rng));
    const Mat3 rb = euler_zyz(u(rng), std::acos(cb(rng)), u(rng));
    const FanoState r = local_rotate(s, ra, rb);
    const auto [a1, a2] = random_pair(rng);
    CHECK(std::abs(k_star(r, MeasurementDirection::normalized(ra * a1.vec()),
                          MeasurementDirection::normalized(ra * a2.vec())) -
                   k_star(s, a1, a2)) < 1e-12);
    CHECK(std::abs(k_star_opt(r).k_star - k_star_opt(s).k_star) < 1e-9);
  }
}

TEST_CASE("Bell states have unit rates") {
  for (int k = 1; k <= 4; ++k) {
    const FanoState s(Vec3::Zero(), Vec3::Zero(), bell_correlation(k));
    CHECK(k_bb84(s) == 1.0);
    CHECK(k_star_opt(s).k_star == 1.0);
  }
}

TEST_CASE("Bayes-risk bound dominates any QBER bound") {
  std::mt19937_64 rng(5);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const FanoState s = random_state(i);
    const auto [a1, a2] = random_pair(rng);
    const auto b1 = random_direction(rng), b2 = random_direction(rng);
    CHECK(k_star(s, a1, a2) >=
          1 - binary_entropy(qber(s, a1, b1)) - binary_entropy(qber(s, a2, b2)) - 1e-12);
  }
}

TEST_CASE("security thresholds for one-sided damping") {
  auto curve = [](double p) { return adc_state(0, p); };
  const double bb84 = security_threshold(curve, Rate::BB84, 0.0, 1.0);
  const double star = security_threshold(curve, Rate::Star, 0.0, 1.0);
  CHECK(bb84 >= 0.25);
  CHECK(bb84 <= 0.35);
  CHECK(star >= 0.35);
  CHECK(star <= 0.45);
  CHECK(k_bb84(curve(bb84 - 1e-3)) > 0);
  CHECK(k_bb84(curve(bb84 + 1e-3)) < 0);
  CHECK_THROWS_AS(security_threshold(curve, Rate::BB84, 0.0, 0.1), NoSignChange);
}
