#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qpredict/errors.hpp"
#include "qpredict/twoqubit_state.hpp"

using namespace qpredict;
using doctest::Approx;

namespace {

double max_diff(const Mat3& a, const Mat3& b) { return (a - b).cwiseAbs().maxCoeff(); }
double max_diff(const Vec3& a, const Vec3& b) { return (a - b).cwiseAbs().maxCoeff(); }

Mat3 random_rotation(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> cb(-1.0, 1.0);
  return euler_zyz(u(rng), std::acos(cb(rng)), u(rng));
}

}  // namespace

TEST_CASE("measurement direction must be a unit vector") {
  CHECK_NOTHROW(MeasurementDirection(0, 0, 1));
  CHECK_THROWS_AS(MeasurementDirection(0, 0, 1.1), InvalidDirection);
  CHECK_THROWS_AS(MeasurementDirection::normalized(Vec3::Zero()), InvalidDirection);
  CHECK(MeasurementDirection::normalized(Vec3(3, 0, 4)).vec()(2) == Approx(0.8));
}

TEST_CASE("density_matrix examples") {
  SUBCASE("maximally mixed") {
    const auto rho = density_matrix(FanoState::maximally_mixed());
    CHECK((rho - Mat4c::Identity() / 4.0).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("Phi+") {
    const auto rho = density_matrix(bell_diagonal(1, -1, 1));
    CHECK((rho - oracle::phi_plus()).cwiseAbs().maxCoeff() < 1e-15);
    const auto ev = oracle::eigenvalues(rho);
    CHECK(ev(3) == Approx(1.0).epsilon(1e-12));
    for (int i = 0; i < 3; ++i) CHECK(std::abs(ev(i)) < 1e-12);
  }
  SUBCASE("pure product |00>") {
    const Mat3 zz = Vec3::UnitZ() * Vec3::UnitZ().transpose();
    const auto rho = density_matrix(FanoState(Vec3::UnitZ(), Vec3::UnitZ(), zz));
    CHECK(std::abs(rho(0, 0) - 1.0) < 1e-15);
    CHECK(rho.cwiseAbs().sum() == Approx(1.0));
  }
}

TEST_CASE("from_density_matrix examples and errors") {
  const FanoState mm = from_density_matrix(Mat4c::Identity() / 4.0);
  CHECK(mm.t_a().norm() < 1e-15);
  CHECK(mm.c().norm() < 1e-15);

  const FanoState phi = from_density_matrix(oracle::phi_plus());
  CHECK(max_diff(phi.c(), Mat3(Vec3(1, -1, 1).asDiagonal())) < 1e-12);
  CHECK(phi.t_a().norm() < 1e-12);
  CHECK(phi.t_b().norm() < 1e-12);

  Mat4c bad = Mat4c::Identity() / 4.0;
  bad(0, 1) = 0.1;
  CHECK_THROWS_AS(from_density_matrix(bad), NonPhysical);
  CHECK_THROWS_AS(from_density_matrix(Mat4c::Identity() / 2.0), NonPhysical);
  Mat4c neg = Mat4c::Zero();
  neg(0, 0) = 1.2;
  neg(1, 1) = -0.2;
  CHECK_THROWS_AS(from_density_matrix(neg), NonPhysical);
}

TEST_CASE("roundtrip through the density matrix for random states") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const FanoState s = random_state(seed);
    const FanoState r = from_density_matrix(density_matrix(s));
    CHECK(max_diff(r.t_a(), s.t_a()) < 1e-12);
    CHECK(max_diff(r.t_b(), s.t_b()) < 1e-12);
    CHECK(max_diff(r.c(), s.c()) < 1e-12);
  }
}

TEST_CASE("validate examples") {
  CHECK(validate(Vec3::Zero(), Vec3::Zero(), Mat3::Zero()).valid);

  const auto bad = validate(Vec3::Zero(), Vec3::Zero(), Mat3::Identity());
  CHECK_FALSE(bad.valid);
  CHECK(bad.min_eigenvalue == Approx(-0.5).epsilon(1e-12));
  CHECK(bell_diagonal_weights(1, 1, 1)[3] == Approx(-0.5));
  CHECK(bad.criteria_agree);

  const auto phi = validate(Vec3::Zero(), Vec3::Zero(), bell_correlation(1));
  CHECK(phi.valid);
  CHECK(phi.criteria_agree);
}

TEST_CASE("positivity polynomial: last condition is 256 det rho") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> n(0, 1);
  for (int k = 0; k < 200; ++k) {
    Mat4c h;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) h(i, j) = {n(rng), n(rng)};
    h = h + h.adjoint().eval();
    Mat4c rho = Mat4c::Identity() / 4.0 + 0.05 * (h - h.trace() / 4.0 * Mat4c::Identity());
    const FanoParams f = fano_params(rho);
    const auto rep = validate(f.t_a, f.t_b, f.c);
    CHECK(rep.conditions[2] == Approx(256.0 * rho.determinant().real()).epsilon(1e-9));
  }
}

TEST_CASE("polynomial conditions and eigenvalue test classify identically") {
  // Random Hermitian unit-trace matrices, about half of them not PSD.
  std::mt19937_64 rng(17);
  std::normal_distribution<double> n(0, 1);
  std::uniform_real_distribution<double> scale(0.0, 0.5);
  int mismatches = 0, checked = 0, psd = 0;
  for (int k = 0; k < 10000; ++k) {
    Mat4c h;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) h(i, j) = {n(rng), n(rng)};
    h = 0.5 * (h + h.adjoint().eval());
    h -= h.trace() / 4.0 * Mat4c::Identity();
    h /= h.norm();
    const Mat4c rho = Mat4c::Identity() / 4.0 + scale(rng) * h;
    const double lmin = oracle::eigenvalues(rho)(0);
    if (std::abs(lmin) < 1e-8) continue;
    ++checked;
    if (lmin > 0) ++psd;
    const FanoParams f = fano_params(rho);
    const auto rep = validate(f.t_a, f.t_b, f.c);
    if (rep.conditions_hold != (lmin > 0)) ++mismatches;
  }
  CHECK(checked > 9900);
  CHECK(psd > 2000);
  CHECK(checked - psd > 2000);
  CHECK(mismatches == 0);
}

TEST_CASE("bell_diagonal examples") {
  CHECK(max_diff(bell_diagonal(1, -1, 1).c(), bell_correlation(1)) == 0.0);
  for (int i = 0; i <= 20; ++i) {
    const double w = i / 20.0;
    const FanoState s = bell_diagonal(-w, -w, -w);
    const Mat4c ref = oracle::werner(w);
    CHECK((density_matrix(s) - ref).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(oracle::eigenvalues(ref)(0) >= -1e-15);
  }
  CHECK_THROWS_AS(bell_diagonal(1, 1, 1), NonPhysical);
  CHECK_THROWS_AS(bell_correlation(5), DomainError);
}

TEST_CASE("Bell correlation matrices match the Bell kets") {
  const double r = 1.0 / std::sqrt(2.0);
  const Eigen::Vector4cd kets[4] = {{r, 0, 0, r}, {r, 0, 0, -r}, {0, r, r, 0}, {0, r, -r, 0}};
  for (int k = 1; k <= 4; ++k) {
    const FanoState s = from_density_matrix(oracle::ket_projector(kets[k - 1]));
    CHECK(max_diff(s.c(), bell_correlation(k)) < 1e-12);
  }
}

TEST_CASE("classical_quantum") {
  const FanoState s =
      classical_quantum(0.5, MeasurementDirection::z(), Vec3::UnitX(), -Vec3::UnitX());
  CHECK(s.t_a().norm() < 1e-15);
  CHECK(s.t_b().norm() < 1e-15);
  CHECK(max_diff(s.c(), Vec3::UnitZ() * Vec3::UnitX().transpose()) < 1e-15);
  CHECK(s.c().squaredNorm() == Approx(1.0));

  const Vec3 tb(0.1, 0.2, 0.3);
  const FanoState p = classical_quantum(1.0, MeasurementDirection::x(), tb, Vec3::Zero());
  CHECK(max_diff(p.c(), p.t_a() * p.t_b().transpose()) < 1e-15);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 100; ++i) {
    const double p0 = u(rng);
    const auto n_a = random_direction(rng);
    const Vec3 b0 = u(rng) * random_direction(rng).vec();
    const Vec3 b1 = u(rng) * random_direction(rng).vec();
    CHECK(std::abs(classical_quantum(p0, n_a, b0, b1).c().determinant()) < 1e-12);
  }
  CHECK_THROWS_AS(classical_quantum(1.5, MeasurementDirection::z(), tb, tb), DomainError);
}

TEST_CASE("singular values") {
  CHECK(max_diff(singular_values(bell_correlation(1)), Vec3(1, 1, 1)) < 1e-15);
  CHECK(max_diff(singular_values(Vec3::UnitZ() * Vec3::UnitX().transpose()), Vec3(1, 0, 0)) <
        1e-15);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int k = 0; k < 500; ++k) {
    Mat3 c;
    for (int i = 0; i < 9; ++i) c(i) = u(rng);
    const Vec3 sv = singular_values(c);
    CHECK(max_diff(sv, oracle::svd(c)) < 1e-12);
    // squared singular values against the Jacobi eigenvalues of C^T C
    const Vec3 ev = jacobi_eigen(c.transpose() * c).values;
    CHECK(max_diff(sv.cwiseProduct(sv), ev) < 1e-12);
    CHECK(sv(0) >= sv(1));
    CHECK(sv(1) >= sv(2));
    CHECK(sv(2) >= 0.0);
  }
}

TEST_CASE("jacobi eigen-solver against Eigen") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int k = 0; k < 500; ++k) {
    Mat3 m;
    for (int i = 0; i < 9; ++i) m(i) = u(rng);
    m = (m + m.transpose()).eval();
    const auto je = jacobi_eigen(m);
    Eigen::SelfAdjointEigenSolver<Mat3> es(m);
    CHECK(max_diff(je.values, es.eigenvalues().reverse()) < 1e-12);
    CHECK((m * je.vectors - je.vectors * je.values.asDiagonal()).norm() < 1e-12);
  }
}

TEST_CASE("local_rotate") {
  const FanoState s = random_state(42);
  const FanoState same = local_rotate(s, Mat3::Identity(), Mat3::Identity());
  CHECK(max_diff(same.c(), s.c()) == 0.0);

  const Mat3 rz = euler_zyz(std::numbers::pi / 2, 0, 0);
  const FanoState bd = local_rotate(bell_diagonal(0.2, -0.3, 0.4), rz, rz);
  CHECK(max_diff(bd.c(), Mat3(Vec3(-0.3, 0.2, 0.4).asDiagonal())) < 1e-15);

  Mat3 reflect = Mat3::Identity();
  reflect(2, 2) = -1;
  CHECK_THROWS_AS(local_rotate(s, reflect, Mat3::Identity()), InvalidRotation);

  std::mt19937_64 rng(8);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const FanoState r = random_state(100 + i);
    const FanoState rot = local_rotate(r, random_rotation(rng), random_rotation(rng));
    CHECK(validate(rot.t_a(), rot.t_b(), rot.c()).valid);
    CHECK(max_diff(singular_values(rot.c()), singular_values(r.c())) < 1e-12);
  }
}

TEST_CASE("random_state") {
  const FanoState a = random_state(7), b = random_state(7);
  CHECK(max_diff(a.c(), b.c()) == 0.0);
  CHECK(max_diff(a.t_a(), b.t_a()) == 0.0);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const FanoState s = random_state(seed);
    CHECK(validate(s.t_a(), s.t_b(), s.c()).valid);
  }
}

TEST_CASE("random_state has unbiased local Bloch vector") {
  constexpr int n = 100000;
  Vec3 sum = Vec3::Zero(), sq = Vec3::Zero();
  for (int i = 0; i < n; ++i) {
    const Vec3 t = random_state(1000000 + i).t_a();
    sum += t;
    sq += t.cwiseProduct(t);
  }
  const Vec3 mean = sum / n;
  const Vec3 sd = (sq / n - mean.cwiseProduct(mean)).cwiseSqrt();
  for (int k = 0; k < 3; ++k) CHECK(std::abs(mean(k)) < 3.0 * sd(k) / std::sqrt(double(n)));
}
