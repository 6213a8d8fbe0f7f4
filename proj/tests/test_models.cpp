#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lcs/models.hpp"
#include "support.hpp"

using namespace lcs;

namespace {

constexpr double pi = std::numbers::pi;

SpinBosonParams fig1(double delta) { return {2.0, 1.0, delta, 0.0}; }

/// Row vector of the trace functional in the row-major vectorization.
Eigen::RowVectorXcd trace_row(int d) {
  Eigen::RowVectorXcd r = Eigen::RowVectorXcd::Zero(d * d);
  for (int n = 0; n < d; ++n) r(n * d + n) = 1.0;
  return r;
}

}  // namespace

TEST_CASE("chi: hand-evaluated value at resonance") {
  const auto p = fig1(0.0);
  CHECK(p.delta_prime() == 1.0);
  CHECK(p.g_prime() == 1.0);
  CHECK(p.s() == 1.0);
  CHECK(std::abs(p.r() - 5.0 / 3.0) < 1e-15);
  const Complex x = chi(p, 0.0);
  CHECK(std::abs(x - Complex(0.0, 2.0)) < 1e-15);
  CHECK(std::abs(spin_boson_gamma(p, 0.0)) < 1e-15);
  CHECK(std::abs(spin_boson_splitting(p, 0.0) - 2.0) < 1e-15);
}

TEST_CASE("chi: decoupling limit") {
  const SpinBosonParams p{2.0, 1e-12, 1.0, 0.0};
  for (double t : {0.0, 0.7, 3.0}) {
    const Complex x = chi(p, t);
    CHECK(std::abs(x - Complex(0.0, 2.0)) < 1e-11);
  }
}

TEST_CASE("chi: figure parameters are valid and periodic") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (double delta : {0.0, 1.0, 2.0}) {
    const auto p = fig1(delta);
    CHECK_NOTHROW(p.validate());
    const double period = 2.0 * pi / p.delta_prime();
    for (int i = 0; i < 10; ++i) {
      const double t = u(rng);
      if (delta == 0.0 && std::abs(std::cos(0.5 * t)) < 1e-3) continue;
      CHECK(std::abs(chi(p, t + period) - chi(p, t)) < 1e-12 * std::max(1.0, std::abs(chi(p, t))));
    }
  }
}

TEST_CASE("chi: resonance pole at Delta = 0") {
  const auto p = fig1(0.0);
  CHECK_THROWS_AS(chi(p, pi), NumericalError);
  const auto poles = p.poles(0.0, 10.0);
  REQUIRE(poles.size() == 2);
  CHECK(poles[0] == doctest::Approx(pi));
  CHECK(poles[1] == doctest::Approx(3.0 * pi));
  CHECK(fig1(1.0).poles(0.0, 100.0).empty());
  CHECK(p.poles(4.0, 10.0).size() == 1);
}

TEST_CASE("analytic continuations reduce to Re and Im of chi on the real axis") {
  const auto p = fig1(1.0);
  for (double t : {0.1, 1.3, 4.0}) {
    CHECK(std::abs(spin_boson_gamma(p, t) - chi(p, t).real()) < 1e-14);
    CHECK(std::abs(spin_boson_splitting(p, t) - chi(p, t).imag()) < 1e-14);
  }
  // continuation off the axis stays holomorphic: gamma + i Omega = chi
  const Complex z(1.0, 0.3);
  CHECK(std::abs(spin_boson_gamma(p, z) + Complex(0.0, 1.0) * spin_boson_splitting(p, z) - chi(p, z)) < 1e-14);
}

TEST_CASE("the dissipation integrates to zero over one period") {
  for (double delta : {1.0, 2.0}) {
    const auto p = fig1(delta);
    const double period = 2.0 * pi / p.delta_prime();
    const int n = 4096;  // trapezoid is spectrally accurate for periodic integrands
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += spin_boson_gamma(p, period * k / n).real();
    CHECK(std::abs(sum * period / n) < 1e-12);
  }
}

TEST_CASE("su2_rates follow the Lindblad normalization") {
  const auto p = fig1(1.0);
  const auto r = su2_rates(p);
  CHECK(r.sigma() == -1);
  for (double t : {0.0, 0.8, 2.5}) {
    const Complex g = chi(p, t).real();
    CHECK(std::abs(r.gamma_plus(t)) == 0.0);
    CHECK(std::abs(r.gamma_minus(t) - 2.0 * g) < 1e-15);
    CHECK(std::abs(r.gamma_z(t) + 2.0 * g) < 1e-15);
    CHECK(std::abs(r.scalar(t) + g) < 1e-15);
    CHECK(std::abs(r.omega(t) - chi(p, t).imag()) < 1e-15);
  }
  SpinBosonParams thermal = p;
  thermal.nbar = 0.5;
  const auto rt = su2_rates(thermal);
  CHECK(std::abs(rt.gamma_plus(0.8) - chi(p, 0.8).real()) < 1e-15);
  CHECK(std::abs(rt.scalar(0.8) + 2.0 * chi(p, 0.8).real()) < 1e-15);
}

TEST_CASE("su2_rates: decoupled system") {
  const auto r = su2_rates({2.0, 0.0, 1.0, 0.0});
  for (double t : {0.0, 1.0, 5.0}) {
    CHECK(std::abs(r.gamma_minus(t)) == 0.0);
    CHECK(std::abs(r.gamma_z(t)) == 0.0);
    CHECK(std::abs(r.omega(t) - 2.0) < 1e-15);
  }
}

TEST_CASE("spin-boson parameter validation") {
  CHECK_THROWS_AS(su2_rates({2.0, 1.0, 0.0, -1.0}), DomainError);
  CHECK_THROWS_AS(su2_rates({0.5, 1.0, 0.0, 0.0}), DomainError);  // r singular
  CHECK_THROWS_AS(su2_rates({NAN, 1.0, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(su2_rates({2.0, 0.0, -1.0, 0.0}), DomainError);
}

TEST_CASE("su11_rates mappings") {
  OscillatorBathParams p;
  p.gamma = 0.7;
  p.a = 0.3;
  p.big_gamma = 2.0;
  const auto r = su11_rates(p);
  CHECK(r.sigma() == 1);
  for (double t : {0.0, 0.4, 1.9}) {
    const double g = 0.7 * (0.3 + std::cos(2.0 * t));
    CHECK(std::abs(r.gamma_plus(t)) == 0.0);
    CHECK(std::abs(r.gamma_minus(t) - 2.0 * g) < 1e-15);
    CHECK(std::abs(r.gamma_z(t) + 2.0 * g) < 1e-15);
    CHECK(std::abs(r.scalar(t) - g) < 1e-15);
  }
  p.nbar = 0.5;
  const auto rt = su11_rates(p);
  CHECK(std::abs(rt.gamma_plus(0.4) - 2.0 * 0.5 * p.rate(0.4)) < 1e-15);
  CHECK(std::abs(rt.gamma_z(0.4) + 4.0 * p.rate(0.4)) < 1e-15);

  const auto fig2 = OscillatorBathParams::modulated(1.0, 0.0);
  CHECK(fig2.a == 1.0);
  CHECK(fig2.big_gamma == 8.0);
  CHECK(fig2.gamma == 0.5);
  CHECK(std::abs(fig2.rate(0.3) - 0.5 * (1.0 + std::cos(2.4))) < 1e-15);
  OscillatorBathParams fig3 = fig2;
  fig3.a = 0.0;
  CHECK(std::abs(fig3.rate(0.3) - 0.5 * std::cos(2.4)) < 1e-15);
  CHECK(std::abs(OscillatorBathParams::constant(0.4, 0.5).rate(7.0) - 0.4) < 1e-15);

  OscillatorBathParams bad;
  bad.gamma = -1.0;
  CHECK_THROWS_AS(su11_rates(bad), DomainError);
  bad.gamma = 1.0;
  bad.nbar = -0.1;
  CHECK_THROWS_AS(su11_lindblad(bad, 8), DomainError);
  CHECK_THROWS_AS(su11_lindblad(OscillatorBathParams{}, 1), DomainError);
}

TEST_CASE("dense_liouvillian: closed two-level system") {
  const auto r = RateFunctions::constant(Algebra::SU2, 0, 0, 0, 0, 2.0);
  const Matrix M = dense_liouvillian(Algebra::SU2, r, 2, 0.0);
  Matrix expect = Matrix::Zero(4, 4);
  expect(1, 1) = Complex(0.0, -2.0);  // |up><dn|, R = +1
  expect(2, 2) = Complex(0.0, 2.0);
  CHECK(testing::max_abs(M - expect) == 0.0);
  const Eigen::ComplexEigenSolver<Matrix> es(M);
  CHECK(es.eigenvalues().real().cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(dense_liouvillian(Algebra::SU2, r, 3, 0.0), DimensionError);
}

TEST_CASE("dense_liouvillian: trace functional annihilates every vector") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  const auto r2 = su2_rates(fig1(1.0));
  const int N = 12;
  const auto r11 = su11_rates(OscillatorBathParams::modulated(1.0, 0.5));
  for (int i = 0; i < 10; ++i) {
    const double t = u(rng);
    const Eigen::RowVectorXcd tr2 = trace_row(2) * dense_liouvillian(Algebra::SU2, r2, 2, t);
    CHECK(tr2.cwiseAbs().maxCoeff() < 1e-12);
    // the Fock cutoff breaks trace preservation only on the top level
    const Eigen::RowVectorXcd tr11 = trace_row(N) * dense_liouvillian(Algebra::SU11, r11, N, t);
    for (int k = 0; k < N * N; ++k)
      if (k / N < N - 1 && k % N < N - 1) CHECK(std::abs(tr11(k)) < 1e-12);
  }
}

TEST_CASE("dense_liouvillian: vacuum is stationary at zero temperature") {
  const auto r = su11_rates(OscillatorBathParams::modulated(1.0, 0.0));
  const Matrix M = dense_liouvillian(Algebra::SU11, r, 16, 0.0);
  const Vector vac = vectorize(DensityMatrix::outer(16, 0, 0)).entries();
  CHECK((M * vac).norm() < 1e-15);
}

TEST_CASE("dense_liouvillian equals the Lindblad generator built from jump operators") {
  std::mt19937_64 rng(10);
  SUBCASE("su(2)") {
    for (double nbar : {0.0, 0.7}) {
      SpinBosonParams p = fig1(2.0);
      p.nbar = nbar;
      for (double t : {0.3, 2.2}) {
        const Matrix a = dense_liouvillian(Algebra::SU2, su2_rates(p), 2, t);
        const Matrix b = lindblad_generator(su2_lindblad(p), t);
        for (int i = 0; i < 20; ++i) {
          const Vector v = testing::random_operator(rng, 2).reshaped<Eigen::RowMajor>();
          CHECK((a * v - b * v).norm() < 1e-12 * v.norm());
        }
      }
    }
  }
  SUBCASE("su(1,1)") {
    const int N = 10;
    for (double nbar : {0.0, 0.5}) {
      auto p = OscillatorBathParams::modulated(1.0, nbar);
      p.omega = [](Complex t) { return 1.0 + 0.2 * t; };
      const Matrix a = dense_liouvillian(Algebra::SU11, su11_rates(p), N, 0.9);
      const Matrix b = lindblad_generator(su11_lindblad(p, N), 0.9);
      for (int i = 0; i < 20; ++i) {
        const Vector v = testing::random_operator(rng, N, N - 2).reshaped<Eigen::RowMajor>();
        CHECK((a * v - b * v).norm() < 1e-12 * v.norm());
      }
    }
  }
}

TEST_CASE("ladder operators") {
  const Matrix a = Matrix(annihilation(5));
  CHECK(testing::max_abs(a - testing::fock_a(5)) == 0.0);
  const Matrix n = Matrix(number_operator(5));
  CHECK(testing::max_abs(n - (a.adjoint() * a)) < 1e-14);
}
