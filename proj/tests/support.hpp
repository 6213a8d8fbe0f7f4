#pragma once

// Test-only reference computations. Nothing here calls into the superoperator,
// Riccati or coherent-state code paths it is used to check.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace lcs::testing {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;

inline M sigma_plus() {
  M s = M::Zero(2, 2);
  s(0, 1) = 1.0;
  return s;
}
inline M sigma_minus() { return sigma_plus().adjoint(); }
inline M sigma_z() {
  M s = M::Zero(2, 2);
  s(0, 0) = 1.0;
  s(1, 1) = -1.0;
  return s;
}
inline M fock_a(int n) {
  M a = M::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(double(k));
  return a;
}

/// Superoperator generators from their defining matrix products.
enum class Gen { Plus, Minus, Zero, R, Casimir };

inline M su2_reference(Gen g, const M& rho) {
  const M sp = sigma_plus(), sm = sigma_minus(), sz = sigma_z();
  switch (g) {
    case Gen::Plus: return sp * rho * sm;
    case Gen::Minus: return sm * rho * sp;
    case Gen::Zero: return 0.25 * (sz * rho + rho * sz);
    case Gen::R: return 0.5 * (sz * rho - rho * sz);
    case Gen::Casimir: return 0.375 * (rho + sz * rho * sz);
  }
  return M();
}

/// Truncated Fock space: products use (n+1)-dimensional ladder matrices and are
/// cut back to n, which zeroes amplitude pushed past the cutoff.
inline M su11_reference(Gen g, const M& rho) {
  const int n = static_cast<int>(rho.rows());
  const M a = fock_a(n + 1);
  M big = M::Zero(n + 1, n + 1);
  big.topLeftCorner(n, n) = rho;
  const M num = a.adjoint() * a;
  M out;
  switch (g) {
    case Gen::Plus: out = a.adjoint() * big * a; break;
    case Gen::Minus: out = a * big * a.adjoint(); break;
    case Gen::Zero: out = 0.5 * (num * big + big * num + big); break;
    case Gen::R: out = num * big - big * num; break;
    case Gen::Casimir:
      out = 0.25 * (-big + num * num * big + big * num * num - 2.0 * num * big * num);
      break;
  }
  return out.topLeftCorner(n, n);
}

inline M random_operator(std::mt19937_64& rng, int dim, int support = -1) {
  std::normal_distribution<double> nd;
  if (support < 0) support = dim;
  M m = M::Zero(dim, dim);
  for (int i = 0; i < support; ++i)
    for (int j = 0; j < support; ++j) m(i, j) = C(nd(rng), nd(rng));
  return m;
}

inline M random_density(std::mt19937_64& rng, int dim, int support = -1) {
  const M g = random_operator(rng, dim, support);
  M rho = g * g.adjoint();
  rho /= rho.trace();
  return rho;
}

inline M pure_state(const Eigen::VectorXcd& psi) {
  const Eigen::VectorXcd n = psi / psi.norm();
  return n * n.adjoint();
}

struct CircleFit {
  C center;
  double radius = 0.0;
  double max_residual = 0.0;
};

/// Algebraic least-squares circle fit: x^2 + y^2 + D x + E y + F = 0.
inline CircleFit kasa_fit(const std::vector<C>& pts) {
  Eigen::MatrixXd A(pts.size(), 3);
  Eigen::VectorXd b(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    A(i, 0) = pts[i].real();
    A(i, 1) = pts[i].imag();
    A(i, 2) = 1.0;
    b(i) = -std::norm(pts[i]);
  }
  const Eigen::Vector3d s = A.colPivHouseholderQr().solve(b);
  CircleFit f;
  f.center = C(-0.5 * s(0), -0.5 * s(1));
  f.radius = std::sqrt(std::norm(f.center) - s(2));
  for (const C& p : pts) f.max_residual = std::max(f.max_residual, std::abs(std::abs(p - f.center) - f.radius));
  return f;
}

/// Classical fixed-step RK4, independent of the adaptive integrator under test.
inline Eigen::VectorXcd rk4(const std::function<Eigen::VectorXcd(double, const Eigen::VectorXcd&)>& f,
                            Eigen::VectorXcd y, double t0, double t1, int steps) {
  const double h = (t1 - t0) / steps;
  double t = t0;
  for (int i = 0; i < steps; ++i) {
    const auto k1 = f(t, y);
    const auto k2 = f(t + 0.5 * h, y + 0.5 * h * k1);
    const auto k3 = f(t + 0.5 * h, y + 0.5 * h * k2);
    const auto k4 = f(t + h, y + h * k3);
    y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += h;
  }
  return y;
}

inline double max_abs(const M& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace lcs::testing
