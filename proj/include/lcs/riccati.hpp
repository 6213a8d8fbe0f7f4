#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "lcs/liouville.hpp"

namespace lcs {

/// Coefficient bundle of a Liouvillian in the algebra,
///   L(t) = gamma_plus L+ + gamma_minus L- + gamma_z L0 + scalar - i omega R.
/// Each profile is real on the real axis. Models whose rates have real poles
/// supply their analytic continuation and list the poles in `singular_times`.
struct RateFunctions {
  Algebra kind = Algebra::SU2;
  Profile gamma_plus, gamma_minus, gamma_z, scalar, omega;
  /// Real poles of the rates inside [t0, t1]; empty function means none.
  std::function<std::vector<double>(double t0, double t1)> singular_times;

  int sigma() const { return sigma_of(kind); }
  std::vector<double> poles(double t0, double t1) const {
    return singular_times ? singular_times(t0, t1) : std::vector<double>{};
  }

  static RateFunctions constant(Algebra kind, double gamma_plus, double gamma_minus,
                                double gamma_z, double scalar = 0.0, double omega = 0.0);
  /// The same rates seen from a clock started at `dt`.
  RateFunctions shifted(double dt) const;
};

/// Disentangling coefficients at one time: the propagator is
///   exp(f_plus L+) exp(f_z L0) exp(f_minus L-) exp(u1_phase R) exp(scalar_weight).
struct DisentangleSample {
  double time = 0.0;
  Complex f_plus{}, f_z{}, f_minus{}, u1_phase{}, scalar_weight{};

  Complex f0_exp() const { return std::exp(f_z); }
};

struct DisentangleCoefficients {
  Algebra kind = Algebra::SU2;
  std::vector<DisentangleSample> samples;

  std::size_t size() const { return samples.size(); }
  const DisentangleSample& operator[](std::size_t i) const { return samples[i]; }
};

/// Closed-form coefficients for constant rates; f0_exp is exp(f_z).
struct ConstSolution {
  Complex f_plus, f0_exp, f_minus;
};

ConstSolution solve_const(double gamma_plus, double gamma_minus, double gamma_z, int sigma,
                          double t);

struct RiccatiOptions {
  double tol = 1e-10;
  double blowup = 1e12;
};

/// Integrates the Riccati equation for f_plus together with the quadratures for
/// f_z, f_minus, the u(1) phase and the scalar weight, reporting on `times`
/// (strictly increasing, starting at 0).
DisentangleCoefficients solve_ode(const RateFunctions& rates, std::span<const double> times,
                                  const RiccatiOptions& opts = {});

/// Convenience overload on an equispaced grid of n_out points over [0, t_end].
DisentangleCoefficients solve_ode(const RateFunctions& rates, double t_end, double tol,
                                  int n_out = 201);

std::vector<double> linspace(double a, double b, int n);

/// Applies the factored propagator to a Liouville vector. For su(1,1), trace
/// weight pushed past the Fock cutoff is added to *leaked when given.
LiouvilleVector apply_propagator(Algebra kind, const DisentangleSample& coeffs,
                                 const LiouvilleVector& v, double* leaked = nullptr);

/// exp(x gen) v for gen in {Plus, Minus} by power series.
LiouvilleVector exp_ladder(Algebra kind, Generator gen, Complex x, const LiouvilleVector& v,
                           double* leaked = nullptr);

void write_csv(std::ostream& os, const DisentangleCoefficients& coeffs);

}  // namespace lcs
