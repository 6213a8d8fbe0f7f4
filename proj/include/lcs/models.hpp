#pragma once

#include "lcs/oracle.hpp"
#include "lcs/riccati.hpp"

namespace lcs {

/// Two-level system with splitting omega coupled to one bath mode of frequency
/// omega + delta; the reduced dynamics is a time-local Lindblad equation with
/// dissipation Re chi(t) and splitting Im chi(t).
struct SpinBosonParams {
  double omega = 2.0;
  double g = 1.0;
  double delta = 0.0;
  double nbar = 0.0;

  double delta_prime() const;  // sqrt(delta^2 + g^2)
  double g_prime() const;      // delta' - delta
  double s() const;            // g' / (delta + delta')
  double r() const;
  void validate() const;
  /// Real-axis poles of chi in [t0, t1]; only present when s = 1 (delta = 0).
  std::vector<double> poles(double t0, double t1) const;
};

/// chi(t) = i (omega - g'/2) (r s + e^{i delta' t}) / (s + e^{i delta' t}).
/// Accepts complex t for the analytic continuation used around poles.
Complex chi(const SpinBosonParams& p, Complex t);

/// Analytic continuations of gamma(t) = Re chi(t) and Omega(t) = Im chi(t).
Complex spin_boson_gamma(const SpinBosonParams& p, Complex t);
Complex spin_boson_splitting(const SpinBosonParams& p, Complex t);

/// Generator coefficients of the spin-boson Liouvillian (sigma = -1):
///   2 gamma nbar L+ + 2 gamma (nbar + 1) L- - 2 gamma L0 - gamma (2 nbar + 1) - i Omega R,
/// i.e. the Lindblad equation with A_+ = sigma+, A_- = sigma- at rates
/// gamma nbar and gamma (nbar + 1).
RateFunctions su2_rates(const SpinBosonParams& p);

/// The same model as explicit Hamiltonian and jump operators.
LindbladModel su2_lindblad(const SpinBosonParams& p);

/// Damped oscillator with gamma_1(t) = gamma_2(t) = gamma (a + cos(big_gamma t)).
struct OscillatorBathParams {
  Profile omega = [](Complex) { return Complex(1.0); };
  double gamma = 1.0;
  double a = 1.0;
  double big_gamma = 0.0;
  double nbar = 0.0;

  Complex rate(Complex t) const;
  void validate() const;

  /// gamma_1,2(t) = gamma (1 + cos(8 gamma t)) / 2
  static OscillatorBathParams modulated(double gamma, double nbar);
  /// gamma_1,2(t) = gamma
  static OscillatorBathParams constant(double gamma, double nbar);
};

/// Generator coefficients (sigma = +1):
///   [g1 (n+1) - g2 n] - i omega R + 2 g1 (n+1) K- + 2 g2 n K+ - 2 [g1 (n+1) + g2 n] K0.
RateFunctions su11_rates(const OscillatorBathParams& p);

/// The same model with H = omega(t) a^+ a, A_- = a, A_+ = a^+ on a truncated Fock space.
LindbladModel su11_lindblad(const OscillatorBathParams& p, int truncation);

/// Matrix M with vec(L rho) = M vec(rho) at time t, assembled column by column
/// from the superoperator generators.
Matrix dense_liouvillian(Algebra kind, const RateFunctions& rates, int truncation, double t);

/// Ladder operators on the truncated Fock space.
SparseMatrix annihilation(int truncation);
SparseMatrix number_operator(int truncation);

}  // namespace lcs
