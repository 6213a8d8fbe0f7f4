#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "lcs/liouville.hpp"
#include "lcs/riccati.hpp"

namespace lcs {

/// Liouville coherent state |zeta> = exp(zeta L+) exp(eta L0) exp(-zeta* L-) |0>,
/// eta = -sigma log(1 - sigma |zeta|^2).
///
/// su(2): built on the j = 1/2 base state (1 - sigma_z)/2 = |dn><dn|.
/// su(1,1): built on |m;0> = |m><0| of sector m >= 0, or on |0><m| when
/// `conjugate` is set.
struct CoherentState {
  Algebra kind = Algebra::SU2;
  int m = 0;
  bool conjugate = false;
  Complex zeta{};

  /// L0 eigenvalue of the base state.
  double k0() const;
  /// R eigenvalue of the whole sector.
  double r0() const;
  double eta() const;
  void validate() const;
};

double eta_of(Algebra kind, Complex zeta);

/// Dim is 2 for su(2); for su(1,1) it is the Fock truncation (>= 2).
LiouvilleVector coherent_vector(const CoherentState& state, int truncation = 2);

/// Parameters of the evolved coherent state: the propagator maps |zeta> to
/// prefactor * |g_plus>.
struct GParams {
  Complex g_plus, g_zero, g_minus, prefactor;
};

GParams evolve_params(const DisentangleSample& coeffs, const CoherentState& state);

struct CircleImage {
  double radius = 0.0;
  Complex center{};
};

/// Image of the circle |zeta| = abs_zeta under zeta -> g_plus.
CircleImage circle_map(const DisentangleSample& coeffs, double abs_zeta, int sigma);

/// rho = c0 sigma+ + c0* sigma- + c1 |1/2; zeta>
struct Su2Decomposition {
  Complex c0, c1, zeta;
};

Su2Decomposition su2_decompose(const DensityMatrix& rho);
DensityMatrix su2_reconstruct(const Su2Decomposition& parts);

/// Propagates both sectors of a decomposed qubit state: the j = 1/2 part through
/// the coherent-state parameter map, the j = 0 coherences through their u(1) phase.
DensityMatrix su2_evolve(const DisentangleSample& coeffs, const Su2Decomposition& parts);

struct Su11Term {
  int m = 0;
  Complex c{};
  Complex zeta{};
  bool conjugate = false;
};

struct Su11Assembly {
  DensityMatrix rho;
  double hermiticity_defect = 0.0;
};

/// Sum over terms of c |m;zeta> + h.c. Throws if the trace is not 1 within 1e-8.
Su11Assembly su11_assemble(const std::vector<Su11Term>& terms, int truncation);

/// Same sum without the trace constraint (used for evolved states, whose trace
/// the dynamics fixes).
DensityMatrix su11_sum(const std::vector<Su11Term>& terms, int truncation);

/// Evolves every term through its coherent-parameter map: c |m;zeta> becomes
/// c * prefactor |m;g_plus>.
std::vector<Su11Term> su11_evolve_terms(const DisentangleSample& coeffs,
                                        const std::vector<Su11Term>& terms);

/// Coefficient c0 putting a single sector-0 coherent term at unit trace.
Complex su11_trace_normalized_c0(Complex zeta);

/// Max-norm deviation of the spin-measure quadrature of |zeta><zeta| from the
/// projector on the j = 1/2 Liouville subspace; Gauss-Legendre in theta,
/// trapezoid in phi.
double identity_resolution_check_su2(int n_theta, int n_phi);

/// Gauss-Legendre nodes and weights on [a, b].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a, double b);

/// CSV row source for coherent-parameter trajectories.
struct ParamSample {
  double time = 0.0;
  GParams g;
  CircleImage circle;
};

void write_csv(std::ostream& os, const std::vector<ParamSample>& samples);

}  // namespace lcs
