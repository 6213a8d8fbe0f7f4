#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "lcs/liouville.hpp"
#include "lcs/riccati.hpp"

namespace lcs {

/// coefficient(t) * op
struct LindbladTerm {
  SparseMatrix op;
  Profile coefficient;
};

/// Master equation in Lindblad form,
///   drho/dt = -i[H(t), rho] + sum_j gamma_j(t) (2 A_j rho A_j^+ - A_j^+ A_j rho - rho A_j^+ A_j),
/// with H(t) = sum_i h_i(t) H_i.
struct LindbladModel {
  int dim = 0;
  std::vector<LindbladTerm> hamiltonian;
  std::vector<LindbladTerm> channels;
  std::function<std::vector<double>(double t0, double t1)> singular_times;
  /// Fock-space truncation: the top level's population is reported as leakage.
  bool fock_truncated = false;

  std::vector<double> poles(double t0, double t1) const {
    return singular_times ? singular_times(t0, t1) : std::vector<double>{};
  }
};

struct IntegrateOptions {
  double tol = 1e-10;
  /// Require a physical initial state and re-symmetrize at output points. Off
  /// for propagating arbitrary operators (the dynamics is linear).
  bool physical = true;
  double leak_limit = 1e-6;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  std::vector<double> leak;
  /// max |rho - rho^+| before re-symmetrization, per output point.
  std::vector<double> hermiticity_defect;

  double max_leak() const;
};

/// Brute-force propagation of the master equation on the given output grid
/// (strictly increasing, first point is the initial time 0).
Trajectory integrate(const LindbladModel& model, const DensityMatrix& rho0,
                     std::span<const double> times, const IntegrateOptions& opts = {});
Trajectory integrate(const LindbladModel& model, const DensityMatrix& rho0, double t_end,
                     int n_out, const IntegrateOptions& opts = {});

/// Same integration with the generator assembled from rate coefficients and the
/// explicit superoperators.
Trajectory integrate(Algebra kind, const RateFunctions& rates, const DensityMatrix& rho0,
                     std::span<const double> times, const IntegrateOptions& opts = {});

/// Dense d^2 x d^2 generator of the model at time t, in the row-major
/// vectorization, assembled from Kronecker products of the operators.
Matrix lindblad_generator(const LindbladModel& model, Complex t);

struct Observables {
  Complex trace;
  double purity = 0.0;
  double entropy = 0.0;
};

Observables observables(const DensityMatrix& rho);

/// Half the sum of singular values of a - b.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Smallest eigenvalue of the Hermitian part.
double min_eigenvalue(const DensityMatrix& rho);

void write_csv(std::ostream& os, const Trajectory& traj, bool dump_states = false);

}  // namespace lcs
