#include "lcs/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string>

#include "lcs/csv.hpp"
#include "lcs/ode.hpp"

namespace lcs {
namespace {

using RowMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowMap = Eigen::Map<RowMatrix>;
using ConstRowMap = Eigen::Map<const RowMatrix>;

struct PreparedChannel {
  SparseMatrix a, a_dag, a_dag_a;
  Profile rate;
};

void check_initial(const DensityMatrix& rho0, int dim, const IntegrateOptions& opts) {
  if (rho0.dim() != dim) {
    throw DimensionError("initial state has dim " + std::to_string(rho0.dim()) +
                         ", model has dim " + std::to_string(dim));
  }
  if (!(opts.tol > 0.0)) throw DomainError("integrate: tol must be positive");
  if (opts.physical) {
    if (rho0.hermiticity_defect() > 1e-10) throw DomainError("initial state is not Hermitian");
    if (std::abs(rho0.trace() - 1.0) > 1e-9) throw DomainError("initial state trace is not 1");
  }
}

Trajectory collect(const std::vector<Vector>& ys, std::span<const double> times, int dim,
                   bool fock, const IntegrateOptions& opts) {
  Trajectory traj;
  traj.times.assign(times.begin(), times.end());
  for (const Vector& y : ys) {
    Matrix rho = ConstRowMap(y.data(), dim, dim);
    const double defect = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (opts.physical) rho = 0.5 * (rho + rho.adjoint()).eval();
    traj.hermiticity_defect.push_back(defect);
    traj.leak.push_back(fock ? std::abs(rho(dim - 1, dim - 1)) : 0.0);
    traj.states.emplace_back(std::move(rho));
  }
  return traj;
}

void check_leak(const Trajectory& traj, const IntegrateOptions& opts) {
  for (std::size_t i = 0; i < traj.leak.size(); ++i) {
    if (traj.leak[i] > opts.leak_limit) {
      std::ostringstream os;
      os << "truncation leakage " << traj.leak[i] << " at t = " << traj.times[i]
         << " exceeds " << opts.leak_limit << "; increase the truncation";
      throw NumericalError(os.str(), traj.times[i]);
    }
  }
}

Vector flatten(const DensityMatrix& rho) {
  const int d = rho.dim();
  Vector y(static_cast<Eigen::Index>(d) * d);
  RowMap(y.data(), d, d) = rho.matrix();
  return y;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

double Trajectory::max_leak() const {
  return leak.empty() ? 0.0 : *std::max_element(leak.begin(), leak.end());
}

Trajectory integrate(const LindbladModel& model, const DensityMatrix& rho0,
                     std::span<const double> times, const IntegrateOptions& opts) {
  const int d = model.dim;
  check_initial(rho0, d, opts);

  std::vector<PreparedChannel> channels;
  for (const auto& c : model.channels) {
    SparseMatrix a_dag = c.op.adjoint();
    SparseMatrix a_dag_a = a_dag * c.op;
    channels.push_back({c.op, std::move(a_dag), std::move(a_dag_a), c.coefficient});
  }

  RowMatrix tmp(d, d), h_rho(d, d);
  const ode::Rhs rhs = [&](Complex t, const Vector& y, Vector& dy) {
    dy.resize(y.size());
    ConstRowMap rho(y.data(), d, d);
    RowMap out(dy.data(), d, d);
    out.setZero();
    for (const auto& h : model.hamiltonian) {
      const Complex coef = Complex(0.0, -1.0) * h.coefficient(t);
      h_rho.noalias() = h.op * rho;
      out += coef * h_rho;
      h_rho.noalias() = rho * h.op;
      out -= coef * h_rho;
    }
    for (const auto& c : channels) {
      const Complex g = c.rate(t);
      if (g == 0.0) continue;
      tmp.noalias() = c.a * rho;
      h_rho.noalias() = tmp * c.a_dag;
      out += (2.0 * g) * h_rho;
      h_rho.noalias() = c.a_dag_a * rho;
      out -= g * h_rho;
      h_rho.noalias() = rho * c.a_dag_a;
      out -= g * h_rho;
    }
  };

  ode::Options o;
  o.rtol = o.atol = opts.tol;
  o.error_per_unit_time = true;
  const auto poles = model.poles(times.front(), times.back());
  const auto ys = ode::integrate_on_grid(rhs, flatten(rho0), times, poles, o);
  Trajectory traj = collect(ys, times, d, model.fock_truncated, opts);
  if (model.fock_truncated) check_leak(traj, opts);
  return traj;
}

Trajectory integrate(const LindbladModel& model, const DensityMatrix& rho0, double t_end,
                     int n_out, const IntegrateOptions& opts) {
  if (!(t_end > 0.0)) throw DomainError("integrate: t_end must be positive");
  const auto grid = linspace(0.0, t_end, n_out);
  return integrate(model, rho0, grid, opts);
}

Trajectory integrate(Algebra kind, const RateFunctions& rates, const DensityMatrix& rho0,
                     std::span<const double> times, const IntegrateOptions& opts) {
  const int d = rho0.dim();
  check_representation(kind, d);
  check_initial(rho0, d, opts);

  const ode::Rhs rhs = [&](Complex t, const Vector& y, Vector& dy) {
    const LiouvilleVector v(d, y);
    Vector acc = rates.scalar(t) * y;
    acc += rates.gamma_plus(t) * apply_superop(kind, Generator::Plus, v).entries();
    acc += rates.gamma_minus(t) * apply_superop(kind, Generator::Minus, v).entries();
    acc += rates.gamma_z(t) * apply_superop(kind, Generator::Zero, v).entries();
    acc += Complex(0.0, -1.0) * rates.omega(t) * apply_superop(kind, Generator::R, v).entries();
    dy = std::move(acc);
  };

  ode::Options o;
  o.rtol = o.atol = opts.tol;
  o.error_per_unit_time = true;
  const auto poles = rates.poles(times.front(), times.back());
  const auto ys = ode::integrate_on_grid(rhs, flatten(rho0), times, poles, o);
  const bool fock = kind == Algebra::SU11;
  Trajectory traj = collect(ys, times, d, fock, opts);
  if (fock) check_leak(traj, opts);
  return traj;
}

Matrix lindblad_generator(const LindbladModel& model, Complex t) {
  const int d = model.dim;
  const Matrix id = Matrix::Identity(d, d);
  Matrix gen = Matrix::Zero(d * d, d * d);
  for (const auto& h : model.hamiltonian) {
    const Matrix hm = Matrix(h.op);
    gen += Complex(0.0, -1.0) * h.coefficient(t) * (kron(hm, id) - kron(id, hm.transpose()));
  }
  for (const auto& c : model.channels) {
    const Matrix a = Matrix(c.op);
    const Matrix ada = a.adjoint() * a;
    gen += c.coefficient(t) *
           (2.0 * kron(a, a.conjugate()) - kron(ada, id) - kron(id, ada.transpose()));
  }
  return gen;
}

Observables observables(const DensityMatrix& rho) {
  if (rho.hermiticity_defect() > 1e-8) {
    throw DomainError("observables need a Hermitian matrix");
  }
  const Matrix& m = rho.matrix();
  Observables o;
  o.trace = m.trace();
  o.purity = (m * m).trace().real();
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (double p : es.eigenvalues()) {
    if (p < -1e-10) {
      std::ostringstream os;
      os << "unphysical state: eigenvalue " << p;
      throw DomainError(os.str());
    }
    if (p > 0.0) s -= p * std::log(p);
  }
  o.entropy = s;
  return o;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("trace_distance: dimension mismatch");
  Eigen::BDCSVD<Matrix> svd(a.matrix() - b.matrix());
  return 0.5 * svd.singularValues().sum();
}

double min_eigenvalue(const DensityMatrix& rho) {
  const Matrix& m = rho.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void write_csv(std::ostream& os, const Trajectory& traj, bool dump_states) {
  os << "time,purity,entropy,trace_re,leak";
  const int d = traj.states.empty() ? 0 : traj.states.front().dim();
  if (dump_states) {
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n)
        os << ",rho_" << m << '_' << n << "_re,rho_" << m << '_' << n << "_im";
  }
  os << '\n';
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const Observables o = observables(traj.states[i]);
    os << csv::format(traj.times[i]) << ',' << csv::format(o.purity) << ','
       << csv::format(o.entropy) << ',' << csv::format(o.trace.real()) << ','
       << csv::format(traj.leak[i]);
    if (dump_states) {
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n)
          os << ',' << csv::format(traj.states[i](m, n).real()) << ','
             << csv::format(traj.states[i](m, n).imag());
    }
    os << '\n';
  }
}

}  // namespace lcs
