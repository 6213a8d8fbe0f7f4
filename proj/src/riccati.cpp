#include "lcs/riccati.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "lcs/csv.hpp"
#include "lcs/ode.hpp"

namespace lcs {

RateFunctions RateFunctions::constant(Algebra kind, double gamma_plus, double gamma_minus,
                                      double gamma_z, double scalar, double omega) {
  auto c = [](double v) { return [v](Complex) { return Complex(v, 0.0); }; };
  RateFunctions r;
  r.kind = kind;
  r.gamma_plus = c(gamma_plus);
  r.gamma_minus = c(gamma_minus);
  r.gamma_z = c(gamma_z);
  r.scalar = c(scalar);
  r.omega = c(omega);
  return r;
}

RateFunctions RateFunctions::shifted(double dt) const {
  auto shift = [dt](const Profile& p) -> Profile {
    return [p, dt](Complex t) { return p(t + dt); };
  };
  RateFunctions r;
  r.kind = kind;
  r.gamma_plus = shift(gamma_plus);
  r.gamma_minus = shift(gamma_minus);
  r.gamma_z = shift(gamma_z);
  r.scalar = shift(scalar);
  r.omega = shift(omega);
  if (singular_times) {
    r.singular_times = [inner = singular_times, dt](double t0, double t1) {
      auto p = inner(t0 + dt, t1 + dt);
      for (double& x : p) x -= dt;
      return p;
    };
  }
  return r;
}

ConstSolution solve_const(double gamma_plus, double gamma_minus, double gamma_z, int sigma,
                          double t) {
  if (!(t >= 0.0)) throw DomainError("solve_const: t must be >= 0");
  if (sigma != 1 && sigma != -1) throw DomainError("solve_const: sigma must be +1 or -1");

  // S = sinh(tD)/D and C = cosh(tD) are entire in D^2, so the imaginary-D and
  // D = 0 cases need no special branches beyond the series near zero.
  const double d2 = 0.25 * gamma_z * gamma_z - sigma * gamma_plus * gamma_minus;
  const double x = d2 * t * t;
  double S, C;
  if (std::abs(x) < 1e-4) {
    S = t * (1.0 + x / 6.0 * (1.0 + x / 20.0 * (1.0 + x / 42.0)));
    C = 1.0 + x / 2.0 * (1.0 + x / 12.0 * (1.0 + x / 30.0));
  } else if (d2 > 0.0) {
    const double D = std::sqrt(d2);
    S = std::sinh(t * D) / D;
    C = std::cosh(t * D);
  } else {
    const double w = std::sqrt(-d2);
    S = std::sin(t * w) / w;
    C = std::cos(t * w);
  }
  const double den = C - 0.5 * gamma_z * S;
  if (std::abs(den) <= 1e-12) {
    std::ostringstream os;
    os << "disentangled propagator blows up at t = " << t;
    throw NumericalError(os.str(), t);
  }
  return {Complex(gamma_plus * S / den), Complex(1.0 / (den * den)),
          Complex(gamma_minus * S / den)};
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 2) throw DomainError("linspace needs at least two points");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = a + (b - a) * i / (n - 1);
  out.back() = b;
  return out;
}

DisentangleCoefficients solve_ode(const RateFunctions& rates, std::span<const double> times,
                                  const RiccatiOptions& opts) {
  if (times.empty() || times.front() != 0.0) {
    throw DomainError("solve_ode: output grid must start at t = 0");
  }
  if (!(opts.tol > 0.0)) throw DomainError("solve_ode: tol must be positive");
  const double sigma = rates.sigma();

  const ode::Rhs rhs = [&](Complex t, const Vector& y, Vector& dy) {
    const Complex gp = rates.gamma_plus(t), gm = rates.gamma_minus(t), gz = rates.gamma_z(t);
    const Complex fp = y[0];
    dy.resize(5);
    dy[0] = gp + gz * fp + sigma * gm * fp * fp;
    dy[1] = gz + 2.0 * sigma * gm * fp;
    dy[2] = gm * std::exp(y[1]);
    dy[3] = Complex(0.0, -1.0) * rates.omega(t);
    dy[4] = rates.scalar(t);
  };
  const ode::StepHook blowup = [&](Complex t, const Vector& y) {
    if (!(std::abs(y[0]) <= opts.blowup)) {
      std::ostringstream os;
      os << "Riccati solution blows up near t = " << t.real();
      throw NumericalError(os.str(), t.real());
    }
  };

  ode::Options o;
  o.rtol = o.atol = opts.tol;
  o.error_per_unit_time = true;
  const auto poles = rates.poles(times.front(), times.back());
  const auto ys = ode::integrate_on_grid(rhs, Vector::Zero(5), times, poles, o, blowup);

  DisentangleCoefficients out;
  out.kind = rates.kind;
  out.samples.reserve(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const Vector& y = ys[i];
    out.samples.push_back({times[i], y[0], y[1], y[2], y[3], y[4]});
  }
  return out;
}

DisentangleCoefficients solve_ode(const RateFunctions& rates, double t_end, double tol,
                                  int n_out) {
  if (!(t_end > 0.0)) throw DomainError("solve_ode: t_end must be positive");
  const auto grid = linspace(0.0, t_end, n_out);
  return solve_ode(rates, grid, RiccatiOptions{tol});
}

LiouvilleVector exp_ladder(Algebra kind, Generator gen, Complex x, const LiouvilleVector& v,
                           double* leaked) {
  if (gen != Generator::Plus && gen != Generator::Minus) {
    throw DomainError("exp_ladder: only the ladder generators are expanded in series");
  }
  if (x == 0.0) return v;
  LiouvilleVector sum = v;
  LiouvilleVector term = v;
  int small_terms = 0;
  for (int k = 1; k < 20000; ++k) {
    double leak = 0.0;
    term = apply_superop(kind, gen, term, leak);
    const Complex scale = x / double(k);
    term *= scale;
    if (leaked) *leaked += std::abs(scale) * leak;
    sum += term;
    const double tn = term.entries().norm();
    if (tn == 0.0) return sum;
    small_terms = tn <= 1e-17 * sum.entries().norm() ? small_terms + 1 : 0;
    if (small_terms >= 2) return sum;
  }
  throw NumericalError("exponential series of a ladder superoperator did not converge");
}

LiouvilleVector apply_propagator(Algebra kind, const DisentangleSample& c,
                                 const LiouvilleVector& v, double* leaked) {
  for (Complex z : {c.f_plus, c.f_z, c.f_minus, c.u1_phase, c.scalar_weight}) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NumericalError("non-finite disentangling coefficient", c.time);
    }
  }
  check_representation(kind, v.dim());
  LiouvilleVector w = exp_ladder(kind, Generator::Minus, c.f_minus, v, leaked);
  const int d = w.dim();
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      const double l0 = diagonal_eigenvalue(kind, Generator::Zero, m, n);
      const double r = diagonal_eigenvalue(kind, Generator::R, m, n);
      w(m, n) *= std::exp(c.f_z * l0 + c.u1_phase * r + c.scalar_weight);
    }
  }
  return exp_ladder(kind, Generator::Plus, c.f_plus, w, leaked);
}

void write_csv(std::ostream& os, const DisentangleCoefficients& coeffs) {
  csv::write_header(os, {"time", "f_plus_re", "f_plus_im", "f_z_re", "f_z_im", "f_minus_re",
                         "f_minus_im", "u1_phase_re", "u1_phase_im", "scalar_weight_re",
                         "scalar_weight_im"});
  for (const auto& s : coeffs.samples) {
    csv::write_row(os, {s.time, s.f_plus.real(), s.f_plus.imag(), s.f_z.real(), s.f_z.imag(),
                        s.f_minus.real(), s.f_minus.imag(), s.u1_phase.real(),
                        s.u1_phase.imag(), s.scalar_weight.real(), s.scalar_weight.imag()});
  }
}

}  // namespace lcs
