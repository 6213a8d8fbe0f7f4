#include "lcs/models.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace lcs {

double SpinBosonParams::delta_prime() const { return std::hypot(delta, g); }

double SpinBosonParams::g_prime() const {
  const double dp = delta_prime();
  // delta' - delta without cancellation for delta >> g
  return delta > 0.0 ? g * g / (dp + delta) : dp - delta;
}

double SpinBosonParams::s() const { return g_prime() / (delta + delta_prime()); }

double SpinBosonParams::r() const {
  const double dp = delta_prime();
  return (omega + 0.5 * (delta + dp)) / (omega + 0.5 * (delta - dp));
}

void SpinBosonParams::validate() const {
  for (double v : {omega, g, delta, nbar}) {
    if (!std::isfinite(v)) throw DomainError("spin-boson parameters must be finite");
  }
  if (nbar < 0.0) throw DomainError("nbar must be >= 0");
  if (!(delta + delta_prime() > 0.0)) {
    throw DomainError("spin-boson model needs delta + sqrt(delta^2 + g^2) > 0");
  }
  if (g != 0.0 && !(delta_prime() > 0.0)) throw DomainError("delta' must be positive");
  if (omega + 0.5 * (delta - delta_prime()) == 0.0) {
    throw DomainError("r is singular: omega + (delta - delta')/2 = 0");
  }
}

std::vector<double> SpinBosonParams::poles(double t0, double t1) const {
  std::vector<double> out;
  const double dp = delta_prime();
  if (std::abs(s() - 1.0) > 1e-14 || !(dp > 0.0)) return out;
  // s + e^{i delta' t} = 0  <=>  delta' t = (2k + 1) pi
  const double period = 2.0 * std::numbers::pi / dp;
  const double first = std::numbers::pi / dp;
  long k = static_cast<long>(std::ceil((t0 - first) / period));
  for (double t = first + k * period; t <= t1; t = first + (++k) * period) {
    if (t >= t0) out.push_back(t);
  }
  return out;
}

Complex chi(const SpinBosonParams& p, Complex t) {
  const double dp = p.delta_prime();
  const double s = p.s();
  const Complex u = std::exp(Complex(0.0, dp) * t);
  const Complex den = s + u;
  if (std::abs(den) < 1e-12) {
    std::ostringstream os;
    os << "chi has a resonance pole at t = " << t.real();
    throw NumericalError(os.str(), t.real());
  }
  return Complex(0.0, p.omega - 0.5 * p.g_prime()) * (p.r() * s + u) / den;
}

Complex spin_boson_gamma(const SpinBosonParams& p, Complex t) {
  return 0.5 * (chi(p, t) + std::conj(chi(p, std::conj(t))));
}

Complex spin_boson_splitting(const SpinBosonParams& p, Complex t) {
  return (chi(p, t) - std::conj(chi(p, std::conj(t)))) / Complex(0.0, 2.0);
}

RateFunctions su2_rates(const SpinBosonParams& p) {
  p.validate();
  const double n = p.nbar;
  RateFunctions r;
  r.kind = Algebra::SU2;
  r.gamma_plus = [p, n](Complex t) { return 2.0 * n * spin_boson_gamma(p, t); };
  r.gamma_minus = [p, n](Complex t) { return 2.0 * (n + 1.0) * spin_boson_gamma(p, t); };
  r.gamma_z = [p](Complex t) { return -2.0 * spin_boson_gamma(p, t); };
  r.scalar = [p, n](Complex t) { return -(2.0 * n + 1.0) * spin_boson_gamma(p, t); };
  r.omega = [p](Complex t) { return spin_boson_splitting(p, t); };
  r.singular_times = [p](double t0, double t1) { return p.poles(t0, t1); };
  return r;
}

LindbladModel su2_lindblad(const SpinBosonParams& p) {
  p.validate();
  SparseMatrix sz(2, 2), sp(2, 2), sm(2, 2);
  sz.insert(0, 0) = 1.0;
  sz.insert(1, 1) = -1.0;
  sp.insert(0, 1) = 1.0;  // |up><dn|
  sm.insert(1, 0) = 1.0;
  const double n = p.nbar;
  LindbladModel m;
  m.dim = 2;
  m.hamiltonian.push_back({sz, [p](Complex t) { return 0.5 * spin_boson_splitting(p, t); }});
  m.channels.push_back({sp, [p, n](Complex t) { return n * spin_boson_gamma(p, t); }});
  m.channels.push_back({sm, [p, n](Complex t) { return (n + 1.0) * spin_boson_gamma(p, t); }});
  m.singular_times = [p](double t0, double t1) { return p.poles(t0, t1); };
  return m;
}

Complex OscillatorBathParams::rate(Complex t) const {
  return gamma * (a + std::cos(big_gamma * t));
}

void OscillatorBathParams::validate() const {
  if (!(gamma >= 0.0)) throw DomainError("oscillator rate gamma must be >= 0");
  if (!(nbar >= 0.0)) throw DomainError("nbar must be >= 0");
  if (!std::isfinite(a) || !std::isfinite(big_gamma)) {
    throw DomainError("oscillator parameters must be finite");
  }
  if (!omega) throw DomainError("oscillator frequency profile is empty");
}

OscillatorBathParams OscillatorBathParams::modulated(double gamma, double nbar) {
  OscillatorBathParams p;
  p.gamma = 0.5 * gamma;
  p.a = 1.0;
  p.big_gamma = 8.0 * gamma;
  p.nbar = nbar;
  return p;
}

OscillatorBathParams OscillatorBathParams::constant(double gamma, double nbar) {
  OscillatorBathParams p;
  p.gamma = gamma;
  p.a = 0.0;
  p.big_gamma = 0.0;  // cos(0) = 1
  p.nbar = nbar;
  return p;
}

RateFunctions su11_rates(const OscillatorBathParams& p) {
  p.validate();
  const double n = p.nbar;
  RateFunctions r;
  r.kind = Algebra::SU11;
  // gamma_1 = gamma_2 = p.rate
  r.gamma_plus = [p, n](Complex t) { return 2.0 * n * p.rate(t); };
  r.gamma_minus = [p, n](Complex t) { return 2.0 * (n + 1.0) * p.rate(t); };
  r.gamma_z = [p, n](Complex t) { return -2.0 * (2.0 * n + 1.0) * p.rate(t); };
  r.scalar = [p](Complex t) { return p.rate(t); };
  r.omega = p.omega;
  return r;
}

SparseMatrix annihilation(int truncation) {
  SparseMatrix a(truncation, truncation);
  for (int n = 1; n < truncation; ++n) a.insert(n - 1, n) = std::sqrt(double(n));
  return a;
}

SparseMatrix number_operator(int truncation) {
  SparseMatrix nm(truncation, truncation);
  for (int n = 0; n < truncation; ++n) nm.insert(n, n) = double(n);
  return nm;
}

LindbladModel su11_lindblad(const OscillatorBathParams& p, int truncation) {
  p.validate();
  if (truncation < 2) throw DomainError("Fock truncation must be >= 2");
  const SparseMatrix a = annihilation(truncation);
  const SparseMatrix a_dag = a.adjoint();
  const double n = p.nbar;
  LindbladModel m;
  m.dim = truncation;
  m.fock_truncated = true;
  m.hamiltonian.push_back({number_operator(truncation), p.omega});
  m.channels.push_back({a, [p, n](Complex t) { return (n + 1.0) * p.rate(t); }});
  if (n > 0.0) m.channels.push_back({a_dag, [p, n](Complex t) { return n * p.rate(t); }});
  return m;
}

Matrix dense_liouvillian(Algebra kind, const RateFunctions& rates, int truncation, double t) {
  const int d = kind == Algebra::SU2 ? 2 : truncation;
  check_representation(kind, d);
  if (kind == Algebra::SU2 && truncation != 2) {
    throw DimensionError("su(2) Liouvillian requires truncation 2");
  }
  const Complex tc(t, 0.0);
  const Complex gp = rates.gamma_plus(tc), gm = rates.gamma_minus(tc), gz = rates.gamma_z(tc),
                sc = rates.scalar(tc), om = rates.omega(tc);
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  Matrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    LiouvilleVector e = LiouvilleVector::zero(d);
    e.entries()[j] = 1.0;
    Vector col = sc * e.entries();
    col += gp * apply_superop(kind, Generator::Plus, e).entries();
    col += gm * apply_superop(kind, Generator::Minus, e).entries();
    col += gz * apply_superop(kind, Generator::Zero, e).entries();
    col += Complex(0.0, -1.0) * om * apply_superop(kind, Generator::R, e).entries();
    out.col(j) = col;
  }
  return out;
}

}  // namespace lcs
