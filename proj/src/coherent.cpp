#include "lcs/coherent.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "lcs/csv.hpp"

namespace lcs {

double CoherentState::k0() const {
  return kind == Algebra::SU2 ? -0.5 : 0.5 * (1.0 + m);
}

double CoherentState::r0() const {
  if (kind == Algebra::SU2) return 0.0;
  return conjugate ? -double(m) : double(m);
}

double eta_of(Algebra kind, Complex zeta) {
  const double s = sigma_of(kind);
  return -s * std::log(1.0 - s * std::norm(zeta));
}

double CoherentState::eta() const { return eta_of(kind, zeta); }

void CoherentState::validate() const {
  if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag())) {
    throw DomainError("coherent-state parameter must be finite");
  }
  if (kind == Algebra::SU11) {
    if (m < 0) throw DomainError("su(1,1) sector label m must be >= 0");
    if (!(std::abs(zeta) < 1.0)) {
      std::ostringstream os;
      os << "su(1,1) coherent state needs |zeta| < 1, got |zeta| = " << std::abs(zeta);
      throw DomainError(os.str());
    }
  }
}

LiouvilleVector coherent_vector(const CoherentState& state, int truncation) {
  state.validate();
  LiouvilleVector base;
  if (state.kind == Algebra::SU2) {
    base = LiouvilleVector::zero(2);
    base(1, 1) = 1.0;
  } else {
    if (truncation < 2) throw DomainError("su(1,1) truncation must be >= 2");
    if (state.m >= truncation) {
      throw DomainError("sector m = " + std::to_string(state.m) +
                        " does not fit in truncation " + std::to_string(truncation));
    }
    base = LiouvilleVector::zero(truncation);
    if (state.conjugate) {
      base(0, state.m) = 1.0;
    } else {
      base(state.m, 0) = 1.0;
    }
  }
  // exp(-zeta* L-) fixes the base state; applied anyway so the construction
  // matches the definition term for term.
  LiouvilleVector v =
      exp_ladder(state.kind, Generator::Minus, -std::conj(state.zeta), base);
  const double eta = state.eta();
  const int d = v.dim();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      v(a, b) *= std::exp(eta * diagonal_eigenvalue(state.kind, Generator::Zero, a, b));
  return exp_ladder(state.kind, Generator::Plus, state.zeta, v);
}

GParams evolve_params(const DisentangleSample& c, const CoherentState& state) {
  state.validate();
  const double sigma = sigma_of(state.kind);
  const Complex zeta = state.zeta;
  const Complex lambda = 1.0 - sigma * c.f_minus * zeta;
  if (std::abs(lambda) <= 1e-12) {
    std::ostringstream os;
    os << "coherent parameter map is singular (Lambda = 0) at t = " << c.time;
    throw NumericalError(os.str(), c.time);
  }
  const double norm_factor = std::pow(1.0 - sigma * std::norm(zeta), -sigma);
  GParams g;
  g.g_plus = c.f_plus + zeta * std::exp(c.f_z) / lambda;
  // Kept as a sum of logarithms so exp(k g_zero) is branch-free for half-integer k.
  g.g_zero = state.eta() + c.f_z - 2.0 * std::log(lambda);
  g.g_minus = -std::conj(zeta) + norm_factor * c.f_minus / lambda;
  const Complex eta_target = -sigma * std::log(Complex(1.0 - sigma * std::norm(g.g_plus)));
  g.prefactor = std::exp((g.g_zero - eta_target) * state.k0() + c.scalar_weight +
                         c.u1_phase * state.r0());
  return g;
}

CircleImage circle_map(const DisentangleSample& c, double abs_zeta, int sigma) {
  if (sigma != 1 && sigma != -1) throw DomainError("circle_map: sigma must be +1 or -1");
  const double r2 = abs_zeta * abs_zeta;
  const double den = 1.0 - std::norm(c.f_minus) * r2;
  if (!(den > 1e-12)) {
    std::ostringstream os;
    os << "circle image degenerates (1 - |f-|^2 |zeta|^2 = " << den << ") at t = " << c.time;
    throw NumericalError(os.str(), c.time);
  }
  const Complex e = std::exp(c.f_z);
  return {abs_zeta * std::abs(e) / den,
          c.f_plus + double(sigma) * e * r2 * std::conj(c.f_minus) / den};
}

Su2Decomposition su2_decompose(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionError("su2_decompose needs a 2x2 matrix");
  if (std::abs(rho.trace() - 1.0) > 1e-9) {
    std::ostringstream os;
    os << "su2_decompose: trace must be 1, got " << rho.trace();
    throw DomainError(os.str());
  }
  const Complex down = rho(1, 1), up = rho(0, 0);
  if (std::abs(down) < 1e-15) {
    throw DomainError(
        "su2_decompose: rho_down,down = 0 puts zeta at infinity; use the conjugate "
        "parametrization for the excited state");
  }
  const Complex zeta = up / down;
  return {rho(0, 1), std::sqrt(1.0 + std::norm(zeta)) * down, zeta};
}

DensityMatrix su2_reconstruct(const Su2Decomposition& p) {
  Matrix m = devectorize(coherent_vector({Algebra::SU2, 0, false, p.zeta})).matrix() * p.c1;
  m(0, 1) += p.c0;
  m(1, 0) += std::conj(p.c0);
  return DensityMatrix(std::move(m));
}

DensityMatrix su2_evolve(const DisentangleSample& c, const Su2Decomposition& p) {
  const CoherentState state{Algebra::SU2, 0, false, p.zeta};
  const GParams g = evolve_params(c, state);
  const CoherentState target{Algebra::SU2, 0, false, g.g_plus};
  Matrix m = devectorize(coherent_vector(target)).matrix() * (p.c1 * g.prefactor);
  // sigma+- span the j = 0 sector: only the u(1) phase (R = +-1) and the scalar act.
  m(0, 1) += p.c0 * std::exp(c.u1_phase + c.scalar_weight);
  m(1, 0) += std::conj(p.c0) * std::exp(-c.u1_phase + c.scalar_weight);
  return DensityMatrix(std::move(m));
}

DensityMatrix su11_sum(const std::vector<Su11Term>& terms, int truncation) {
  Matrix acc = Matrix::Zero(truncation, truncation);
  for (const auto& t : terms) {
    const Matrix op =
        t.c * devectorize(coherent_vector({Algebra::SU11, t.m, t.conjugate, t.zeta}, truncation))
                  .matrix();
    acc += op + op.adjoint();
  }
  return DensityMatrix(std::move(acc));
}

Su11Assembly su11_assemble(const std::vector<Su11Term>& terms, int truncation) {
  DensityMatrix rho = su11_sum(terms, truncation);
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > 1e-8) {
    std::ostringstream os;
    os << "su11_assemble: trace = " << tr.real() << " != 1";
    throw DomainError(os.str());
  }
  const double defect = rho.hermiticity_defect();
  return {std::move(rho), defect};
}

std::vector<Su11Term> su11_evolve_terms(const DisentangleSample& c,
                                        const std::vector<Su11Term>& terms) {
  std::vector<Su11Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    const GParams g = evolve_params(c, {Algebra::SU11, t.m, t.conjugate, t.zeta});
    out.push_back({t.m, t.c * g.prefactor, g.g_plus, t.conjugate});
  }
  return out;
}

Complex su11_trace_normalized_c0(Complex zeta) {
  if (!(std::abs(zeta) < 1.0)) throw DomainError("su(1,1) coherent state needs |zeta| < 1");
  const Complex trace_of_state = 1.0 / (std::sqrt(1.0 - std::norm(zeta)) * (1.0 - zeta));
  return 0.5 / trace_of_state;
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a, double b) {
  if (n < 1) throw DomainError("gauss_legendre needs n >= 1");
  std::vector<double> x(n), w(n);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = 0.5 * (b - a) * z + 0.5 * (b + a);
    w[i] = (b - a) / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

double identity_resolution_check_su2(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1) throw DomainError("identity check needs a non-empty grid");
  const auto [theta, wt] = gauss_legendre(n_theta, 0.0, std::numbers::pi);
  const double wphi = 2.0 * std::numbers::pi / n_phi;
  Matrix q = Matrix::Zero(4, 4);
  for (int i = 0; i < n_theta; ++i) {
    // (2j + 1) / (4 pi) sin(theta) with j = 1/2
    const double w = wt[i] * wphi * std::sin(theta[i]) / (2.0 * std::numbers::pi);
    for (int j = 0; j < n_phi; ++j) {
      const double phi = wphi * j;
      const Complex zeta = -std::tan(0.5 * theta[i]) * std::exp(Complex(0.0, -phi));
      const Vector v = coherent_vector({Algebra::SU2, 0, false, zeta}).entries();
      q += w * v * v.adjoint();
    }
  }
  Matrix p = Matrix::Zero(4, 4);
  p(0, 0) = 1.0;  // |up><up|
  p(3, 3) = 1.0;  // |dn><dn|
  return (q - p).cwiseAbs().maxCoeff();
}

void write_csv(std::ostream& os, const std::vector<ParamSample>& samples) {
  csv::write_header(os, {"time", "g_plus_re", "g_plus_im", "g_zero_re", "g_zero_im",
                         "g_minus_re", "g_minus_im", "prefactor_re", "prefactor_im", "R",
                         "z_re", "z_im"});
  for (const auto& s : samples) {
    csv::write_row(os, {s.time, s.g.g_plus.real(), s.g.g_plus.imag(), s.g.g_zero.real(),
                        s.g.g_zero.imag(), s.g.g_minus.real(), s.g.g_minus.imag(),
                        s.g.prefactor.real(), s.g.prefactor.imag(), s.circle.radius,
                        s.circle.center.real(), s.circle.center.imag()});
  }
}

}  // namespace lcs
