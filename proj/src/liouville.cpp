#include "lcs/liouville.hpp"

#include <cmath>
#include <string>

namespace lcs {

DensityMatrix::DensityMatrix(Matrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) {
    throw DimensionError("density matrix must be square and non-empty, got " +
                         std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
  }
}

DensityMatrix DensityMatrix::zero(int dim) {
  return DensityMatrix(Matrix::Zero(dim, dim));
}

DensityMatrix DensityMatrix::outer(int dim, int ket, int bra) {
  Matrix m = Matrix::Zero(dim, dim);
  m(ket, bra) = 1.0;
  return DensityMatrix(std::move(m));
}

double DensityMatrix::hermiticity_defect() const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

DensityMatrix DensityMatrix::hermitian_part() const {
  return DensityMatrix(0.5 * (m_ + m_.adjoint()));
}

LiouvilleVector::LiouvilleVector(int dim, Vector entries)
    : dim_(dim), v_(std::move(entries)) {
  if (dim < 1 || v_.size() != static_cast<Eigen::Index>(dim) * dim) {
    throw DimensionError("Liouville vector length " + std::to_string(v_.size()) +
                         " does not match dim " + std::to_string(dim) + " squared");
  }
}

LiouvilleVector LiouvilleVector::zero(int dim) {
  return LiouvilleVector(dim, Vector::Zero(static_cast<Eigen::Index>(dim) * dim));
}

LiouvilleVector& LiouvilleVector::operator+=(const LiouvilleVector& o) {
  if (o.dim_ != dim_) throw DimensionError("adding Liouville vectors of different dim");
  v_ += o.v_;
  return *this;
}

LiouvilleVector& LiouvilleVector::operator*=(Complex s) {
  v_ *= s;
  return *this;
}

LiouvilleVector vectorize(const DensityMatrix& rho) {
  const int d = rho.dim();
  LiouvilleVector out = LiouvilleVector::zero(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) out(m, n) = rho(m, n);
  return out;
}

DensityMatrix devectorize(const LiouvilleVector& v) {
  const int d = v.dim();
  Matrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = v(i, j);
  return DensityMatrix(std::move(m));
}

Complex hs_inner(const LiouvilleVector& a, const LiouvilleVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("hs_inner: incompatible spaces (dim " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
  return a.entries().dot(b.entries());  // conjugates the first argument
}

void check_representation(Algebra kind, int dim) {
  if (kind == Algebra::SU2 && dim != 2) {
    throw DimensionError("su(2) generators act on 2x2 operators, got dim " +
                         std::to_string(dim));
  }
  if (dim < 1) throw DimensionError("empty Liouville space");
}

namespace {

// Spin basis: index 0 = up, 1 = down; sigma_z = diag(+1, -1).
double spin_sign(int i) { return i == 0 ? 1.0 : -1.0; }

}  // namespace

double diagonal_eigenvalue(Algebra kind, Generator gen, int ket, int bra) {
  if (kind == Algebra::SU2) {
    const double a = spin_sign(ket), b = spin_sign(bra);
    switch (gen) {
      case Generator::Zero: return 0.25 * (a + b);
      case Generator::R: return 0.5 * (a - b);
      case Generator::Casimir: return 0.375 * (1.0 + a * b);
      case Generator::Identity: return 1.0;
      default: break;
    }
  } else {
    const double m = ket, n = bra;
    switch (gen) {
      case Generator::Zero: return 0.5 * (m + n + 1.0);
      case Generator::R: return m - n;
      case Generator::Casimir: return 0.25 * ((m - n) * (m - n) - 1.0);
      case Generator::Identity: return 1.0;
      default: break;
    }
  }
  throw DomainError("generator is not diagonal in the Fock/spin basis");
}

LiouvilleVector apply_superop(Algebra kind, Generator gen, const LiouvilleVector& v,
                              double& leaked) {
  const int d = v.dim();
  check_representation(kind, d);
  LiouvilleVector out = LiouvilleVector::zero(d);

  switch (gen) {
    case Generator::Plus:
      if (kind == Algebra::SU2) {
        out(0, 0) = v(1, 1);  // sigma+ rho sigma-
      } else {
        // a^dagger rho a
        for (int m = 1; m < d; ++m)
          for (int n = 1; n < d; ++n)
            out(m, n) = std::sqrt(double(m) * n) * v(m - 1, n - 1);
        leaked += std::abs(v(d - 1, d - 1)) * d;
      }
      return out;
    case Generator::Minus:
      if (kind == Algebra::SU2) {
        out(1, 1) = v(0, 0);  // sigma- rho sigma+
      } else {
        // a rho a^dagger
        for (int m = 0; m + 1 < d; ++m)
          for (int n = 0; n + 1 < d; ++n)
            out(m, n) = std::sqrt((m + 1.0) * (n + 1.0)) * v(m + 1, n + 1);
      }
      return out;
    case Generator::Zero:
    case Generator::R:
    case Generator::Casimir:
    case Generator::Identity:
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n)
          out(m, n) = diagonal_eigenvalue(kind, gen, m, n) * v(m, n);
      return out;
  }
  throw DomainError("unknown superoperator generator");
}

LiouvilleVector apply_superop(Algebra kind, Generator gen, const LiouvilleVector& v) {
  double ignored = 0.0;
  return apply_superop(kind, gen, v, ignored);
}

}  // namespace lcs
