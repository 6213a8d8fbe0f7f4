#pragma once

#include <cstddef>

#include "lcs/types.hpp"

namespace lcs {

/// Operator on a d-dimensional Hilbert space; row index is the ket, column the bra.
/// Physical density matrices are Hermitian, unit trace and positive; the type
/// itself also carries non-physical operators (coherent-state vectors, differences).
class DensityMatrix {
 public:
  DensityMatrix() = default;
  explicit DensityMatrix(Matrix entries);

  static DensityMatrix zero(int dim);
  /// |ket><bra|
  static DensityMatrix outer(int dim, int ket, int bra);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(int ket, int bra) const { return m_(ket, bra); }

  Complex trace() const { return m_.trace(); }
  double hermiticity_defect() const;
  DensityMatrix adjoint() const { return DensityMatrix(m_.adjoint()); }
  DensityMatrix hermitian_part() const;

 private:
  Matrix m_;
};

/// Row-major image of an operator: entry (m, n) sits at index m * dim + n.
class LiouvilleVector {
 public:
  LiouvilleVector() = default;
  LiouvilleVector(int dim, Vector entries);
  static LiouvilleVector zero(int dim);

  int dim() const { return dim_; }
  std::size_t size() const { return static_cast<std::size_t>(v_.size()); }
  const Vector& entries() const { return v_; }
  Vector& entries() { return v_; }

  Complex operator()(int m, int n) const { return v_[index(m, n)]; }
  Complex& operator()(int m, int n) { return v_[index(m, n)]; }
  Eigen::Index index(int m, int n) const {
    return static_cast<Eigen::Index>(m) * dim_ + n;
  }

  LiouvilleVector& operator+=(const LiouvilleVector& o);
  LiouvilleVector& operator*=(Complex s);
  friend LiouvilleVector operator+(LiouvilleVector a, const LiouvilleVector& b) {
    return a += b;
  }
  friend LiouvilleVector operator*(Complex s, LiouvilleVector a) { return a *= s; }

 private:
  int dim_ = 0;
  Vector v_;
};

LiouvilleVector vectorize(const DensityMatrix& rho);
DensityMatrix devectorize(const LiouvilleVector& v);

/// Hilbert-Schmidt product Tr[A^dagger B].
Complex hs_inner(const LiouvilleVector& a, const LiouvilleVector& b);

/// Exact action of a superoperator generator. SU2 requires dim 2; SU11 acts on
/// the Fock space truncated at dim, zeroing amplitude pushed past the cutoff.
LiouvilleVector apply_superop(Algebra kind, Generator gen, const LiouvilleVector& v);

/// Same, accumulating into `leaked` the trace weight K+ pushes past the cutoff.
LiouvilleVector apply_superop(Algebra kind, Generator gen, const LiouvilleVector& v,
                              double& leaked);

/// Eigenvalue of the diagonal generators (Zero, R, Casimir, Identity) on |ket><bra|.
double diagonal_eigenvalue(Algebra kind, Generator gen, int ket, int bra);

/// Throws DimensionError unless the vector fits the algebra's representation.
void check_representation(Algebra kind, int dim);

}  // namespace lcs
