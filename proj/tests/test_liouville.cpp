#include <doctest.h>

#include <random>

#include "lcs/liouville.hpp"
#include "support.hpp"

using namespace lcs;
using lcs::testing::Gen;

namespace {

LiouvilleVector vec(const Matrix& m) { return vectorize(DensityMatrix(m)); }

LiouvilleVector op(Algebra k, Generator g, const LiouvilleVector& v) {
  return apply_superop(k, g, v);
}

/// [A, B] v
Vector commutator(Algebra k, Generator a, Generator b, const LiouvilleVector& v) {
  return op(k, a, op(k, b, v)).entries() - op(k, b, op(k, a, v)).entries();
}

double rel(const Vector& x, const Vector& ref) {
  return (x - ref).norm() / std::max(1.0, ref.norm());
}

Gen to_ref(Generator g) {
  switch (g) {
    case Generator::Plus: return Gen::Plus;
    case Generator::Minus: return Gen::Minus;
    case Generator::Zero: return Gen::Zero;
    case Generator::R: return Gen::R;
    default: return Gen::Casimir;
  }
}

}  // namespace

TEST_CASE("vectorize basis and diagonal cases") {
  const LiouvilleVector v = vectorize(DensityMatrix::outer(2, 0, 0));
  CHECK(v.size() == 4);
  CHECK(v.entries()[0] == Complex(1.0));
  CHECK(v.entries().tail(3).norm() == 0.0);

  const LiouvilleVector half = vec(0.5 * Matrix::Identity(2, 2));
  CHECK(half.entries()[0] == Complex(0.5));
  CHECK(half.entries()[1] == Complex(0.0));
  CHECK(half.entries()[2] == Complex(0.0));
  CHECK(half.entries()[3] == Complex(0.5));
}

TEST_CASE("vectorize is row-major over (ket, bra)") {
  Matrix m(2, 2);
  m << 1.0, 2.0, 3.0, 4.0;
  const LiouvilleVector v = vec(m);
  CHECK(v.entries()[1] == Complex(2.0));  // (0, 1)
  CHECK(v.entries()[2] == Complex(3.0));  // (1, 0)
}

TEST_CASE("hs_inner of a random Hermitian operator equals its squared Frobenius sum") {
  std::mt19937_64 rng(7);
  Matrix a = testing::random_operator(rng, 3);
  a = (a + a.adjoint()).eval();
  double direct = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) direct += std::norm(a(i, j));
  const LiouvilleVector v = vec(a);
  CHECK(std::abs(hs_inner(v, v) - direct) < 1e-12 * direct);
}

TEST_CASE("hs_inner examples and conjugate symmetry") {
  const auto p0 = vectorize(DensityMatrix::outer(2, 0, 0));
  const auto p1 = vectorize(DensityMatrix::outer(2, 1, 1));
  CHECK(hs_inner(p0, p0) == Complex(1.0));
  CHECK(hs_inner(p0, p1) == Complex(0.0));
  const auto sp = vec(testing::sigma_plus());
  CHECK(hs_inner(sp, sp) == Complex(1.0));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 10; ++i) {
    const auto a = vec(testing::random_operator(rng, 4));
    const auto b = vec(testing::random_operator(rng, 4));
    // Tr[A^+ B] computed directly
    const Complex direct = (devectorize(a).matrix().adjoint() * devectorize(b).matrix()).trace();
    CHECK(std::abs(hs_inner(a, b) - direct) < 1e-12 * std::abs(direct) + 1e-14);
    CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-12);
  }
  CHECK_THROWS_AS(hs_inner(p0, LiouvilleVector::zero(3)), DimensionError);
}

TEST_CASE("vectorize/devectorize round trip is exact up to dim 64") {
  std::mt19937_64 rng(3);
  for (int d : {1, 2, 5, 17, 64}) {
    const Matrix m = testing::random_operator(rng, d);
    const DensityMatrix back = devectorize(vectorize(DensityMatrix(m)));
    CHECK((back.matrix().array() == m.array()).all());
  }
}

TEST_CASE("su(2) generator examples") {
  const auto down = vectorize(DensityMatrix::outer(2, 1, 1));
  const auto up = vectorize(DensityMatrix::outer(2, 0, 0));
  CHECK((op(Algebra::SU2, Generator::Plus, down).entries() - up.entries()).norm() == 0.0);

  const auto sp = vectorize(DensityMatrix::outer(2, 0, 1));  // |up><dn|
  CHECK((op(Algebra::SU2, Generator::R, sp).entries() - sp.entries()).norm() == 0.0);
}

TEST_CASE("su(1,1) lowering acts as n |n-1><n-1| on number states") {
  const int N = 8;
  for (int n = 0; n < N; ++n) {
    const auto v = vectorize(DensityMatrix::outer(N, n, n));
    const auto out = op(Algebra::SU11, Generator::Minus, v);
    LiouvilleVector expect = LiouvilleVector::zero(N);
    if (n >= 1) expect(n - 1, n - 1) = double(n);
    CHECK((out.entries() - expect.entries()).norm() < 1e-14);
  }
}

TEST_CASE("generators match their defining matrix products") {
  std::mt19937_64 rng(5);
  for (Generator g : {Generator::Plus, Generator::Minus, Generator::Zero, Generator::R,
                      Generator::Casimir}) {
    const Matrix a = testing::random_operator(rng, 2);
    CHECK(testing::max_abs(devectorize(op(Algebra::SU2, g, vec(a))).matrix() -
                           testing::su2_reference(to_ref(g), a)) < 1e-14);
    const Matrix b = testing::random_operator(rng, 9);
    CHECK(testing::max_abs(devectorize(op(Algebra::SU11, g, vec(b))).matrix() -
                           testing::su11_reference(to_ref(g), b)) < 1e-12);
  }
  const auto id = op(Algebra::SU2, Generator::Identity, vec(Matrix::Identity(2, 2)));
  CHECK((id.entries() - vec(Matrix::Identity(2, 2)).entries()).norm() == 0.0);
}

TEST_CASE("su(2) Casimir closed form equals (L+L- + L-L+)/2 + L0^2") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const auto v = vec(testing::random_operator(rng, 2));
    const auto k = Algebra::SU2;
    const Vector composed = 0.5 * (op(k, Generator::Plus, op(k, Generator::Minus, v)).entries() +
                                   op(k, Generator::Minus, op(k, Generator::Plus, v)).entries()) +
                            op(k, Generator::Zero, op(k, Generator::Zero, v)).entries();
    CHECK(rel(op(k, Generator::Casimir, v).entries(), composed) < 1e-14);
  }
}

TEST_CASE("su(1,1) Casimir closed form equals K0^2 - (K+K- + K-K+)/2 away from the cutoff") {
  std::mt19937_64 rng(19);
  const int N = 12;
  for (int i = 0; i < 20; ++i) {
    const auto v = vec(testing::random_operator(rng, N, N - 2));
    const auto k = Algebra::SU11;
    const Vector composed =
        op(k, Generator::Zero, op(k, Generator::Zero, v)).entries() -
        0.5 * (op(k, Generator::Plus, op(k, Generator::Minus, v)).entries() +
               op(k, Generator::Minus, op(k, Generator::Plus, v)).entries());
    CHECK(rel(op(k, Generator::Casimir, v).entries(), composed) < 1e-12);
  }
}

TEST_CASE("commutation relations on 50 random operators per algebra") {
  std::mt19937_64 rng(2024);
  for (auto [kind, dim, support] : {std::tuple{Algebra::SU2, 2, 2}, std::tuple{Algebra::SU11, 10, 8}}) {
    const double sigma = sigma_of(kind);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto v = vec(testing::random_operator(rng, dim, support));
      const Vector l0 = op(kind, Generator::Zero, v).entries();
      const Vector lp = op(kind, Generator::Plus, v).entries();
      // [L-, L+] = 2 sigma L0 fixes the sign assignment
      worst = std::max(worst, rel(commutator(kind, Generator::Minus, Generator::Plus, v), 2.0 * sigma * l0));
      worst = std::max(worst, rel(commutator(kind, Generator::Zero, Generator::Plus, v), lp));
      worst = std::max(worst, rel(commutator(kind, Generator::Zero, Generator::Minus, v),
                                  -op(kind, Generator::Minus, v).entries()));
      for (Generator g : {Generator::Plus, Generator::Minus, Generator::Zero}) {
        worst = std::max(worst, rel(commutator(kind, g, Generator::R, v), Vector::Zero(v.size())));
        worst = std::max(worst, rel(commutator(kind, g, Generator::Casimir, v), Vector::Zero(v.size())));
      }
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("the sigma assignment is the only one consistent with the generators") {
  std::mt19937_64 rng(1);
  const auto v = vec(testing::random_operator(rng, 2));
  const Vector c = commutator(Algebra::SU2, Generator::Minus, Generator::Plus, v);
  const Vector l0 = op(Algebra::SU2, Generator::Zero, v).entries();
  CHECK(rel(c, -2.0 * l0) < 1e-14);
  CHECK(rel(c, 2.0 * l0) > 0.1);
  CHECK(sigma_of(Algebra::SU2) == -1);
  CHECK(sigma_of(Algebra::SU11) == 1);
}

TEST_CASE("Casimir eigenvalues label the irreducible sectors") {
  const int N = 10;
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n + m < N; ++n) {
      const auto v = vectorize(DensityMatrix::outer(N, n + m, n));
      const double k = 0.5 * (1.0 + m);
      const auto out = op(Algebra::SU11, Generator::Casimir, v);
      CHECK(std::abs(out(n + m, n) - k * (k - 1.0)) < 1e-14);
    }
  }
  const auto sp = vectorize(DensityMatrix::outer(2, 0, 1));
  const auto sm = vectorize(DensityMatrix::outer(2, 1, 0));
  CHECK(op(Algebra::SU2, Generator::Casimir, sp).entries().norm() == 0.0);
  CHECK(op(Algebra::SU2, Generator::Casimir, sm).entries().norm() == 0.0);
  for (double s : {1.0, -1.0}) {
    const Matrix half = 0.5 * (Matrix::Identity(2, 2) + s * testing::sigma_z());
    const auto v = vec(half);
    CHECK(rel(op(Algebra::SU2, Generator::Casimir, v).entries(), 0.75 * v.entries()) < 1e-15);
  }
}

TEST_CASE("su(1,1) raising reports trace weight lost at the cutoff") {
  const int N = 4;
  auto v = vectorize(DensityMatrix::outer(N, N - 1, N - 1));
  double leaked = 0.0;
  const auto out = apply_superop(Algebra::SU11, Generator::Plus, v, leaked);
  CHECK(out.entries().norm() == 0.0);
  CHECK(leaked == doctest::Approx(N));
}

TEST_CASE("su(2) generators reject other dimensions") {
  CHECK_THROWS_AS(apply_superop(Algebra::SU2, Generator::Plus, LiouvilleVector::zero(3)),
                  DimensionError);
  CHECK_THROWS_AS(apply_superop(Algebra::SU2, static_cast<Generator>(42), LiouvilleVector::zero(2)),
                  DomainError);
  CHECK_THROWS_AS(DensityMatrix(Matrix::Zero(2, 3)), DimensionError);
}
