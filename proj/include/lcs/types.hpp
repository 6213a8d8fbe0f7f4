#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace lcs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

/// A scalar function of (possibly complex) time. Real-valued on the real axis;
/// complex arguments are only used to step around poles of the rates.
using Profile = std::function<Complex(Complex)>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in incompatible spaces.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Precondition or parameter-domain violation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Blow-up, singular parameter maps, truncation leakage, step underflow.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double time = 0.0)
      : Error(what), time_(time) {}
  double time() const { return time_; }

 private:
  double time_;
};

enum class Algebra { SU2, SU11 };

/// Sign in [L-, L+] = 2 sigma L0: -1 for su(2), +1 for su(1,1).
constexpr int sigma_of(Algebra kind) { return kind == Algebra::SU2 ? -1 : +1; }

inline const char* to_string(Algebra kind) {
  return kind == Algebra::SU2 ? "su2" : "su11";
}

enum class Generator { Plus, Minus, Zero, R, Casimir, Identity };

}  // namespace lcs
