#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace bcspec {

inline constexpr const char* kVersion = "0.1.0";

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Vec2c = Eigen::Vector2cd;
using Vec2 = Eigen::Vector2d;

inline constexpr double kDefaultTol = 1e-12;

/// Execution policy for the data-parallel kernels. Every parallel code path
/// has a serial twin that produces bit-identical results; tests compare them
/// and the bench target times them against each other.
enum class Exec { serial, parallel };

/// Base error carrying a short machine-readable name alongside the message.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define BCSPEC_DEFINE_ERROR(NAME)                                     \
  class NAME : public Error {                                         \
   public:                                                            \
    explicit NAME(const std::string& what) : Error(#NAME, what) {}    \
  }

BCSPEC_DEFINE_ERROR(NotUnitary);
BCSPEC_DEFINE_ERROR(SingularCayley);
BCSPEC_DEFINE_ERROR(UnknownFamily);
BCSPEC_DEFINE_ERROR(InvalidParams);
BCSPEC_DEFINE_ERROR(NotSelfAdjoint);
BCSPEC_DEFINE_ERROR(SearchBudgetExceeded);
BCSPEC_DEFINE_ERROR(NotAnEigenvalue);
BCSPEC_DEFINE_ERROR(NonHermitianAssembly);
BCSPEC_DEFINE_ERROR(NoMinusOneEigenvalue);
BCSPEC_DEFINE_ERROR(InsufficientModes);
BCSPEC_DEFINE_ERROR(UnsupportedFamily);
BCSPEC_DEFINE_ERROR(UnsupportedRho);
BCSPEC_DEFINE_ERROR(BadSeed);
BCSPEC_DEFINE_ERROR(GridMismatch);
BCSPEC_DEFINE_ERROR(VariationMismatch);
BCSPEC_DEFINE_ERROR(StalledAtBoundary);

#undef BCSPEC_DEFINE_ERROR

/// Uniform grid of n points covering [0,1] including both endpoints.
std::vector<double> unit_grid(int n);

/// Trapezoid quadrature weight of node i on an n-point unit grid.
inline double trapezoid_weight(int i, int n) {
  const double h = 1.0 / (n - 1);
  return (i == 0 || i == n - 1) ? 0.5 * h : h;
}

}  // namespace bcspec
