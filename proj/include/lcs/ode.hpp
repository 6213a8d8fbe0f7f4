#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lcs/types.hpp"

namespace lcs::ode {

struct Options {
  double rtol = 1e-10;
  double atol = 1e-10;
  std::size_t max_steps = 20'000'000;
  /// Bound the local error per unit time (error / step) instead of per step.
  bool error_per_unit_time = false;
};

struct Stats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t evaluations = 0;
};

/// dy/dt at complex time t (real on the physical axis).
using Rhs = std::function<void(Complex t, const Vector& y, Vector& dydt)>;
/// Called after every accepted step; may throw to abort the integration.
using StepHook = std::function<void(Complex t, const Vector& y)>;

/// Dormand-Prince 5(4) with local error control and the 4th-order continuous
/// extension for output points that fall inside a step.
///
/// The solution is reported at every time in `grid` (strictly increasing, real).
/// An interval (grid[k], grid[k+1]) containing one of `poles` is traversed on the
/// upper half circle with that interval as its diameter, so the result is the
/// analytic continuation of the solution past singularities of the right-hand
/// side. A pole coinciding with a grid point is rejected.
std::vector<Vector> integrate_on_grid(const Rhs& f, const Vector& y0,
                                      std::span<const double> grid,
                                      std::span<const double> poles,
                                      const Options& opts, const StepHook& hook = {},
                                      Stats* stats = nullptr);

}  // namespace lcs::ode
