#include "lcs/ode.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace lcs::ode {
namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Continuous extension.
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

/// Right-hand side in a real path parameter s.
using PathRhs = std::function<void(double s, const Vector& y, Vector& dyds)>;
using PathMap = std::function<Complex(double s)>;

class Dopri5 {
 public:
  Dopri5(const Options& opts, const StepHook& hook, Stats& stats)
      : opts_(opts), hook_(hook), stats_(stats) {}

  /// Integrates from s0 to s1, pushing the state at each of `outputs` (sorted,
  /// inside (s0, s1]) into `sink`. `h` carries the step size between calls.
  void run(const PathRhs& g, const PathMap& path, double s0, double s1, Vector& y,
           std::span<const double> outputs, std::vector<Vector>& sink, double& h,
           double time_scale = 1.0) {
    const double order = opts_.error_per_unit_time ? 0.25 : 0.2;
    const Eigen::Index n = y.size();
    k1_.resize(n), k2_.resize(n), k3_.resize(n), k4_.resize(n), k5_.resize(n),
        k6_.resize(n), k7_.resize(n), tmp_.resize(n), ynew_.resize(n);

    double s = s0;
    std::size_t next = 0;
    eval(g, s, y, k1_);
    if (!(h > 0.0)) h = initial_step(g, s, y, s1 - s0);
    bool last_rejected = false;

    while (next < outputs.size()) {
      if (stats_.accepted + stats_.rejected > opts_.max_steps) {
        throw NumericalError("ODE step budget exhausted", path(s).real());
      }
      const double remaining = s1 - s;
      if (h >= remaining) h = remaining;
      if (h < 1e-13 * std::max(1.0, std::abs(s))) {
        std::ostringstream os;
        os << "ODE step size underflow at t = " << path(s).real();
        throw NumericalError(os.str(), path(s).real());
      }

      tmp_ = y + h * a21 * k1_;
      eval(g, s + c2 * h, tmp_, k2_);
      tmp_ = y + h * (a31 * k1_ + a32 * k2_);
      eval(g, s + c3 * h, tmp_, k3_);
      tmp_ = y + h * (a41 * k1_ + a42 * k2_ + a43 * k3_);
      eval(g, s + c4 * h, tmp_, k4_);
      tmp_ = y + h * (a51 * k1_ + a52 * k2_ + a53 * k3_ + a54 * k4_);
      eval(g, s + c5 * h, tmp_, k5_);
      tmp_ = y + h * (a61 * k1_ + a62 * k2_ + a63 * k3_ + a64 * k4_ + a65 * k5_);
      const double s_new = (h == remaining) ? s1 : s + h;
      eval(g, s_new, tmp_, k6_);
      ynew_ = y + h * (a71 * k1_ + a73 * k3_ + a74 * k4_ + a75 * k5_ + a76 * k6_);
      eval(g, s_new, ynew_, k7_);

      tmp_ = h * (e1 * k1_ + e3 * k3_ + e4 * k4_ + e5 * k5_ + e6 * k6_ + e7 * k7_);
      double err = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double sc =
            opts_.atol + opts_.rtol * std::max(std::abs(y[i]), std::abs(ynew_[i]));
        const double r = std::abs(tmp_[i]) / sc;
        err += r * r;
      }
      err = std::sqrt(err / static_cast<double>(std::max<Eigen::Index>(n, 1)));
      if (opts_.error_per_unit_time) err /= std::min(1.0, h * time_scale);

      if (!std::isfinite(err) || err > 1.0) {
        ++stats_.rejected;
        const double fac = std::isfinite(err) ? std::max(0.2, 0.9 * std::pow(err, -order)) : 0.2;
        h *= fac;
        last_rejected = true;
        continue;
      }

      ++stats_.accepted;
      while (next < outputs.size() && outputs[next] <= s_new) {
        const double theta = (outputs[next] - s) / h;
        sink.push_back(dense(y, h, theta));
        ++next;
      }
      y = ynew_;
      k1_ = k7_;
      s = s_new;
      if (hook_) hook_(path(s), y);

      double fac = err > 0.0 ? 0.9 * std::pow(err, -order) : 5.0;
      fac = std::clamp(fac, 0.2, last_rejected ? 1.0 : 5.0);
      h *= fac;
      last_rejected = false;
    }
  }

 private:
  void eval(const PathRhs& g, double s, const Vector& y, Vector& out) {
    ++stats_.evaluations;
    g(s, y, out);
  }

  double norm_scaled(const Vector& v, const Vector& y) const {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      const double sc = opts_.atol + opts_.rtol * std::abs(y[i]);
      acc += std::norm(v[i]) / (sc * sc);
    }
    return std::sqrt(acc / static_cast<double>(std::max<Eigen::Index>(v.size(), 1)));
  }

  double initial_step(const PathRhs& g, double s, const Vector& y, double span) {
    const double dn0 = norm_scaled(y, y);
    const double dn1 = norm_scaled(k1_, y);
    double h0 = (dn0 < 1e-5 || dn1 < 1e-5) ? 1e-6 : 0.01 * dn0 / dn1;
    h0 = std::min(h0, span);
    tmp_ = y + h0 * k1_;
    eval(g, s + h0, tmp_, k2_);
    const double dn2 = norm_scaled(k2_ - k1_, y) / h0;
    const double dmax = std::max(dn1, dn2);
    const double h1 = dmax <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dmax, 0.2);
    return std::min({100.0 * h0, h1, span});
  }

  Vector dense(const Vector& y0, double h, double theta) const {
    const Vector r2 = ynew_ - y0;
    const Vector r3 = h * k1_ - r2;
    const Vector r4 = r2 - h * k7_ - r3;
    const Vector r5 = h * (d1 * k1_ + d3 * k3_ + d4 * k4_ + d5 * k5_ + d6 * k6_ + d7 * k7_);
    const double t1 = 1.0 - theta;
    return y0 + theta * (r2 + t1 * (r3 + theta * (r4 + t1 * r5)));
  }

  const Options& opts_;
  const StepHook& hook_;
  Stats& stats_;
  Vector k1_, k2_, k3_, k4_, k5_, k6_, k7_, tmp_, ynew_;
};

bool interval_has_pole(double a, double b, std::span<const double> poles) {
  return std::any_of(poles.begin(), poles.end(), [&](double p) { return p > a && p < b; });
}

}  // namespace

std::vector<Vector> integrate_on_grid(const Rhs& f, const Vector& y0,
                                      std::span<const double> grid,
                                      std::span<const double> poles, const Options& opts,
                                      const StepHook& hook, Stats* stats) {
  if (grid.empty()) throw DomainError("empty output grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw DomainError("output grid must be strictly increasing");
  }
  for (double p : poles) {
    for (double t : grid) {
      if (std::abs(p - t) <= 1e-12 * std::max(1.0, std::abs(p))) {
        std::ostringstream os;
        os << "output time " << t << " coincides with a singularity of the rates";
        throw NumericalError(os.str(), t);
      }
    }
  }

  Stats local;
  Stats& st = stats ? *stats : local;
  Dopri5 stepper(opts, hook, st);
  // Pole detours run at a hundredth of the requested tolerance.
  Options arc_opts = opts;
  arc_opts.rtol *= 1e-2;
  arc_opts.atol *= 1e-2;
  Dopri5 arc_stepper(arc_opts, hook, st);

  std::vector<Vector> out;
  out.reserve(grid.size());
  out.push_back(y0);
  Vector y = y0;
  double h_time = 0.0;  // step size in time units, carried across segments

  const PathRhs real_rhs = [&](double s, const Vector& yy, Vector& dy) { f(Complex(s, 0.0), yy, dy); };
  const PathMap real_path = [](double s) { return Complex(s, 0.0); };

  std::size_t k = 0;
  while (k + 1 < grid.size()) {
    if (!interval_has_pole(grid[k], grid[k + 1], poles)) {
      std::size_t end = k + 1;
      while (end + 1 < grid.size() && !interval_has_pole(grid[end], grid[end + 1], poles)) ++end;
      stepper.run(real_rhs, real_path, grid[k], grid[end], y,
                  grid.subspan(k + 1, end - k), out, h_time);
      k = end;
      continue;
    }
    // Semicircle t(theta) = c - r e^{-i theta}, theta in [0, pi], Im t >= 0.
    const double c = 0.5 * (grid[k] + grid[k + 1]);
    const double r = 0.5 * (grid[k + 1] - grid[k]);
    const PathMap arc = [c, r](double th) { return c - r * std::exp(Complex(0.0, -th)); };
    const PathRhs arc_rhs = [&](double th, const Vector& yy, Vector& dy) {
      const Complex t = arc(th);
      f(t, yy, dy);
      dy *= Complex(0.0, r) * std::exp(Complex(0.0, -th));
    };
    const double end = std::numbers::pi;
    double h_arc = h_time > 0.0 ? h_time / r : 0.0;
    std::vector<Vector> sink;
    arc_stepper.run(arc_rhs, arc, 0.0, end, y, std::span<const double>(&end, 1), sink, h_arc, r);
    out.push_back(std::move(sink.back()));
    h_time = std::min(h_arc * r, grid[k + 1] - grid[k]);
    ++k;
  }
  return out;
}

}  // namespace lcs::ode
