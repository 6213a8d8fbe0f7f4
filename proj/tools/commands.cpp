#include "commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "lcs/coherent.hpp"
#include "lcs/csv.hpp"
#include "lcs/models.hpp"
#include "lcs/oracle.hpp"

namespace lcs::cli {
namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

void write_table(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv::format(row[i]);
    os << '\n';
  }
}

/// Runs body(i) for i in [0, n) on up to sweep_threads() workers; the first
/// exception is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(n, sweep_threads());
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string label(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

SpinBosonParams spin_boson(const RunConfig& c) { return {c.omega, c.g, c.delta, c.nbar}; }

OscillatorBathParams oscillator(const RunConfig& c) {
  OscillatorBathParams p;
  const double w = c.omega;
  p.omega = [w](Complex) { return Complex(w); };
  p.gamma = c.gamma;
  p.a = c.a;
  p.big_gamma = c.big_gamma;
  p.nbar = c.nbar;
  return p;
}

RateFunctions rates_for(const RunConfig& c) {
  return c.algebra() == Algebra::SU2 ? su2_rates(spin_boson(c)) : su11_rates(oscillator(c));
}

std::vector<double> grid_for(const RunConfig& c) { return linspace(0.0, c.t_end, c.n_out); }

DisentangleCoefficients coefficients(const RateFunctions& r, const RunConfig& c) {
  const auto grid = grid_for(c);
  return solve_ode(r, grid, RiccatiOptions{c.tol});
}

double purity(const DensityMatrix& rho) { return (rho.matrix() * rho.matrix()).trace().real(); }

/// Observables that tolerate unphysical (non-positive) combinations: entropy is NaN there.
std::vector<double> loose_observables(const DensityMatrix& rho) {
  double entropy = std::nan("");
  try {
    entropy = observables(rho.hermitian_part()).entropy;
  } catch (const DomainError&) {
  }
  return {purity(rho), entropy, rho.trace().real()};
}

DensityMatrix pure_qubit(Complex zeta) {
  Vector psi(2);
  psi << zeta, 1.0;  // |up> amplitude zeta, |dn> amplitude 1
  psi.normalize();
  return DensityMatrix(psi * psi.adjoint());
}

/// Trace-normalized j = 1/2 coherent state c1(zeta) |1/2; zeta>, diagonal for real zeta.
DensityMatrix su2_lcs_state(double zeta) {
  const double c1 = std::sqrt(1.0 + zeta * zeta) / (1.0 + zeta);
  return su2_reconstruct({0.0, c1, zeta});
}

Table riccati(const RunConfig& c) {
  std::ostringstream os;
  write_csv(os, coefficients(rates_for(c), c));
  Table t;
  t.header = {os.str()};
  return t;
}

Table evolve(const RunConfig& c, bool circle_only) {
  const auto co = coefficients(rates_for(c), c);
  const CoherentState st{c.algebra(), c.algebra() == Algebra::SU11 ? c.m : 0, false, c.zeta0};
  st.validate();
  const int sigma = sigma_of(c.algebra());
  Table t;
  if (circle_only) {
    t.header = {"time", "R", "z_re", "z_im"};
    for (const auto& s : co.samples) {
      const CircleImage im = circle_map(s, std::abs(c.zeta0), sigma);
      t.rows.push_back({s.time, im.radius, im.center.real(), im.center.imag()});
    }
    return t;
  }
  std::vector<ParamSample> samples;
  for (const auto& s : co.samples)
    samples.push_back({s.time, evolve_params(s, st), circle_map(s, std::abs(c.zeta0), sigma)});
  std::ostringstream os;
  write_csv(os, samples);
  t.header = {os.str()};
  return t;
}

struct CompareResult {
  Table table;
  double max_distance = 0.0;
};

CompareResult compare(const RunConfig& c) {
  const auto grid = grid_for(c);
  const auto co = solve_ode(rates_for(c), grid, RiccatiOptions{c.tol});
  IntegrateOptions opts;
  opts.tol = c.tol;

  std::vector<DensityMatrix> lcs_states;
  Trajectory oracle;
  if (c.algebra() == Algebra::SU2) {
    const DensityMatrix rho0 = pure_qubit(c.zeta0);
    const Su2Decomposition parts = su2_decompose(rho0);
    for (const auto& s : co.samples) lcs_states.push_back(su2_evolve(s, parts));
    oracle = integrate(su2_lindblad(spin_boson(c)), rho0, grid, opts);
  } else {
    const std::vector<Su11Term> terms{{0, su11_trace_normalized_c0(c.zeta0), c.zeta0, false}};
    const DensityMatrix rho0 = su11_assemble(terms, c.truncation).rho;
    for (const auto& s : co.samples)
      lcs_states.push_back(su11_sum(su11_evolve_terms(s, terms), c.truncation));
    oracle = integrate(su11_lindblad(oscillator(c), c.truncation), rho0, grid, opts);
  }

  CompareResult r;
  r.table.header = {"time",         "trace_distance", "lcs_purity",    "lcs_entropy",
                    "lcs_trace_re", "oracle_purity",  "oracle_entropy", "oracle_trace_re",
                    "oracle_leak"};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double d = trace_distance(lcs_states[i], oracle.states[i]);
    r.max_distance = std::max(r.max_distance, d);
    std::vector<double> row{grid[i], d};
    for (double v : loose_observables(lcs_states[i])) row.push_back(v);
    for (double v : loose_observables(oracle.states[i])) row.push_back(v);
    row.push_back(oracle.leak[i]);
    r.table.rows.push_back(std::move(row));
  }
  return r;
}

/// Columns R, z_re, z_im for each sweep member, computed in parallel.
Table circle_sweep(const RunConfig& c, const std::vector<RateFunctions>& members,
                   const std::vector<std::string>& suffixes) {
  const auto grid = grid_for(c);
  std::vector<std::vector<CircleImage>> images(members.size());
  parallel_for(members.size(), [&](std::size_t k) {
    const auto co = solve_ode(members[k], grid, RiccatiOptions{c.tol});
    for (const auto& s : co.samples)
      images[k].push_back(circle_map(s, std::abs(c.zeta0), members[k].sigma()));
  });
  Table t;
  t.header = {"time"};
  for (const auto& s : suffixes) {
    t.header.push_back("R_" + s);
    t.header.push_back("z_re_" + s);
    t.header.push_back("z_im_" + s);
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row{grid[i]};
    for (const auto& im : images) {
      row.push_back(im[i].radius);
      row.push_back(im[i].center.real());
      row.push_back(im[i].center.imag());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table figure1(const RunConfig& c) {
  std::vector<RateFunctions> members;
  std::vector<std::string> names;
  for (double delta : {0.0, 1.0, 2.0}) {
    SpinBosonParams p = spin_boson(c);
    p.delta = delta;
    members.push_back(su2_rates(p));
    names.push_back("delta" + label(delta));
  }
  return circle_sweep(c, members, names);
}

Table figure3(const RunConfig& c) {
  std::vector<RateFunctions> members;
  std::vector<std::string> names;
  for (double a : {1.0, 0.0}) {
    for (double nbar : {0.0, 0.5, 1.0}) {
      OscillatorBathParams p = oscillator(c);
      p.a = a;
      p.nbar = nbar;
      members.push_back(su11_rates(p));
      names.push_back("a" + label(a) + "_nbar" + label(nbar));
    }
  }
  return circle_sweep(c, members, names);
}

Table figure2(const RunConfig& c) {
  const auto grid = grid_for(c);
  std::vector<std::string> names;
  std::vector<std::function<std::vector<double>()>> jobs;
  RateFunctions rates;
  if (c.algebra() == Algebra::SU2) {
    rates = su2_rates(spin_boson(c));
    for (double zeta : {0.0, 0.25, 0.5, 1.0}) {
      names.push_back("purity_zeta" + label(zeta));
      jobs.push_back([&, zeta] {
        const auto co = solve_ode(rates, grid, RiccatiOptions{c.tol});
        const Su2Decomposition parts = su2_decompose(su2_lcs_state(zeta));
        std::vector<double> out;
        for (const auto& s : co.samples) out.push_back(purity(su2_evolve(s, parts)));
        return out;
      });
    }
  } else {
    OscillatorBathParams p = OscillatorBathParams::modulated(c.gamma, c.nbar);
    const double w = c.omega;
    p.omega = [w](Complex) { return Complex(w); };
    rates = su11_rates(p);
    auto add = [&](std::string name, std::vector<Su11Term> terms) {
      names.push_back(std::move(name));
      jobs.push_back([&, terms] {
        const auto co = solve_ode(rates, grid, RiccatiOptions{c.tol});
        if (min_eigenvalue(su11_assemble(terms, c.truncation).rho) < -1e-10) {
          throw DomainError("figure2 initial state is not positive");
        }
        std::vector<double> out;
        for (const auto& s : co.samples)
          out.push_back(purity(su11_sum(su11_evolve_terms(s, terms), c.truncation)));
        return out;
      });
    };
    for (double z0 : {0.1, 0.3, 0.5, 0.7})
      add("purity_zeta" + label(z0), {{0, su11_trace_normalized_c0(z0), z0, false}});
    for (double z0 : {0.3, 0.5})
      add("purity_zeta" + label(z0) + "_admix",
          {{0, su11_trace_normalized_c0(z0), z0, false}, {1, 0.02, 0.5 * z0, false}});
  }
  std::vector<std::vector<double>> cols(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t k) { cols[k] = jobs[k](); });
  Table t;
  t.header = {"time"};
  t.header.insert(t.header.end(), names.begin(), names.end());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row{grid[i]};
    for (const auto& col : cols) row.push_back(col[i]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table identity_check() {
  Table t;
  t.header = {"n_theta", "n_phi", "deviation"};
  for (int n : {4, 8, 16, 32}) {
    t.rows.push_back({double(n), double(2 * n), identity_resolution_check_su2(n, 2 * n)});
  }
  return t;
}

void emit(const RunConfig& c, const Table& t) {
  csv::AtomicFile file(c.out);
  // riccati/evolve pre-render through the library CSV writers
  if (t.rows.empty() && t.header.size() == 1) {
    file.stream() << t.header.front();
  } else {
    write_table(file.stream(), t);
  }
  file.commit();
}

}  // namespace

std::size_t sweep_threads() {
  if (const char* env = std::getenv("LCS_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const RunConfig& c, std::ostream& err) {
  try {
    switch (c.command) {
      case Command::Riccati: emit(c, riccati(c)); break;
      case Command::Evolve: emit(c, evolve(c, false)); break;
      case Command::Circle: emit(c, evolve(c, true)); break;
      case Command::Figure1: emit(c, figure1(c)); break;
      case Command::Figure2: emit(c, figure2(c)); break;
      case Command::Figure3: emit(c, figure3(c)); break;
      case Command::IdentityCheck: emit(c, identity_check()); break;
      case Command::Compare: {
        const CompareResult r = compare(c);
        emit(c, r.table);
        err << "max trace distance " << csv::format(r.max_distance) << " (threshold "
            << csv::format(c.threshold) << ")\n";
        if (!(r.max_distance <= c.threshold)) {
          err << "lcs: compare failed: disentangled and oracle trajectories differ\n";
          return kCompareFailed;
        }
        break;
      }
    }
  } catch (const NumericalError& e) {
    err << "lcs: numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const DomainError& e) {
    err << "lcs: invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "lcs: " << e.what() << '\n';
    return kNumerical;
  }
  return kOk;
}

int main_entry(const std::vector<std::string>& args, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_config(args);
  } catch (const ConfigError& e) {
    err << "lcs: " << e.what() << '\n';
    return kUsage;
  }
  echo(err, cfg);
  return run(cfg, err);
}

}  // namespace lcs::cli
