#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcs/coherent.hpp"
#include "lcs/liouville.hpp"
#include "lcs/models.hpp"
#include "lcs/oracle.hpp"
#include "lcs/riccati.hpp"

namespace py = pybind11;
using namespace lcs;

namespace {

Algebra algebra_from(const std::string& name) {
  if (name == "su2") return Algebra::SU2;
  if (name == "su11") return Algebra::SU11;
  throw DomainError("algebra must be 'su2' or 'su11', got '" + name + "'");
}

Generator generator_from(const std::string& name) {
  if (name == "plus") return Generator::Plus;
  if (name == "minus") return Generator::Minus;
  if (name == "zero") return Generator::Zero;
  if (name == "r") return Generator::R;
  if (name == "casimir") return Generator::Casimir;
  if (name == "identity") return Generator::Identity;
  throw DomainError("unknown generator '" + name + "'");
}

OscillatorBathParams with_frequency(OscillatorBathParams p, double omega) {
  p.omega = [omega](Complex) { return Complex(omega); };
  return p;
}

Matrix apply(const std::string& algebra, const std::string& generator, const Matrix& rho) {
  return devectorize(apply_superop(algebra_from(algebra), generator_from(generator),
                                   vectorize(DensityMatrix(rho))))
      .matrix();
}

py::dict trajectory_dict(const Trajectory& tr) {
  std::vector<Matrix> states;
  for (const auto& s : tr.states) states.push_back(s.matrix());
  py::dict d;
  d["times"] = tr.times;
  d["states"] = states;
  d["leak"] = tr.leak;
  d["hermiticity_defect"] = tr.hermiticity_defect;
  return d;
}

}  // namespace

PYBIND11_MODULE(_lcs, m) {
  m.doc() = "Liouville coherent states: disentangled propagation and a brute-force reference";

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  m.def("sigma_of", [](const std::string& a) { return sigma_of(algebra_from(a)); });
  m.def("apply_superop", &apply, py::arg("algebra"), py::arg("generator"), py::arg("rho"),
        "Action of a superoperator generator on an operator given as a square matrix.");

  py::class_<DisentangleSample>(m, "DisentangleSample")
      .def(py::init<>())
      .def_readwrite("time", &DisentangleSample::time)
      .def_readwrite("f_plus", &DisentangleSample::f_plus)
      .def_readwrite("f_z", &DisentangleSample::f_z)
      .def_readwrite("f_minus", &DisentangleSample::f_minus)
      .def_readwrite("u1_phase", &DisentangleSample::u1_phase)
      .def_readwrite("scalar_weight", &DisentangleSample::scalar_weight)
      .def("__repr__", [](const DisentangleSample& s) {
        return "<DisentangleSample t=" + std::to_string(s.time) + ">";
      });

  m.def(
      "solve_const",
      [](double gp, double gm, double gz, int sigma, double t) {
        const auto c = solve_const(gp, gm, gz, sigma, t);
        return py::make_tuple(c.f_plus, c.f0_exp, c.f_minus);
      },
      py::arg("gamma_plus"), py::arg("gamma_minus"), py::arg("gamma_z"), py::arg("sigma"),
      py::arg("t"), "Closed-form (f_plus, exp(f_z), f_minus) for constant rates.");

  py::class_<RateFunctions>(m, "RateFunctions")
      .def_property_readonly("sigma", &RateFunctions::sigma)
      .def("poles", &RateFunctions::poles, py::arg("t0"), py::arg("t1"));

  py::class_<SpinBosonParams>(m, "SpinBosonParams")
      .def(py::init([](double omega, double g, double delta, double nbar) {
             return SpinBosonParams{omega, g, delta, nbar};
           }),
           py::arg("omega") = 2.0, py::arg("g") = 1.0, py::arg("delta") = 0.0,
           py::arg("nbar") = 0.0)
      .def_readwrite("omega", &SpinBosonParams::omega)
      .def_readwrite("g", &SpinBosonParams::g)
      .def_readwrite("delta", &SpinBosonParams::delta)
      .def_readwrite("nbar", &SpinBosonParams::nbar)
      .def("delta_prime", &SpinBosonParams::delta_prime)
      .def("poles", &SpinBosonParams::poles);

  py::class_<OscillatorBathParams>(m, "OscillatorBathParams")
      .def(py::init([](double gamma, double a, double big_gamma, double nbar, double omega) {
             OscillatorBathParams p;
             p.gamma = gamma;
             p.a = a;
             p.big_gamma = big_gamma;
             p.nbar = nbar;
             return with_frequency(p, omega);
           }),
           py::arg("gamma") = 1.0, py::arg("a") = 1.0, py::arg("big_gamma") = 0.0,
           py::arg("nbar") = 0.0, py::arg("omega") = 1.0)
      .def_static(
          "modulated",
          [](double gamma, double nbar, double omega) {
            return with_frequency(OscillatorBathParams::modulated(gamma, nbar), omega);
          },
          py::arg("gamma"), py::arg("nbar"), py::arg("omega") = 1.0)
      .def_static(
          "constant",
          [](double gamma, double nbar, double omega) {
            return with_frequency(OscillatorBathParams::constant(gamma, nbar), omega);
          },
          py::arg("gamma"), py::arg("nbar"), py::arg("omega") = 1.0)
      .def_readonly("gamma", &OscillatorBathParams::gamma)
      .def_readonly("a", &OscillatorBathParams::a)
      .def_readonly("big_gamma", &OscillatorBathParams::big_gamma)
      .def_readonly("nbar", &OscillatorBathParams::nbar);

  m.def("su2_rates", &su2_rates, py::arg("params"));
  m.def("su11_rates", &su11_rates, py::arg("params"));

  m.def(
      "solve_ode",
      [](const RateFunctions& rates, const std::vector<double>& times, double tol) {
        return solve_ode(rates, times, RiccatiOptions{tol}).samples;
      },
      py::arg("rates"), py::arg("times"), py::arg("tol") = 1e-10,
      "Disentangling coefficients on a strictly increasing grid starting at 0.");

  m.def(
      "coherent_state",
      [](const std::string& algebra, Complex zeta, int sector, bool conjugate, int truncation) {
        return devectorize(
                   coherent_vector({algebra_from(algebra), sector, conjugate, zeta}, truncation))
            .matrix();
      },
      py::arg("algebra"), py::arg("zeta"), py::arg("m") = 0, py::arg("conjugate") = false,
      py::arg("truncation") = 2);

  m.def(
      "evolve_params",
      [](const DisentangleSample& c, const std::string& algebra, Complex zeta, int sector) {
        const GParams g = evolve_params(c, {algebra_from(algebra), sector, false, zeta});
        py::dict d;
        d["g_plus"] = g.g_plus;
        d["g_zero"] = g.g_zero;
        d["g_minus"] = g.g_minus;
        d["prefactor"] = g.prefactor;
        return d;
      },
      py::arg("coeffs"), py::arg("algebra"), py::arg("zeta"), py::arg("m") = 0);

  m.def(
      "circle_map",
      [](const DisentangleSample& c, double abs_zeta, int sigma) {
        const CircleImage im = circle_map(c, abs_zeta, sigma);
        return py::make_tuple(im.radius, im.center);
      },
      py::arg("coeffs"), py::arg("abs_zeta"), py::arg("sigma"),
      "(radius, center) of the image of |zeta| = abs_zeta.");

  m.def(
      "su2_evolve",
      [](const DisentangleSample& c, const Matrix& rho0) {
        return su2_evolve(c, su2_decompose(DensityMatrix(rho0))).matrix();
      },
      py::arg("coeffs"), py::arg("rho0"));

  m.def(
      "su11_state",
      [](Complex zeta, int truncation) {
        return su11_assemble({{0, su11_trace_normalized_c0(zeta), zeta, false}}, truncation)
            .rho.matrix();
      },
      py::arg("zeta"), py::arg("truncation") = 64,
      "Unit-trace state built from the m = 0 coherent state and its adjoint.");

  m.def(
      "su11_evolve",
      [](const DisentangleSample& c, Complex zeta, int truncation) {
        const std::vector<Su11Term> terms{{0, su11_trace_normalized_c0(zeta), zeta, false}};
        return su11_sum(su11_evolve_terms(c, terms), truncation).matrix();
      },
      py::arg("coeffs"), py::arg("zeta"), py::arg("truncation") = 64);

  m.def(
      "integrate_su2",
      [](const SpinBosonParams& p, const Matrix& rho0, const std::vector<double>& times,
         double tol, bool physical) {
        IntegrateOptions o;
        o.tol = tol;
        o.physical = physical;
        return trajectory_dict(integrate(su2_lindblad(p), DensityMatrix(rho0), times, o));
      },
      py::arg("params"), py::arg("rho0"), py::arg("times"), py::arg("tol") = 1e-10,
      py::arg("physical") = true, "Reference propagation of the qubit master equation.");

  m.def(
      "integrate_su11",
      [](const OscillatorBathParams& p, const Matrix& rho0, const std::vector<double>& times,
         double tol) {
        IntegrateOptions o;
        o.tol = tol;
        return trajectory_dict(
            integrate(su11_lindblad(p, static_cast<int>(rho0.rows())), DensityMatrix(rho0), times, o));
      },
      py::arg("params"), py::arg("rho0"), py::arg("times"), py::arg("tol") = 1e-10,
      "Reference propagation of the damped oscillator; the truncation is rho0's dimension.");

  m.def(
      "trace_distance",
      [](const Matrix& a, const Matrix& b) { return trace_distance(DensityMatrix(a), DensityMatrix(b)); },
      py::arg("a"), py::arg("b"));

  m.def(
      "observables",
      [](const Matrix& rho) {
        const Observables o = observables(DensityMatrix(rho));
        py::dict d;
        d["trace"] = o.trace;
        d["purity"] = o.purity;
        d["entropy"] = o.entropy;
        return d;
      },
      py::arg("rho"));

  m.def("identity_resolution_check_su2", &identity_resolution_check_su2, py::arg("n_theta"),
        py::arg("n_phi"));
}
