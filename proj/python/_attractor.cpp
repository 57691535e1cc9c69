// JSON-string bindings; python/attractor/__init__.py turns them into dicts.

#include "attractor/amodel.hpp"
#include "attractor/codec.hpp"
#include "attractor/constellation.hpp"
#include "attractor/exs.hpp"
#include "attractor/mass.hpp"
#include "attractor/torus.hpp"
#include "attractor/torus_inverse.hpp"
#include "attractor/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace attractor;

namespace {

json solution_json(const AttractorSolution& s) {
  return {{"C", to_json(s.C)}, {"T", to_json(s.A)}, {"branch", to_string(s.branch)}};
}

std::string invariants_json(const std::string& charge) {
  const auto inv = invariants(torus_charge_from_json(json::parse(charge)));
  return json{{"R", to_json(inv.R)}, {"M", to_json(inv.M)}, {"D", to_json(inv.D)}}.dump();
}

std::string solve_torus(const std::string& charge, const std::string& mode, const std::string& branch) {
  const json in = json::parse(charge);
  json out;
  if (mode == "kahler") {
    const auto s = solve_kahler(kahler_charge_from_json(in));
    out = {{"C", to_json(s.C)}, {"Omega", to_json(s.Omega)}};
  } else if (mode != "complex") {
    throw std::invalid_argument("mode must be 'complex' or 'kahler'");
  } else if (branch == "symmetric") {
    out = solution_json(solve_complex_symmetric(torus_charge_from_json(in)));
  } else if (branch == "general") {
    out = json::array();
    for (const auto& s : solve_complex_general(torus_charge_from_json(in))) out.push_back(solution_json(s));
  } else {
    throw std::invalid_argument("branch must be 'symmetric' or 'general'");
  }
  return out.dump();
}

std::string invert_picard9(const std::string& period) {
  const auto ic = charge_from_period(period_from_json(json::parse(period)));
  const auto cl = clear_denominators(ic.charge);
  return json{{"charge", to_json(ic.charge)},
              {"n", to_json(ic.n)},
              {"M", to_json(ic.M)},
              {"integral_charge", to_json(cl.charge)},
              {"k", to_json(Rational(cl.k, mpz_class(1)))}}
      .dump();
}

std::string solve_exs_complex(const std::string& lattice, const std::vector<long long>& u1,
                              const std::vector<long long>& u2) {
  const GramLattice L = lattice_from_json(json::parse(lattice));
  const auto a = solve_complex_exs(L, u1, u2);
  json w = json::array();
  for (const auto& x : a.w) w.push_back(to_json(x));
  json om = json::array();
  for (const auto& z : a.omega_float()) om.push_back(to_json(z));
  return json{{"tau", to_json(a.tau)}, {"w", w}, {"omega", om}, {"omega_norm", to_json(a.omega_norm(L))}}.dump();
}

std::string solve_exs_kahler(const std::string& lattice, const std::string& v1, const std::string& v2) {
  const GramLattice ns = lattice_from_json(json::parse(lattice));
  const auto k = solve_kahler_exs(ns, mukai_from_json(json::parse(v1)), mukai_from_json(json::parse(v2)));
  json ws = json::array();
  for (const auto& x : k.omega_S()) ws.push_back(to_json(x));
  return json{{"omega_E", to_json(k.omega_E)},
              {"omega_S", ws},
              {"delta", to_json(k.delta)},
              {"C", to_json(k.C)},
              {"im_omega_S_square", to_json(k.im_omega_S_square(ns))}}
      .dump();
}

std::string minimize_mass(const std::string& charge, int starts, std::uint64_t seed, int threads) {
  MassConfig cfg;
  cfg.n_starts = starts;
  cfg.rng_seed = seed;
  cfg.threads = threads;
  const auto r = minimize(to_float(torus_charge_from_json(json::parse(charge))), cfg);
  return json{{"T", to_json(r.T)},
              {"value", r.value},
              {"grad_norm", r.grad_norm},
              {"converged", r.converged},
              {"attractor_found", r.attractor_found},
              {"best_start", r.best_start}}
      .dump();
}

std::vector<std::pair<cplx, long long>> tau_points(const std::string& lattice, int height, bool primitive) {
  std::vector<std::pair<cplx, long long>> out;
  for (const auto& p : tau_set(lattice_from_json(json::parse(lattice)), height, primitive))
    out.emplace_back(p.tau.to_complex(), p.D);
  return out;
}

std::string run_verify(const std::string& suite, std::uint64_t seed) {
  const SuiteResult r = run_suite(suite, seed, 1);
  return json{{"name", r.name}, {"pass", r.pass}, {"checks", r.checks}, {"failures", r.failures}, {"notes", r.notes}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_attractor, m) {
  m.doc() = "Exact and numerical attractor computations (JSON-string interface).";

  py::register_exception<NoAttractor>(m, "NoAttractor", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def("invariants", &invariants_json, py::arg("charge"));
  m.def("solve_torus", &solve_torus, py::arg("charge"), py::arg("mode") = "complex", py::arg("branch") = "symmetric");
  m.def("invert_picard9", &invert_picard9, py::arg("period"));
  m.def("solve_exs_complex", &solve_exs_complex, py::arg("lattice"), py::arg("u1"), py::arg("u2"));
  m.def("solve_exs_kahler", &solve_exs_kahler, py::arg("lattice"), py::arg("v1"), py::arg("v2"));
  m.def("minimize", &minimize_mass, py::arg("charge"), py::arg("starts") = 20, py::arg("seed") = 0,
        py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
  m.def(
      "wp_elliptic",
      [](cplx tau) { return a_potential(elliptic_charge(tau), elliptic_euler_matrix(), 1); }, py::arg("tau"));
  m.def(
      "wp_quintic",
      [](cplx tau, const std::string& gw) {
        return quintic_a_potential(tau, gw.empty() ? GWTable{} : load_gw_table_file(gw));
      },
      py::arg("tau"), py::arg("gw") = "");
  m.def("tau_set", &tau_points, py::arg("lattice"), py::arg("height"), py::arg("primitive") = false);
  m.def(
      "covering_radius",
      [](const std::vector<cplx>& pts, std::array<double, 4> box, int grid) {
        return covering_radius(pts, Box{box[0], box[1], box[2], box[3]}, grid);
      },
      py::arg("points"), py::arg("box"), py::arg("grid") = 41);
  m.def("verify", &run_verify, py::arg("suite"), py::arg("seed") = 0, py::call_guard<py::gil_scoped_release>());
  m.def("suite_names", &suite_names);
}
