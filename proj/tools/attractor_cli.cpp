// attractor: command-line front end. Every subcommand prints one JSON report;
// exit codes are 0 ok, 2 bad input, 3 no attractor, 4 suite failure.

#include "attractor/amodel.hpp"
#include "attractor/codec.hpp"
#include "attractor/constellation.hpp"
#include "attractor/exs.hpp"
#include "attractor/mass.hpp"
#include "attractor/torus.hpp"
#include "attractor/torus_inverse.hpp"
#include "attractor/verify.hpp"

#include <CLI11.hpp>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace attractor;

namespace {

constexpr double kSuspect = 1e-9;

enum Exit { kOk = 0, kFailure = 1, kInput = 2, kNoAttractor = 3, kSuiteFailed = 4 };

// FNV-1a over everything that determines the output.
class Digest {
 public:
  void add(const std::string& s) {
    for (unsigned char c : s) {
      h_ ^= c;
      h_ *= 0x100000001b3ULL;
    }
    h_ ^= 0xff;
    h_ *= 0x100000001b3ULL;
  }
  void add_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    add(ss.str());
  }
  std::string hex() const {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h_;
    return os.str();
  }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

struct Report {
  json outputs = json::object();
  json residuals = json::object();
  bool suspect = false;

  // float residuals feed the suspect flag; exact ones are recorded as strings
  void residual(const std::string& key, double v) {
    residuals[key] = v;
    if (!(v <= kSuspect)) suspect = true;
  }
  void residual(const std::string& key, const Rational& v) { residuals[key] = v.str(); }
};

struct Common {
  std::uint64_t seed = 0;
  int threads = 0;
  std::string command;
  Digest digest;
};

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("ATTRACTOR_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("ATTRACTOR_THREADS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

void emit(const json& j) {
  if (isatty(STDOUT_FILENO))
    std::cout << j.dump(2) << '\n';
  else
    std::cout << j.dump() << '\n';
}

json residual_json(const std::array<Rational, 4>& r) {
  json a = json::array();
  for (const auto& x : r) a.push_back(x.str());
  return a;
}

Rational max_of(const std::array<Rational, 4>& r) {
  Rational m(0);
  for (const auto& x : r) m = max_real(m, x);
  return m;
}

double max_of(const std::array<double, 4>& r) {
  double m = 0;
  for (double x : r) m = std::max(m, x);
  return m;
}

json invariants_json(const TorusCharge& c) {
  const auto inv = invariants(c);
  return {{"R", to_json(inv.R)}, {"M", inv.M.str()}, {"D", inv.D.str()}};
}

// ---- subcommands ----

struct SolveTorusArgs {
  std::string charge, mode = "complex", branch = "symmetric";
  bool exact = false, flt = false;
};

void solve_torus(const SolveTorusArgs& a, Common& cm, Report& rep) {
  cm.digest.add_file(a.charge);
  const json in = read_json_file(a.charge);
  const bool use_float = a.flt;
  if (a.mode == "kahler") {
    if (a.branch != "symmetric") throw InputError("kahler mode has only the symmetric branch");
    const KahlerTorusCharge k = kahler_charge_from_json(in);
    rep.outputs["charge"] = to_json(k);
    if (use_float) {
      const KahlerTorusChargeF kf{k.v0.to_double(), to_double(k.V), to_double(k.U), k.u0.to_double()};
      const auto sol = solve_kahler(kf);
      rep.outputs["C"] = to_json(sol.C);
      rep.outputs["Omega"] = to_json(sol.Omega);
      const auto r = residual(-TorusChargeF{kf.v0, kf.V, kf.U, kf.u0}, sol.C, sol.Omega);
      rep.residual("attractor_equations", max_of(r));
      return;
    }
    const auto sol = solve_kahler(k);
    rep.outputs["C"] = to_json(sol.C);
    rep.outputs["Omega"] = to_json(sol.Omega);
    rep.outputs["invariants"] = invariants_json(as_complex_charge(k));
    const auto z = torus_charge_from(torus_exp(sol.Omega));
    rep.residual("kahler_attractor", kahler_attractor_residual(torus_kahler_vector(k), torus_mukai_matrix(), sol.C, z));
    if (is_integral(as_complex_charge(k))) {
      const auto mc = mirror_cover(k, sol.Omega);
      rep.outputs["mirror_cover"] = {
          {"D", mc.D.str()}, {"scale", to_json(mc.scale)}, {"omega_prime", to_json(mc.omega_prime)}};
    }
    return;
  }
  if (a.mode != "complex") throw InputError("--mode must be complex or kahler");
  const TorusCharge c = torus_charge_from_json(in);
  rep.outputs["charge"] = to_json(c);
  rep.outputs["invariants"] = invariants_json(c);
  if (use_float) {
    const TorusChargeF cf = to_float(c);
    json sols = json::array();
    auto add = [&](const AttractorSolutionF& s) {
      sols.push_back({{"branch", to_string(s.branch)}, {"C", to_json(s.C)}, {"A", to_json(s.A)}});
      rep.residual(to_string(s.branch), max_of(residual(cf, s.C, s.A)));
    };
    if (a.branch == "symmetric")
      add(solve_complex_symmetric(cf));
    else
      for (const auto& s : solve_complex_general(cf)) add(s);
    rep.outputs["solutions"] = sols;
    return;
  }
  json sols = json::array();
  auto add = [&](const AttractorSolution& s) {
    const auto r = residual(c, s.C, s.A);
    sols.push_back({{"branch", to_string(s.branch)}, {"C", to_json(s.C)}, {"A", to_json(s.A)},
                    {"residual", residual_json(r)}});
    rep.residual(to_string(s.branch), max_of(r));
  };
  if (a.branch == "symmetric")
    add(solve_complex_symmetric(c));
  else if (a.branch == "general")
    for (const auto& s : solve_complex_general(c)) add(s);
  else
    throw InputError("--branch must be general or symmetric");
  rep.outputs["solutions"] = sols;
}

void invert_picard9(const std::string& path, Common& cm, Report& rep) {
  cm.digest.add_file(path);
  const Picard9Period p = period_from_json(read_json_file(path));
  const InverseCharge ic = charge_from_period(p);
  const ClearedCharge cl = clear_denominators(ic.charge);
  rep.outputs["T"] = to_json(p.period());
  rep.outputs["charge"] = to_json(ic.charge);
  rep.outputs["n"] = ic.n.str();
  rep.outputs["M"] = ic.M.str();
  rep.outputs["integral_charge"] = {{"k", cl.k.get_str()}, {"charge", to_json(cl.charge)}};
  rep.outputs["invariants"] = invariants_json(ic.charge);
  const auto sol = solve_complex_symmetric(ic.charge);
  rep.outputs["period_reproduced"] = sol.A == p.period();
  rep.residual("attractor_equations", max_of(residual(ic.charge, sol.C, sol.A)));
}

struct ExsArgs {
  std::string lattice, vectors, mode = "complex";
};

json quad_vector(const std::vector<QuadNumber>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

void solve_exs(const ExsArgs& a, Common& cm, Report& rep) {
  cm.digest.add_file(a.lattice);
  cm.digest.add_file(a.vectors);
  const GramLattice L = lattice_from_json(read_json_file(a.lattice));
  const json v = read_json_file(a.vectors);
  if (a.mode == "complex") {
    const LatticeVector u1 = lattice_vector_from_json(v.at("u1")), u2 = lattice_vector_from_json(v.at("u2"));
    const auto s = solve_complex_exs(L, u1, u2);
    json om = json::array();
    for (const auto& z : s.omega_float()) om.push_back(to_json(z));
    rep.outputs = {{"D", s.D},
                   {"tau", to_json(s.tau)},
                   {"w", quad_vector(s.w)},
                   {"omega_S", om},
                   {"C_omega_S", quad_vector(s.c_omega)},
                   {"omega_square", to_json(s.omega_square(L))},
                   {"omega_norm", s.omega_norm(L).str()}};
    rep.residual("attractor_equations", exs_complex_residual(s, u1, u2));
    return;
  }
  if (a.mode != "kahler") throw InputError("--mode must be complex or kahler");
  const MukaiVector v1 = mukai_from_json(v.at("v1")), v2 = mukai_from_json(v.at("v2"));
  const auto s = solve_kahler_exs(L, v1, v2);
  const auto [d1, d2] = exponential_defects(L, s.delta);
  rep.outputs = {{"D", s.D.str()},
                 {"omega_E", to_json(s.omega_E)},
                 {"omega_S", quad_vector(s.omega_S())},
                 {"delta", to_json(s.delta)},
                 {"C", to_json(s.C)},
                 {"im_omega_S_square", s.im_omega_S_square(L).str()},
                 {"exponential_defects", {to_json(d1), to_json(d2)}}};
  rep.residual("attractor_equations", kahler_exs_residual(s, v1, v2));
}

struct RigidityArgs {
  std::string b, kappa, lattice;
};

void rigidity(const RigidityArgs& a, Common& cm, Report& rep) {
  cm.digest.add_file(a.b);
  cm.digest.add_file(a.kappa);
  const json jb = read_json_file(a.b), jk = read_json_file(a.kappa);
  json gram;
  if (!a.lattice.empty()) {
    cm.digest.add_file(a.lattice);
    gram = read_json_file(a.lattice);
  } else if (jb.contains("gram")) {
    gram = jb;
  } else if (jk.contains("gram")) {
    gram = jk;
  } else {
    throw InputError("no NS lattice: pass --lattice or put \"gram\" in the B or kappa file");
  }
  const GramLattice ns = lattice_from_json(gram);
  const auto B = rational_vector_from_json(jb.contains("B") ? jb.at("B") : jb);
  KappaSpec ks;
  if (!jk.contains("k2") || !jk.contains("H")) throw InputError("kappa file needs \"k2\" and \"H\"");
  ks.k2 = rational_from_json(jk.at("k2"));
  ks.k2_rational = jk.value("rational", true);
  const LatticeVector H = lattice_vector_from_json(jk.at("H"));
  const auto r = kahler_rigidity(ns, B, ks, H);
  rep.outputs["rigid"] = r.rigid;
  if (!r.rigid) {
    rep.outputs["witness"] = r.witness;
    return;
  }
  rep.outputs["re"] = to_json(r.re);
  rep.outputs["im"] = to_json(r.im);
  rep.outputs["im_scaled"] = r.im_scaled;
  rep.outputs["m"] = r.m.get_str();
  rep.outputs["n"] = r.n.get_str();
  rep.outputs["generators"] = {to_json(r.gen1), to_json(r.gen2)};
}

struct MinimizeArgs {
  std::string charge;
  int starts = 20;
};

void minimize_cmd(const MinimizeArgs& a, Common& cm, Report& rep) {
  cm.digest.add_file(a.charge);
  const TorusCharge c = torus_charge_from_json(read_json_file(a.charge));
  MassConfig cfg;
  cfg.n_starts = a.starts;
  cfg.rng_seed = cm.seed;
  cfg.threads = cm.threads;
  cfg.validate();
  const auto res = minimize(to_float(c), cfg);
  rep.outputs["T"] = to_json(res.T);
  rep.outputs["mass_squared"] = res.value;
  rep.outputs["mass"] = std::sqrt(res.value);
  rep.outputs["converged"] = res.converged;
  rep.outputs["attractor_found"] = res.attractor_found;
  rep.outputs["best_start"] = res.best_start;
  json runs = json::array();
  for (const auto& r : res.runs)
    runs.push_back({{"start", r.start},
                    {"mass_squared", r.value},
                    {"grad_norm", r.grad_norm},
                    {"iters", r.iters},
                    {"converged", r.converged},
                    {"zero_mass", r.zero_mass},
                    {"escaped", r.escaped}});
  rep.outputs["runs"] = runs;
  rep.residual("grad_norm", res.grad_norm);
  try {
    const auto exact = solve_complex_symmetric(c);
    rep.outputs["closed_form_distance"] = frobenius_distance(res.T, to_complex(exact.A));
  } catch (const NoAttractor&) {
    rep.outputs["closed_form_distance"] = nullptr;
  } catch (const AsymmetricCharge&) {
    rep.outputs["closed_form_distance"] = nullptr;
  }
}

struct WpArgs {
  std::string tau, gw, omega;
};

void wp_elliptic(const WpArgs& a, Common& cm, Report& rep) {
  cm.digest.add(a.tau);
  const cplx tau = parse_complex(a.tau);
  if (!(tau.imag() > 0)) throw InputError("--tau must lie in the upper half-plane");
  const double k = a_potential(elliptic_charge(tau), elliptic_euler_matrix(), 1);
  rep.outputs = {{"tau", to_json(tau)}, {"K_A", k}};
  rep.residual("closed_form", std::abs(k + std::log(2.0 * tau.imag())));
}

void wp_quintic(const WpArgs& a, Common& cm, Report& rep) {
  cm.digest.add(a.tau);
  const cplx tau = parse_complex(a.tau);
  if (!(tau.imag() > 0)) throw InputError("--tau must lie in the upper half-plane");
  GWTable gw;
  if (!a.gw.empty()) {
    cm.digest.add_file(a.gw);
    try {
      gw = load_gw_table_file(a.gw);
    } catch (const std::runtime_error& e) {
      throw InputError(e.what());
    }
  }
  const double k = quintic_a_potential(tau, gw);
  const double y = tau.imag();
  json z = json::array();
  for (const auto& f : quintic_basis()) z.push_back(to_json(quintic_central_charge(tau, f, gw)));
  rep.outputs = {{"tau", to_json(tau)},
                 {"K_A", k},
                 {"large_volume_ratio", std::exp(-k) / (20.0 / 3.0 * y * y * y)},
                 {"gw_degrees", gw.size()},
                 {"central_charges", z}};
}

void wp_torus(const WpArgs& a, Common& cm, Report& rep) {
  cm.digest.add_file(a.omega);
  const json j = read_json_file(a.omega);
  const json& m = j.is_object() && j.contains("omega") ? j.at("omega") : j;
  if (!m.is_array() || m.size() != 3) throw InputError("omega: expected a 3x3 matrix");
  Mat3<QuadNumber> w;
  for (int i = 0; i < 3; ++i) {
    if (!m[i].is_array() || m[i].size() != 3) throw InputError("omega: expected a 3x3 matrix");
    for (int k = 0; k < 3; ++k) w[i][k] = quad_from_json(m[i][k]);
  }
  const auto leg = torus_legendrian_exact(w);
  bool zero = true;
  for (const auto& x : leg.data) zero = zero && x.is_zero();
  const auto z = torus_charge_from(torus_exp(to_complex(w)));
  rep.outputs = {{"omega", to_json(w)},
                 {"K_A", a_potential(z, torus_mukai_matrix(), 3)},
                 {"legendrian_zero", zero}};
  rep.residual("legendrian", zero ? Rational(0) : Rational(1));
}

struct ConstellationArgs {
  std::string lattice, box = "0,1,1,2", csv;
  int height = 4, grid = 41;
  bool primitive = false, torus = false;
  std::size_t limit = 0;
};

Box parse_box(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("--box: malformed number '" + item + "'");
    }
  }
  if (v.size() != 4) throw InputError("--box expects a,b,c,d");
  return {v[0], v[1], v[2], v[3]};
}

void constellation(const ConstellationArgs& a, Common& cm, Report& rep) {
  cm.digest.add(std::to_string(a.height) + "|" + a.box + "|" + std::to_string(a.grid));
  if (a.torus) {
    const auto pts = torus_constellation(a.height, a.limit, cm.threads);
    json out = json::array();
    for (const auto& p : pts)
      out.push_back({{"charge", to_json(p.charge)}, {"T", to_json(p.T)}, {"D", p.D.str()}, {"det_R", p.detR.str()}});
    rep.outputs = {{"height", a.height}, {"count", pts.size()}, {"points", out}};
    return;
  }
  if (a.lattice.empty()) throw InputError("--lattice is required unless --torus is given");
  cm.digest.add_file(a.lattice);
  const GramLattice L = lattice_from_json(read_json_file(a.lattice));
  const Box box = parse_box(a.box);
  if (a.height < 1) throw InputError("--height must be positive");
  std::vector<int> heights;
  for (int h = 1; h < a.height; h *= 2) heights.push_back(h);
  heights.push_back(a.height);
  json radii = json::array();
  std::vector<TauPoint> last;
  for (int h : heights) {
    last = tau_set(L, h, a.primitive, cm.threads);
    radii.push_back({{"height", h}, {"points", last.size()}, {"covering_radius", covering_radius(last, box, a.grid)}});
  }
  if (!a.csv.empty()) {
    std::ofstream out(a.csv);
    if (!out) throw InputError("cannot write " + a.csv);
    out << "re_tau,im_tau,u1,u2,D\n" << std::setprecision(17);
    auto vec = [](const LatticeVector& u) {
      std::string s;
      for (std::size_t i = 0; i < u.size(); ++i) s += (i ? " " : "") + std::to_string(u[i]);
      return s;
    };
    for (const auto& p : last) {
      const auto z = p.tau.to_complex();
      out << z.real() << ',' << z.imag() << ',' << vec(p.u1) << ',' << vec(p.u2) << ',' << p.D << '\n';
    }
  }
  rep.outputs = {{"box", {box.a, box.b, box.c, box.d}}, {"grid", a.grid}, {"radii", radii}};
  if (!a.csv.empty()) rep.outputs["csv"] = a.csv;
}

int verify_cmd(const std::string& suite, Common& cm, Report& rep) {
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else
    names = {suite};
  bool ok = true;
  json results = json::array();
  for (const auto& n : names) {
    SuiteResult r;
    try {
      r = run_suite(n, cm.seed, cm.threads);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    ok = ok && r.pass;
    results.push_back({{"suite", r.name}, {"pass", r.pass}, {"checks", r.checks}, {"failures", r.failures},
                       {"notes", r.notes}});
    rep.residuals[n] = r.failures;
  }
  rep.outputs["suites"] = results;
  rep.outputs["pass"] = ok;
  return ok ? kOk : kSuiteFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form and numerical attractor points of Calabi-Yau threefolds"};
  app.require_subcommand(1);
  Common cm;
  int threads_flag = 0;
  app.add_option("--seed", cm.seed, "seed for every random choice")->capture_default_str();
  app.add_option("--threads", threads_flag, "worker threads (default: ATTRACTOR_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  SolveTorusArgs st;
  auto* c_st = app.add_subcommand("solve-torus", "attractor of a charge on the 6-torus");
  c_st->add_option("--charge", st.charge, "charge JSON {p0,P,Q,q0} or {v0,V,U,u0}")->required()->check(CLI::ExistingFile);
  c_st->add_option("--mode", st.mode)->check(CLI::IsMember({"complex", "kahler"}))->capture_default_str();
  c_st->add_option("--branch", st.branch)->check(CLI::IsMember({"general", "symmetric"}))->capture_default_str();
  auto* fx = c_st->add_flag("--exact", st.exact, "exact arithmetic in Q(sqrt(-D)) (default)");
  auto* ff = c_st->add_flag("--float", st.flt, "double precision");
  fx->excludes(ff);

  std::string period;
  auto* c_ip = app.add_subcommand("invert-picard9", "rational charge with a prescribed attractor period");
  c_ip->add_option("--period", period, "JSON {R,D,N}")->required()->check(CLI::ExistingFile);

  ExsArgs ex;
  auto* c_ex = app.add_subcommand("solve-exs", "attractor on E x K3");
  c_ex->add_option("--lattice", ex.lattice, "JSON {gram}")->required()->check(CLI::ExistingFile);
  c_ex->add_option("--vectors", ex.vectors, "JSON {u1,u2} or {v1,v2}")->required()->check(CLI::ExistingFile);
  c_ex->add_option("--mode", ex.mode)->check(CLI::IsMember({"complex", "kahler"}))->capture_default_str();

  RigidityArgs rg;
  auto* c_rg = app.add_subcommand("rigidity", "rigidity of B + i kappa");
  c_rg->add_option("--B", rg.b, "JSON {B, gram?}")->required()->check(CLI::ExistingFile);
  c_rg->add_option("--kappa", rg.kappa, "JSON {k2, rational, H, gram?}")->required()->check(CLI::ExistingFile);
  c_rg->add_option("--lattice", rg.lattice, "JSON {gram}")->check(CLI::ExistingFile);

  MinimizeArgs mn;
  auto* c_mn = app.add_subcommand("minimize", "multi-start minimisation of the torus mass");
  c_mn->add_option("--charge", mn.charge)->required()->check(CLI::ExistingFile);
  c_mn->add_option("--starts", mn.starts)->check(CLI::PositiveNumber)->capture_default_str();
  c_mn->add_option("--seed", cm.seed);

  WpArgs wp;
  auto* c_wp = app.add_subcommand("wp", "A-model Weil-Petersson potential");
  c_wp->require_subcommand(1);
  auto* c_we = c_wp->add_subcommand("elliptic", "elliptic curve");
  c_we->add_option("--tau", wp.tau, "a+bi")->required();
  auto* c_wq = c_wp->add_subcommand("quintic", "quintic threefold");
  c_wq->add_option("--tau", wp.tau, "a+bi")->required();
  c_wq->add_option("--gw", wp.gw, "CSV d,N_d")->check(CLI::ExistingFile);
  auto* c_wt = c_wp->add_subcommand("torus", "classical 6-torus family");
  c_wt->add_option("--omega", wp.omega, "JSON 3x3 matrix of {a,b,D}")->required()->check(CLI::ExistingFile);

  ConstellationArgs cs;
  auto* c_cs = app.add_subcommand("constellation", "tau point sets and coverage");
  c_cs->add_option("--lattice", cs.lattice, "JSON {gram}")->check(CLI::ExistingFile);
  c_cs->add_option("--height", cs.height)->capture_default_str();
  c_cs->add_option("--box", cs.box, "a,b,c,d")->capture_default_str();
  c_cs->add_option("--grid", cs.grid)->check(CLI::Range(2, 10000))->capture_default_str();
  c_cs->add_option("--csv", cs.csv, "write the largest point cloud here");
  c_cs->add_flag("--primitive", cs.primitive, "only pairs with unimodular 2x2 minor");
  c_cs->add_flag("--torus", cs.torus, "enumerate symmetric torus charges instead");
  c_cs->add_option("--limit", cs.limit, "stop after this many torus charges");

  std::string suite;
  auto* c_vf = app.add_subcommand("verify", "run an invariant suite");
  c_vf->add_option("--suite", suite, "rmd, residuals, roundtrip, exs, legendrian, density or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  for (int i = 1; i < argc; ++i) cm.command += (i > 1 ? " " : "") + std::string(argv[i]);
  Report rep;
  int code = kOk;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    cm.threads = resolve_threads(threads_flag);
    cm.digest.add(std::to_string(cm.seed));
    if (*c_st) solve_torus(st, cm, rep);
    if (*c_ip) invert_picard9(period, cm, rep);
    if (*c_ex) solve_exs(ex, cm, rep);
    if (*c_rg) rigidity(rg, cm, rep);
    if (*c_mn) minimize_cmd(mn, cm, rep);
    if (*c_we) wp_elliptic(wp, cm, rep);
    if (*c_wq) wp_quintic(wp, cm, rep);
    if (*c_wt) wp_torus(wp, cm, rep);
    if (*c_cs) constellation(cs, cm, rep);
    if (*c_vf) code = verify_cmd(suite, cm, rep);
  } catch (const NoAttractor& e) {
    std::cerr << "no attractor: " << e.what() << '\n';
    return kNoAttractor;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  json report = {{"command", cm.command},
                 {"inputs_digest", cm.digest.hex()},
                 {"seed", cm.seed},
                 {"outputs", rep.outputs},
                 {"residuals", rep.residuals},
                 {"suspect", rep.suspect},
                 {"timing", {{"seconds", secs}}}};
  emit(report);
  return code;
}
