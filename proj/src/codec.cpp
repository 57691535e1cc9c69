#include "attractor/codec.hpp"

#include <fstream>
#include <regex>

namespace attractor {

namespace {

template <class Fn>
auto guarded(const char* what, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

template <class T>
json mat_json(const Mat3<T>& m) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& x : r) row.push_back(to_json(x));
    rows.push_back(row);
  }
  return rows;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const QuadNumber& q) {
  return {{"a", q.a().str()}, {"b", q.b().str()}, {"D", q.kernel()}};
}

json to_json(const cplx& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const Mat3<Rational>& m) { return mat_json(m); }
json to_json(const Mat3<QuadNumber>& m) { return mat_json(m); }
json to_json(const Mat3<cplx>& m) { return mat_json(m); }

json to_json(const Mat3<double>& m) {
  json rows = json::array();
  for (const auto& r : m) rows.push_back(json(std::vector<double>(r.begin(), r.end())));
  return rows;
}

json to_json(const TorusCharge& c) {
  return {{"p0", to_json(c.p0)}, {"P", to_json(c.P)}, {"Q", to_json(c.Q)}, {"q0", to_json(c.q0)}};
}

json to_json(const KahlerTorusCharge& c) {
  return {{"v0", to_json(c.v0)}, {"V", to_json(c.V)}, {"U", to_json(c.U)}, {"u0", to_json(c.u0)}};
}

json to_json(const MukaiVectorQ& v) {
  json d = json::array();
  for (const auto& x : v.D) d.push_back(to_json(x));
  return {{"r", to_json(v.r)}, {"D", d}, {"s", to_json(v.s)}};
}

json to_json(const MukaiVectorK& v) {
  json d = json::array();
  for (const auto& x : v.D) d.push_back(to_json(x));
  return {{"r", to_json(v.r)}, {"D", d}, {"s", to_json(v.s)}};
}

json to_json(const MukaiVector& v) { return {{"r", v.r}, {"D", v.D}, {"s", v.s}}; }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    return guarded("rational", [&] { return Rational::parse(j.get<std::string>()); });
  }
  throw InputError("rational: expected a string \"p/q\" or an integer, got " + j.dump());
}

QuadNumber quad_from_json(const json& j) {
  if (!j.is_object()) return QuadNumber(rational_from_json(j));
  const Rational a = rational_from_json(field(j, "a"));
  const Rational b = j.contains("b") ? rational_from_json(j.at("b")) : Rational(0);
  const long long D = j.contains("D") ? j.at("D").get<long long>() : 0;
  if (D < 0) throw InputError("quadratic number: D must be non-negative");
  if (b.is_zero()) return QuadNumber(a);
  if (D == 0) throw InputError("quadratic number: nonzero b needs D > 0");
  return guarded("quadratic number", [&] { return QuadNumber(a) + QuadNumber(b) * QuadNumber::sqrt_neg(Rational(D)); });
}

Mat3<Rational> mat3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw InputError("matrix: expected 3 rows");
  Mat3<Rational> m;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_array() || j[i].size() != 3) throw InputError("matrix: expected 3 columns");
    for (int k = 0; k < 3; ++k) m[i][k] = rational_from_json(j[i][k]);
  }
  return m;
}

TorusCharge torus_charge_from_json(const json& j) {
  return {rational_from_json(field(j, "p0")), mat3_from_json(field(j, "P")), mat3_from_json(field(j, "Q")),
          rational_from_json(field(j, "q0"))};
}

KahlerTorusCharge kahler_charge_from_json(const json& j) {
  if (j.contains("p0")) {
    const auto c = torus_charge_from_json(j);
    return {c.p0, c.P, c.Q, c.q0};
  }
  return {rational_from_json(field(j, "v0")), mat3_from_json(field(j, "V")), mat3_from_json(field(j, "U")),
          rational_from_json(field(j, "u0"))};
}

Picard9Period period_from_json(const json& j) {
  Picard9Period p;
  p.R = mat3_from_json(field(j, "R"));
  p.D = rational_from_json(field(j, "D"));
  p.N = j.contains("N") ? mat3_from_json(j.at("N")) : zero3<Rational>();
  guarded("period", [&] {
    p.validate();
    return 0;
  });
  return p;
}

GramLattice lattice_from_json(const json& j) {
  const json& g = j.is_object() ? field(j, "gram") : j;
  return guarded("lattice", [&] { return GramLattice(g.get<std::vector<std::vector<long long>>>()); });
}

LatticeVector lattice_vector_from_json(const json& j) {
  return guarded("lattice vector", [&] { return j.get<LatticeVector>(); });
}

MukaiVector mukai_from_json(const json& j) {
  return guarded("Mukai vector", [&] {
    MukaiVector v;
    v.r = field(j, "r").get<long long>();
    v.D = field(j, "D").get<std::vector<long long>>();
    v.s = field(j, "s").get<long long>();
    return v;
  });
}

std::vector<Rational> rational_vector_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

MassConfig mass_config_from_json(const json& j, MassConfig c) {
  return guarded("mass config", [&] {
    if (j.contains("grad_tol")) c.grad_tol = j.at("grad_tol").get<double>();
    if (j.contains("max_iters")) c.max_iters = j.at("max_iters").get<int>();
    if (j.contains("fd_step")) c.fd_step = j.at("fd_step").get<double>();
    if (j.contains("n_starts")) c.n_starts = j.at("n_starts").get<int>();
    if (j.contains("rng_seed")) c.rng_seed = j.at("rng_seed").get<std::uint64_t>();
    c.validate();
    return c;
  });
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

cplx parse_complex(const std::string& s) {
  static const std::regex full(R"(\s*([+-]?[0-9.eE]+)\s*([+-])\s*([0-9.eE]*)\s*[ij]\s*)");
  static const std::regex imag_only(R"(\s*([+-]?[0-9.eE]*)\s*[ij]\s*)");
  static const std::regex real_only(R"(\s*([+-]?[0-9.eE]+)\s*)");
  std::smatch m;
  auto num = [](const std::string& t) -> double {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw InputError("malformed number '" + t + "'");
    return v;
  };
  try {
    if (std::regex_match(s, m, full)) {
      const double im = num(m[3].str());
      return {num(m[1].str()), m[2].str() == "-" ? -im : im};
    }
    if (std::regex_match(s, m, imag_only)) return {0.0, num(m[1].str())};
    if (std::regex_match(s, m, real_only)) return {num(m[1].str()), 0.0};
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  throw InputError("malformed complex number '" + s + "' (expected a+bi)");
}

}  // namespace attractor
