#pragma once

// JSON encodings. Rationals are strings "p/q" (integers may also be JSON
// numbers on input); quadratic numbers are {"a","b","D"}; matrices are
// row-major nested arrays; float complex numbers are {"re","im"}.

#include "attractor/exs.hpp"
#include "attractor/mass.hpp"
#include "attractor/torus.hpp"
#include "attractor/torus_inverse.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace attractor {

using json = nlohmann::json;

/// Malformed input. Maps to exit code 2 in the CLI.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Rational& r);
json to_json(const QuadNumber& q);
json to_json(const cplx& z);
json to_json(const Mat3<Rational>& m);
json to_json(const Mat3<QuadNumber>& m);
json to_json(const Mat3<cplx>& m);
json to_json(const Mat3<double>& m);
json to_json(const TorusCharge& c);
json to_json(const KahlerTorusCharge& c);
json to_json(const MukaiVectorQ& v);
json to_json(const MukaiVectorK& v);
json to_json(const MukaiVector& v);

Rational rational_from_json(const json& j);
QuadNumber quad_from_json(const json& j);
Mat3<Rational> mat3_from_json(const json& j);
TorusCharge torus_charge_from_json(const json& j);
KahlerTorusCharge kahler_charge_from_json(const json& j);
Picard9Period period_from_json(const json& j);
GramLattice lattice_from_json(const json& j);
LatticeVector lattice_vector_from_json(const json& j);
MukaiVector mukai_from_json(const json& j);
std::vector<Rational> rational_vector_from_json(const json& j);
MassConfig mass_config_from_json(const json& j, MassConfig base = {});

/// Parse a file; throws InputError on I/O or syntax errors.
json read_json_file(const std::string& path);

/// "a+bi", "a-bi", "bi" or "a".
cplx parse_complex(const std::string& s);

}  // namespace attractor
