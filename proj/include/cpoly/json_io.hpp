// JSON formats for graphs, polytopes, complexes and polynomials.

#pragma once

#include "cpoly/complex.hpp"
#include "cpoly/graph.hpp"
#include "cpoly/polynomial.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace cpoly {

using Json = nlohmann::json;

/// Malformed or inconsistent input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path);

/// {"vertices": ["a", ...], "edges": [{"tail": "a", "head": "b"}, ...]}
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

/// {"ambient_dim": d, "vertices": [[...], ...]}
LatticePolytope polytope_from_json(const Json& j);
Json polytope_to_json(const LatticePolytope& p);

/// {"vertices": [[...], ...], "faces": [[indices], ...], "sub_faces": [[indices], ...]}
/// "faces" generate C and "sub_faces" generate C'; both are vertex-index lists.
RelativeComplex complex_from_json(const Json& j);
Json complex_to_json(const RelativeComplex& c);

/// {"monomial": ["c0", ...], "binomial": ["f0", ...]}
Json polynomial_to_json(const BinomialPolynomial& p);
BinomialPolynomial polynomial_from_json(const Json& j);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

}  // namespace cpoly
