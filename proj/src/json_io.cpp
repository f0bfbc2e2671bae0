#include "cpoly/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace cpoly {

std::string to_string(const Integer& z) { return z.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("point must be an array of integers");
  Point p;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("point coordinates must be integers");
    p.push_back(x.get<std::int64_t>());
  }
  return p;
}

std::vector<std::size_t> index_list(const Json& j, std::size_t bound) {
  if (!j.is_array()) throw InputError("face must be an array of vertex indices");
  std::vector<std::size_t> out;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || x.get<std::size_t>() >= bound)
      throw InputError("vertex index out of range");
    out.push_back(x.get<std::size_t>());
  }
  if (out.empty()) throw InputError("face without vertices");
  return out;
}

}  // namespace

Graph graph_from_json(const Json& j) {
  const Json& vs = field(j, "vertices");
  const Json& es = field(j, "edges");
  if (!vs.is_array() || !es.is_array()) throw InputError("graph: vertices and edges must be arrays");
  std::vector<std::string> labels;
  for (const auto& v : vs) {
    if (v.is_string()) labels.push_back(v.get<std::string>());
    else if (v.is_number_integer()) labels.push_back(std::to_string(v.get<std::int64_t>()));
    else throw InputError("graph: vertex labels must be strings");
  }
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
    throw InputError("graph: duplicate vertex label");
  auto label_of = [](const Json& x) {
    if (x.is_string()) return x.get<std::string>();
    if (x.is_number_integer()) return std::to_string(x.get<std::int64_t>());
    throw InputError("graph: edge endpoints must be vertex labels");
  };
  Graph shell(labels, {});
  std::vector<Edge> edges;
  for (const auto& e : es) {
    try {
      edges.push_back(Edge{shell.index_of(label_of(field(e, "tail"))), shell.index_of(label_of(field(e, "head")))});
    } catch (const std::out_of_range& ex) {
      throw InputError(std::string("graph: ") + ex.what());
    }
  }
  return Graph(std::move(labels), std::move(edges));
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({{"tail", g.vertices()[e.tail]}, {"head", g.vertices()[e.head]}});
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

LatticePolytope polytope_from_json(const Json& j) {
  const Json& d = field(j, "ambient_dim");
  if (!d.is_number_integer() || d.get<std::int64_t>() < 0) throw InputError("polytope: bad ambient_dim");
  const auto dim = d.get<std::size_t>();
  std::vector<Point> pts;
  for (const auto& v : field(j, "vertices")) {
    pts.push_back(point_from_json(v));
    if (pts.back().size() != dim) throw InputError("polytope: vertex has the wrong dimension");
  }
  if (pts.empty()) throw InputError("polytope: no vertices");
  return LatticePolytope(dim, std::move(pts));
}

Json polytope_to_json(const LatticePolytope& p) {
  return {{"ambient_dim", p.ambient_dim()}, {"vertices", p.vertices()}};
}

RelativeComplex complex_from_json(const Json& j) {
  std::vector<Point> verts;
  for (const auto& v : field(j, "vertices")) verts.push_back(point_from_json(v));
  std::size_t dim = 0;
  if (j.contains("ambient_dim")) dim = j.at("ambient_dim").get<std::size_t>();
  else if (!verts.empty()) dim = verts.front().size();
  for (const auto& v : verts)
    if (v.size() != dim) throw InputError("complex: vertices of different dimensions");

  auto generators = [&](const Json& list) {
    if (!list.is_array()) throw InputError("complex: face lists must be arrays");
    std::vector<LatticePolytope> out;
    for (const auto& f : list) {
      std::vector<Point> pts;
      for (std::size_t i : index_list(f, verts.size())) pts.push_back(verts[i]);
      out.emplace_back(dim, std::move(pts));
    }
    return out;
  };
  RelativeComplex c;
  try {
    c.total = generated_by(dim, generators(field(j, "faces")));
    c.sub = generated_by(dim, j.contains("sub_faces") ? generators(j.at("sub_faces")) : std::vector<LatticePolytope>{});
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("complex: ") + e.what());
  }
  for (const auto& f : c.sub.faces())
    if (!c.total.has_face(f.vertices())) throw InputError("complex: a sub face is not a face of the complex");
  return c;
}

Json complex_to_json(const RelativeComplex& c) {
  std::set<Point> all;
  for (const auto& f : c.total.faces())
    for (const auto& v : f.vertices()) all.insert(v);
  const std::vector<Point> verts(all.begin(), all.end());
  auto indices = [&](const PolytopalComplex& pc) {
    Json out = Json::array();
    for (std::size_t i : pc.maximal()) {
      Json face = Json::array();
      for (const auto& v : pc.faces()[i].vertices())
        face.push_back(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
      out.push_back(face);
    }
    return out;
  };
  return {{"ambient_dim", c.total.ambient_dim()},
          {"vertices", verts},
          {"faces", indices(c.total)},
          {"sub_faces", indices(c.sub)}};
}

Json polynomial_to_json(const BinomialPolynomial& p) {
  Json mono = Json::array(), bin = Json::array();
  for (const auto& c : p.monomial()) mono.push_back(to_string(c));
  for (const auto& f : p.binomial()) bin.push_back(to_string(f));
  return {{"monomial", mono}, {"binomial", bin}};
}

BinomialPolynomial polynomial_from_json(const Json& j) {
  auto read = [](const Json& list) {
    if (!list.is_array()) throw InputError("polynomial: coefficient lists must be arrays");
    std::vector<Rational> out;
    for (const auto& x : list) {
      try {
        out.push_back(x.is_string() ? parse_rational(x.get<std::string>())
                                    : Rational(static_cast<long>(x.get<std::int64_t>())));
      } catch (const std::exception& e) {
        throw InputError(std::string("polynomial: ") + e.what());
      }
    }
    return out;
  };
  if (j.contains("monomial")) {
    auto p = BinomialPolynomial::from_monomial(read(j.at("monomial")));
    if (j.contains("binomial") && BinomialPolynomial::from_binomial(read(j.at("binomial"))) != p)
      throw InputError("polynomial: monomial and binomial coefficients disagree");
    return p;
  }
  return BinomialPolynomial::from_binomial(read(field(j, "binomial")));
}

}  // namespace cpoly
