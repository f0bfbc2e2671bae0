// Polytopal complexes, relative complexes, pulling triangulations and relative
// lattice-point counting.

#pragma once

#include "cpoly/polytope.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpoly {

/// A total order on integer points. Either plain lexicographic, or an explicit
/// sequence; points missing from the sequence come after it, lexicographically.
class PointOrder {
 public:
  static PointOrder lexicographic() { return PointOrder{}; }
  static PointOrder sequence(const std::vector<Point>& ordered);

  bool less(const Point& a, const Point& b) const;
  bool is_lexicographic() const { return rank_.empty(); }

 private:
  std::map<Point, std::size_t> rank_;
};

/// Simplices over a shared vertex table. `simplices` holds every nonempty
/// face as a sorted index list, so the set is closed under subsets.
class GeomSimplicialComplex {
 public:
  GeomSimplicialComplex() = default;
  GeomSimplicialComplex(std::size_t ambient_dim, std::vector<Point> vertex_table,
                        const std::vector<std::vector<std::size_t>>& generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::set<std::vector<std::size_t>>& simplices() const { return simplices_; }
  std::vector<std::vector<std::size_t>> maximal_simplices() const;
  /// -1 for the empty complex.
  int dim() const;
  bool empty() const { return simplices_.empty(); }
  /// Face counts by dimension 0..dim.
  std::vector<std::int64_t> f_vector() const;

  std::vector<Point> points_of(const std::vector<std::size_t>& simplex) const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Point> vertices_;
  std::set<std::vector<std::size_t>> simplices_;
};

/// Finite set of lattice polytopes closed under faces, deduplicated by vertex
/// set and kept in lexicographic order of vertex lists.
class PolytopalComplex {
 public:
  PolytopalComplex() = default;
  explicit PolytopalComplex(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  /// Trusts the caller that `faces` is face-closed (validate() checks it).
  static PolytopalComplex from_faces(std::size_t ambient_dim, std::vector<LatticePolytope> faces);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<LatticePolytope>& faces() const { return faces_; }
  /// Indices of inclusion-maximal faces.
  const std::vector<std::size_t>& maximal() const { return maximal_; }
  std::vector<LatticePolytope> maximal_faces() const;
  bool empty() const { return faces_.empty(); }
  std::size_t size() const { return faces_.size(); }
  int dim() const;
  bool has_face(const std::vector<Point>& vertices) const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<LatticePolytope> faces_;
  std::map<std::vector<Point>, std::size_t> index_;
  std::vector<std::size_t> maximal_;
};

/// A pair C' subset C.
struct RelativeComplex {
  PolytopalComplex total;
  PolytopalComplex sub;
};

/// P and Q meet in a common face of both (or not at all).
bool meet_is_common_face(const LatticePolytope& p, const LatticePolytope& q);

bool validate(const PolytopalComplex& c);

/// Every face of `sub` is a face of `total` and both are valid complexes.
bool validate(const RelativeComplex& c);

/// Face closure of `generators`. Throws std::invalid_argument when two
/// generators do not meet in a common face.
PolytopalComplex generated_by(std::size_t ambient_dim, const std::vector<LatticePolytope>& generators);

/// Faces of `c` satisfying `keep`; `keep` must be inherited by faces.
PolytopalComplex subcomplex_where(const PolytopalComplex& c,
                                  const std::function<bool(const LatticePolytope&)>& keep);

/// Thrown by pull_complex when a maximal face fails the compressedness check.
class NotCompressedError : public std::runtime_error {
 public:
  explicit NotCompressedError(std::vector<Point> face_vertices);
  const std::vector<Point>& face_vertices() const { return face_; }

 private:
  std::vector<Point> face_;
};

struct PullOptions {
  std::uint64_t order_budget = 50;
  std::uint64_t seed = 0;
  bool check_compressed = true;
};

GeomSimplicialComplex pull_polytope(const LatticePolytope& p, const PointOrder& order);

/// Union of the pulling triangulations of the maximal faces under one global
/// order.
GeomSimplicialComplex pull_complex(const PolytopalComplex& c, const PointOrder& order,
                                   const PullOptions& options = {});

/// Triangulation of C, the subcomplex lying over C', and the face counts of
/// the difference.
struct RelativeTriangulation {
  GeomSimplicialComplex total;
  std::set<std::vector<std::size_t>> sub;  // simplices of total lying in one face of C'
  std::vector<std::int64_t> f_vector;
};

RelativeTriangulation triangulate_relative(const RelativeComplex& c, const PointOrder& order,
                                           const PullOptions& options = {});

std::vector<std::int64_t> relative_f_vector(const RelativeComplex& c, const PointOrder& order,
                                            const PullOptions& options = {});

/// Integer points of k*(union C) not in k*(union C'), sorted.
std::vector<Point> relative_lattice_points(const RelativeComplex& c, std::int64_t k);

Integer count_relative_points(const RelativeComplex& c, std::int64_t k);

}  // namespace cpoly
