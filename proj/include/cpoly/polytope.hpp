// Lattice polytopes: exact H-description, lattice points, face lattice and the
// unimodular / empty / normal / two-level / compressed predicates.

#pragma once

#include "cpoly/exact.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cpoly {

/// An integer point. Coordinates of lattice points stay small at the scale
/// this library works at; every product that could leave int64 is guarded.
using Point = std::vector<std::int64_t>;

/// normal . x <= offset
struct Halfspace {
  Point normal;
  std::int64_t offset = 0;
  bool operator==(const Halfspace&) const = default;
};

/// normal . x == rhs
struct Hyperplane {
  Point normal;
  std::int64_t rhs = 0;
  bool operator==(const Hyperplane&) const = default;
};

/// Convex hull of finitely many integer points.
///
/// Construction computes, eagerly and exactly: the extreme points, the affine
/// hull as primitive integer equations, an irredundant facet description inside
/// the affine hull (primitive normals, integer offsets), a basis of the lattice
/// of integer directions parallel to the affine hull, and the lattice points.
/// The object is immutable afterwards.
class LatticePolytope {
 public:
  LatticePolytope(std::size_t ambient_dim, std::vector<Point> points);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return dim_; }
  /// Extreme points in lexicographic order.
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Hyperplane>& equations() const { return equations_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  /// Lattice points of P in lexicographic order.
  const std::vector<Point>& lattice_points() const { return lattice_points_; }
  /// Z-basis of {x in Z^d : equations' normals . x = 0}.
  const std::vector<Point>& direction_lattice() const { return direction_lattice_; }

  bool is_simplex() const { return vertices_.size() == dim_ + 1; }

  /// z in k*P, exact.
  bool contains(const Point& z, std::int64_t k = 1) const;
  bool contains(const RatVector& z) const;

  /// The description as a rational linear system (equalities + facets).
  LinearSystem system() const;

  bool operator==(const LatticePolytope& other) const {
    return ambient_dim_ == other.ambient_dim_ && vertices_ == other.vertices_;
  }

 private:
  std::size_t ambient_dim_;
  std::size_t dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Hyperplane> equations_;
  std::vector<Halfspace> facets_;
  std::vector<Point> direction_lattice_;
  std::vector<Point> lattice_points_;
};

using Simplex = LatticePolytope;

std::vector<Halfspace> facets(const LatticePolytope& p);

/// Integer points of k*P in lexicographic order (k >= 0).
std::vector<Point> lattice_points(const LatticePolytope& p, std::int64_t k);

/// Integer points of k*P for an explicit description, by a pruned
/// bounding-box scan. `lo`/`hi` bound every coordinate of k*P.
std::vector<Point> scan_lattice_points(std::size_t ambient_dim, const std::vector<Hyperplane>& equations,
                                       const std::vector<Halfspace>& facets, const Point& lo, const Point& hi,
                                       std::int64_t k);

/// Combinatorial face lattice over the lattice points of P.
///
/// Faces are stored as sorted index lists into `points` (the lattice points of
/// P). `nodes[0]` is P itself; every node lists the node indices of its facets.
struct FaceLattice {
  struct Node {
    std::vector<std::size_t> vertices;  // indices into points
    std::vector<std::size_t> points;    // lattice points on the face
    std::size_t dim = 0;
    std::vector<std::size_t> facets;    // node indices
  };
  std::vector<Point> points;
  std::vector<Node> nodes;
};

FaceLattice face_lattice(const LatticePolytope& p);

/// Maximal simplices (as sorted index lists into `fl.points`) of the pulling
/// triangulation of face `node`. `rank[i]` is the position of `fl.points[i]`
/// in the total order; the smallest rank is pulled first.
std::vector<std::vector<std::size_t>> pull_maximal_simplices(const FaceLattice& fl,
                                                             const std::vector<std::size_t>& rank,
                                                             std::size_t node = 0);

/// All nonempty faces of P, including P itself.
std::vector<LatticePolytope> faces(const LatticePolytope& p);

/// True iff the edge vectors from one vertex have Smith form diag(1,...,1).
bool is_unimodular(const Simplex& s);

/// Same test for a simplex given by its vertex points.
bool is_unimodular_simplex(const std::vector<Point>& vertices);

bool is_empty_polytope(const LatticePolytope& p);

/// Default normality bound max(2, dim - 1).
std::int64_t default_normality_bound(const LatticePolytope& p);

/// Lexicographically first point of some kP (2 <= k <= k_max, smallest k
/// first) that is not a sum of k lattice points of P; nullopt if none.
struct NormalityWitness {
  std::int64_t k = 0;
  Point point;
};
std::optional<NormalityWitness> normality_witness(const LatticePolytope& p, std::int64_t k_max);

bool is_normal(const LatticePolytope& p, std::int64_t k_max);
bool is_normal(const LatticePolytope& p);

bool is_two_level(const LatticePolytope& p);

/// Checks that pulling triangulations are unimodular. Exhaustive over all
/// orderings of the lattice points when n! <= order_budget, otherwise the
/// lexicographic order plus `order_budget` seeded pseudo-random orders.
bool is_compressed(const LatticePolytope& p, std::uint64_t order_budget = 50, std::uint64_t seed = 0);

}  // namespace cpoly
