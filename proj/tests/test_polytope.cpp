#include "cpoly/polynomial.hpp"
#include "cpoly/polytope.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

using namespace cpoly;

namespace {

const LatticePolytope segment2(1, {{0}, {2}});
const LatticePolytope square(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
const LatticePolytope triangle(2, {{0, 0}, {1, 0}, {0, 1}});
const LatticePolytope reeve(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 3}});

LatticePolytope cube(std::size_t d) {
  std::vector<Point> pts;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) {
    Point p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = (m >> i) & 1;
    pts.push_back(p);
  }
  return LatticePolytope(d, pts);
}

std::vector<LatticePolytope> random_polytopes(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LatticePolytope> out;
  while (out.size() < count) {
    const std::size_t d = 1 + rng() % 3;
    const std::size_t n = 2 + rng() % 5;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
      Point p(d);
      for (auto& x : p) x = static_cast<std::int64_t>(rng() % 3) - 1;
      pts.push_back(p);
    }
    out.emplace_back(d, pts);
  }
  return out;
}

// Vertex subsets cut out by some linear functional, decided by LP.
std::set<std::vector<Point>> face_vertex_sets(const std::vector<Point>& verts) {
  std::set<std::vector<Point>> out;
  const std::size_t n = verts.size(), d = verts.front().size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    LinearSystem sys(d + 1);  // (c, delta)
    for (std::size_t i = 0; i < n; ++i) {
      RatVector row(d + 1);
      for (std::size_t j = 0; j < d; ++j) row[j] = static_cast<long>(verts[i][j]);
      row[d] = -1;
      if ((mask >> i) & 1) sys.add_equality(row, 0);
      else sys.add_strict(row, 0);
    }
    if (!lp_feasible(sys)) continue;
    std::vector<Point> s;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.push_back(verts[i]);
    out.insert(s);
  }
  return out;
}

std::set<std::vector<Point>> face_sets(const LatticePolytope& p) {
  std::set<std::vector<Point>> out;
  for (const auto& f : faces(p)) out.insert(f.vertices());
  return out;
}

}  // namespace

TEST_CASE("facets of small polytopes") {
  CHECK(facets(segment2) == std::vector<Halfspace>{{{-1}, 0}, {{1}, 2}});
  CHECK(facets(square).size() == 4);
  for (const auto& h : facets(square)) {
    int tight = 0;
    for (const auto& v : square.vertices()) tight += h.normal[0] * v[0] + h.normal[1] * v[1] == h.offset;
    CHECK(tight == 2);
  }
  auto t = facets(triangle);
  auto by_value = [](const Halfspace& x, const Halfspace& y) {
    return std::tie(x.normal, x.offset) < std::tie(y.normal, y.offset);
  };
  std::sort(t.begin(), t.end(), by_value);
  std::vector<Halfspace> expected{{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 1}};
  std::sort(expected.begin(), expected.end(), by_value);
  CHECK(t == expected);
  for (const auto& h : t) {
    int tight = 0;
    for (const auto& v : triangle.vertices()) tight += h.normal[0] * v[0] + h.normal[1] * v[1] == h.offset;
    CHECK(tight == 2);
  }
}

TEST_CASE("facets of a lower-dimensional polytope live in its affine hull") {
  const LatticePolytope diag(3, {{0, 0, 0}, {1, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  CHECK(diag.dim() == 2);
  CHECK(diag.equations().size() == 1);
  CHECK(diag.facets().size() == 4);
  CHECK(diag.direction_lattice().size() == 2);
}

TEST_CASE("interior points are not vertices") {
  const LatticePolytope p(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}, {1, 0}});
  CHECK(p.vertices() == std::vector<Point>{{0, 0}, {0, 2}, {2, 0}});
  CHECK(p.lattice_points().size() == 6);
}

TEST_CASE("lattice points of dilates") {
  CHECK(lattice_points(square, 1).size() == 4);
  CHECK(lattice_points(triangle, 2).size() == 6);
  CHECK(lattice_points(reeve, 1) == reeve.vertices());
  CHECK(lattice_points(square, 0) == std::vector<Point>{{0, 0}});
  const auto pts = lattice_points(square, 3);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
}

TEST_CASE("lattice points agree with a convex-combination oracle") {
  for (const auto& p : random_polytopes(40, 3))
    for (std::int64_t k = 1; k <= 3; ++k) CHECK(lattice_points(p, k) == oracle::naive_lattice_points(p.vertices(), k));
  for (std::int64_t k = 1; k <= 3; ++k) CHECK(lattice_points(reeve, k) == oracle::naive_lattice_points(reeve.vertices(), k));
}

TEST_CASE("faces") {
  CHECK(faces(LatticePolytope(1, {{0}, {1}})).size() == 3);
  CHECK(faces(square).size() == 9);
  CHECK(faces(triangle).size() == 7);
  CHECK(faces(cube(3)).size() == 27);
}

TEST_CASE("faces agree with the supporting-functional oracle") {
  for (const auto& p : random_polytopes(30, 8)) CHECK(face_sets(p) == face_vertex_sets(p.vertices()));
  CHECK(face_sets(reeve) == face_vertex_sets(reeve.vertices()));
}

TEST_CASE("H/V round trip") {
  auto polys = random_polytopes(40, 21);
  polys.push_back(reeve);
  polys.push_back(cube(4));
  for (const auto& p : polys) {
    std::vector<Point> back;
    for (const auto& v : enumerate_vertices(p.system())) {
      Point q;
      for (const auto& x : v) q.push_back(to_int64(x.get_num()));
      back.push_back(q);
    }
    CHECK(back == p.vertices());
    for (const auto& h : p.facets()) {
      Integer g = 0;
      for (auto x : h.normal) g = gcd(g, Integer(static_cast<long>(x)));
      CHECK(g == 1);
    }
  }
}

TEST_CASE("Ehrhart counts are polynomial in the dilation factor") {
  for (const auto& p : random_polytopes(20, 34)) {
    std::vector<Sample> samples;
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(p.dim()) + 1; ++k)
      samples.emplace_back(k, Integer(static_cast<unsigned long>(lattice_points(p, k).size())));
    const auto poly = interpolate(samples, p.dim());
    for (std::int64_t k = 1; k <= 4; ++k)
      CHECK(poly(Rational(static_cast<long>(k))) == Rational(static_cast<unsigned long>(lattice_points(p, k).size())));
  }
}

TEST_CASE("unimodular and empty") {
  CHECK(is_unimodular(triangle));
  CHECK_FALSE(is_unimodular(LatticePolytope(1, {{0}, {2}})));
  CHECK_FALSE(is_unimodular(reeve));
  CHECK(is_unimodular_simplex({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}}));
  CHECK_FALSE(is_empty_polytope(segment2));
  CHECK(is_empty_polytope(square));
  CHECK(is_empty_polytope(reeve));
}

TEST_CASE("normality") {
  CHECK(is_normal(cube(3), 2));
  CHECK_FALSE(is_normal(reeve, 2));
  const auto w = normality_witness(reeve, 2);
  REQUIRE(w);
  CHECK(w->k == 2);
  CHECK(w->point == Point{1, 1, 1});
  CHECK(is_normal(segment2, 3));
  CHECK(default_normality_bound(cube(4)) == 3);
  CHECK(default_normality_bound(segment2) == 2);
}

TEST_CASE("two-level screen") {
  CHECK(is_two_level(square));
  CHECK_FALSE(is_two_level(segment2));
  CHECK_FALSE(is_two_level(reeve));
  CHECK(is_two_level(triangle));
  CHECK(is_two_level(cube(3)));
  // a slice of the cube in a non-coordinate sublattice is still two-level
  CHECK(is_two_level(LatticePolytope(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
}

TEST_CASE("compressedness") {
  CHECK(is_compressed(square, 100));
  CHECK_FALSE(is_compressed(segment2));
  CHECK_FALSE(is_compressed(reeve));
  CHECK(is_compressed(cube(3), 50));
  // (1,1) is an interior lattice point
  CHECK_FALSE(is_compressed(LatticePolytope(2, {{0, 0}, {2, 1}, {1, 2}})));
}

TEST_CASE("compressed implies empty, normal and compressed faces") {
  auto polys = random_polytopes(40, 55);
  polys.push_back(cube(3));
  polys.push_back(square);
  for (const auto& p : polys) {
    if (is_two_level(p)) CHECK(is_compressed(p, 200));
    if (!is_compressed(p, 200)) continue;
    CHECK(is_empty_polytope(p));
    CHECK(is_normal(p, std::max<std::int64_t>(2, default_normality_bound(p))));
    for (const auto& f : faces(p)) CHECK(is_compressed(f, 200));
  }
}
