#include "cpoly/complex.hpp"
#include "cpoly/polynomial.hpp"
#include "cpoly/sr_ideal.hpp"

#include "laws.hpp"

#include <doctest.h>

#include <random>

using namespace cpoly;

namespace {

const LatticePolytope unit_segment(1, {{0}, {1}});
const LatticePolytope segment2(1, {{0}, {2}});
const LatticePolytope square(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
const LatticePolytope square_right(2, {{1, 0}, {2, 0}, {1, 1}, {2, 1}});
const LatticePolytope triangle(2, {{0, 0}, {1, 0}, {0, 1}});

PolytopalComplex boundary_of(const PolytopalComplex& c) {
  const int d = c.dim();
  return subcomplex_where(c, [d](const LatticePolytope& p) { return static_cast<int>(p.dim()) < d; });
}

RelativeComplex open_cell(const LatticePolytope& p) {
  const PolytopalComplex c = generated_by(p.ambient_dim(), {p});
  return {c, boundary_of(c)};
}

std::vector<std::vector<Point>> maximal_point_sets(const GeomSimplicialComplex& t) {
  std::vector<std::vector<Point>> out;
  for (const auto& s : t.maximal_simplices()) out.push_back(t.points_of(s));
  std::sort(out.begin(), out.end());
  return out;
}

Integer normalized_volume(const LatticePolytope& p) {
  std::vector<Sample> samples;
  for (std::int64_t k = 1; k <= static_cast<std::int64_t>(p.dim()) + 1; ++k)
    samples.emplace_back(k, Integer(static_cast<unsigned long>(lattice_points(p, k).size())));
  const auto poly = interpolate(samples, p.dim());
  Rational lead = poly.monomial().back();
  for (std::size_t i = 2; i <= p.dim(); ++i) lead *= static_cast<long>(i);
  REQUIRE(lead.get_den() == 1);
  return lead.get_num();
}

std::vector<LatticePolytope> random_full_polytopes(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LatticePolytope> out;
  while (out.size() < count) {
    const std::size_t d = 1 + rng() % 3;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < d + 1 + rng() % 4; ++i) {
      Point p(d);
      for (auto& x : p) x = static_cast<std::int64_t>(rng() % 3);
      pts.push_back(p);
    }
    LatticePolytope p(d, pts);
    if (p.dim() == d) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(generated_by(1, {unit_segment})));
  CHECK(validate(generated_by(2, {square, square_right})));
  const LatticePolytope a(2, {{0, 0}, {2, 2}}), b(2, {{0, 2}, {2, 0}});
  CHECK_FALSE(meet_is_common_face(a, b));
  auto crossing = faces(a);
  for (auto& f : faces(b)) crossing.push_back(f);
  CHECK_FALSE(validate(PolytopalComplex::from_faces(2, crossing)));
  // missing a face
  CHECK_FALSE(validate(PolytopalComplex::from_faces(2, {square})));
}

TEST_CASE("common faces") {
  CHECK(meet_is_common_face(square, square_right));
  CHECK(meet_is_common_face(square, LatticePolytope(2, {{5, 5}})));
  // overlapping squares meet in a non-face
  CHECK_FALSE(meet_is_common_face(square, LatticePolytope(2, {{0, 0}, {2, 0}, {0, 1}, {2, 1}})));
  // a segment through the interior of the square
  CHECK_FALSE(meet_is_common_face(square, LatticePolytope(2, {{0, 0}, {1, 1}})));
  // the diagonal triangle shares vertices but is not a face
  CHECK_FALSE(meet_is_common_face(square, triangle));
  // touching at a vertex only
  CHECK(meet_is_common_face(square, LatticePolytope(2, {{1, 1}, {2, 1}, {2, 2}})));
}

TEST_CASE("generated_by") {
  CHECK(generated_by(2, {square}).size() == 9);
  // 6 vertices, 7 edges, 2 squares
  const auto two = generated_by(2, {square, square_right});
  CHECK(two.size() == 15);
  CHECK(two.maximal().size() == 2);
  CHECK(generated_by(2, {}).empty());
  CHECK_THROWS_AS(generated_by(2, {LatticePolytope(2, {{0, 0}, {2, 2}}), LatticePolytope(2, {{0, 2}, {2, 0}})}),
                  std::invalid_argument);
}

TEST_CASE("pull_polytope examples") {
  const auto lex = PointOrder::lexicographic();
  CHECK(maximal_point_sets(pull_polytope(unit_segment, lex)) == std::vector<std::vector<Point>>{{{0}, {1}}});
  CHECK(maximal_point_sets(pull_polytope(square, lex)) ==
        std::vector<std::vector<Point>>{{{0, 0}, {0, 1}, {1, 1}}, {{0, 0}, {1, 0}, {1, 1}}});
  // pulling the middle point first splits [0,2] into unit segments
  CHECK(maximal_point_sets(pull_polytope(segment2, PointOrder::sequence({{1}, {0}, {2}}))) ==
        std::vector<std::vector<Point>>{{{0}, {1}}, {{1}, {2}}});
  // pulling an endpoint first cones it over the opposite endpoint only
  CHECK(maximal_point_sets(pull_polytope(segment2, lex)) == std::vector<std::vector<Point>>{{{0}, {2}}});
  CHECK(maximal_point_sets(pull_polytope(segment2, PointOrder::sequence({{2}, {1}, {0}}))) ==
        std::vector<std::vector<Point>>{{{0}, {2}}});
}

TEST_CASE("pull_complex") {
  const auto lex = PointOrder::lexicographic();
  CHECK(maximal_point_sets(pull_complex(generated_by(2, {square}), lex)) ==
        maximal_point_sets(pull_polytope(square, lex)));
  const auto t = pull_complex(generated_by(2, {square, square_right}), lex);
  CHECK(t.maximal_simplices().size() == 4);
  CHECK(t.vertices().size() == 6);
  // the shared edge appears once, as a single simplex
  const auto sets = laws::simplex_sets(t);
  CHECK(sets.count({{1, 0}, {1, 1}}) == 1);
  CHECK(pull_complex(PolytopalComplex(2), lex).empty());
  CHECK_THROWS_AS(pull_complex(generated_by(1, {segment2}), lex), NotCompressedError);
  try {
    pull_complex(generated_by(1, {segment2}), lex);
  } catch (const NotCompressedError& e) {
    CHECK(e.face_vertices() == std::vector<Point>{{0}, {2}});
  }
}

TEST_CASE("relative f-vectors") {
  const auto lex = PointOrder::lexicographic();
  const auto seg = generated_by(1, {unit_segment});
  CHECK(relative_f_vector({seg, boundary_of(seg)}, lex) == std::vector<std::int64_t>{0, 1});
  CHECK(relative_f_vector(open_cell(triangle), lex) == std::vector<std::int64_t>{0, 0, 1});
  CHECK(relative_f_vector(open_cell(square), lex) == std::vector<std::int64_t>{0, 1, 2});
  CHECK(relative_f_vector({generated_by(2, {square}), PolytopalComplex(2)}, lex) == std::vector<std::int64_t>{4, 5, 2});
  CHECK(relative_f_vector({PolytopalComplex(2), PolytopalComplex(2)}, lex).empty());
}

TEST_CASE("relative lattice point counts") {
  const auto seg = generated_by(1, {unit_segment});
  CHECK(count_relative_points({seg, boundary_of(seg)}, 3) == 2);
  CHECK(count_relative_points(open_cell(square), 2) == 1);
  CHECK(count_relative_points(open_cell(square), 4) == 9);
  CHECK(count_relative_points({PolytopalComplex(2), PolytopalComplex(2)}, 3) == 0);
  // two squares minus their common edge: 2 * (k+1)^2 - 2 * (k+1)
  const auto two = generated_by(2, {square, square_right});
  const auto without_edge = subcomplex_where(two, [](const LatticePolytope& p) {
    return std::all_of(p.vertices().begin(), p.vertices().end(), [](const Point& v) { return v[0] == 1; });
  });
  for (std::int64_t k = 1; k <= 4; ++k) CHECK(count_relative_points({two, without_edge}, k) == 2 * (k + 1) * (k + 1) - 2 * (k + 1));
}

TEST_CASE("Ehrhart-Hilbert bridge on small complexes") {
  const auto lex = PointOrder::lexicographic();
  const LatticePolytope cube3(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  const auto cube = generated_by(3, {cube3});
  std::vector<RelativeComplex> cases{
      open_cell(square),
      open_cell(triangle),
      open_cell(cube3),
      {cube, PolytopalComplex(3)},
      {cube, subcomplex_where(cube, [](const LatticePolytope& p) {
         return std::all_of(p.vertices().begin(), p.vertices().end(), [](const Point& v) { return v[0] == 1; });
       })},
      {generated_by(2, {square, square_right}), PolytopalComplex(2)},
  };
  for (const auto& c : cases) {
    REQUIRE(validate(c));
    const auto f = relative_f_vector(c, lex);
    for (std::int64_t k = 1; k <= c.total.dim() + 2; ++k) CHECK(count_relative_points(c, k) == hilbert_from_f(f, k));
  }
}

TEST_CASE("pulling laws on random polytopes and orders") {
  std::mt19937_64 rng(99);
  for (const auto& p : random_full_polytopes(25, 4)) {
    const Integer volume = normalized_volume(p);
    for (int i = 0; i < 3; ++i) {
      const PointOrder order = laws::random_order(p, rng);
      CHECK(laws::minimal_point_in_every_cell(p, order));
      CHECK(laws::restricts_to_faces(p, order));
      CHECK(laws::tiles(p, order, volume));
    }
  }
}

TEST_CASE("compressed polytopes pull to unimodular triangulations") {
  std::mt19937_64 rng(7);
  const LatticePolytope cube3(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  for (const auto& p : {square, triangle, cube3, LatticePolytope(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}})}) {
    REQUIRE(is_compressed(p, 200));
    for (int i = 0; i < 10; ++i) {
      const auto t = pull_polytope(p, laws::random_order(p, rng));
      for (const auto& s : t.maximal_simplices()) CHECK(is_unimodular_simplex(t.points_of(s)));
    }
  }
}
