#include "cpoly/exact.hpp"

#include <doctest.h>

#include <random>

using namespace cpoly;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int span) {
  std::uniform_int_distribution<int> dist(-span, span);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

bool is_diagonal_chain(const IntMatrix& s) {
  const std::size_t n = std::min(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (i != j && s(i, j) != 0) return false;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (s(i, i) < 0) return false;
    if (s(i, i) == 0 ? s(i + 1, i + 1) != 0 : s(i + 1, i + 1) % s(i, i) != 0) return false;
  }
  return true;
}

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("smith normal form of small matrices") {
  auto id = smith_normal_form(IntMatrix::identity(2));
  CHECK(id.diagonal == IntMatrix::identity(2));
  CHECK(id.rank == 2);

  auto d = smith_normal_form(IntMatrix::from_rows(std::vector<std::vector<long>>{{2, 0}, {0, 3}}));
  CHECK(d.diagonal == IntMatrix::from_rows(std::vector<std::vector<long>>{{1, 0}, {0, 6}}));

  auto z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.diagonal == IntMatrix(2, 3));
  CHECK(z.rank == 0);
}

TEST_CASE("smith normal form reconstructs random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const IntMatrix m = random_matrix(rng, r, c, 6);
    const SmithForm s = smith_normal_form(m);
    CHECK(s.left * m * s.right == s.diagonal);
    CHECK(is_diagonal_chain(s.diagonal));
    const Integer dl = determinant(s.left), dr = determinant(s.right);
    CHECK(abs(dl) == 1);
    CHECK(abs(dr) == 1);
    CHECK(s.rank == rank(to_rational(m)));
  }
}

TEST_CASE("integer kernel basis") {
  const auto m = IntMatrix::from_rows(std::vector<std::vector<long>>{{1, 1, 1}});
  const auto basis = integer_kernel_basis(m);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) CHECK(v[0] + v[1] + v[2] == 0);
  // the two vectors span the kernel lattice: their 2x2 minors have gcd 1
  Integer g = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) g = gcd(g, basis[0][a] * basis[1][b] - basis[0][b] * basis[1][a]);
  CHECK(g == 1);
}

TEST_CASE("solve_rational examples") {
  auto one = solve_rational(to_rational(IntMatrix::from_rows(std::vector<std::vector<long>>{{1}})), rv({3}));
  REQUIRE(one);
  CHECK(one->particular == rv({3}));
  CHECK(one->kernel.empty());

  CHECK_FALSE(solve_rational(RatMatrix(1, 1), rv({1})));

  auto line = solve_rational(to_rational(IntMatrix::from_rows(std::vector<std::vector<long>>{{1, 1}})), rv({1}));
  REQUIRE(line);
  CHECK(line->particular == rv({1, 0}));
  REQUIRE(line->kernel.size() == 1);
  CHECK(line->kernel[0][0] == -line->kernel[0][1]);
}

TEST_CASE("solve_rational solutions satisfy the system") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const RatMatrix a = to_rational(random_matrix(rng, r, c, 3));
    RatVector b(r);
    for (auto& x : b) x = static_cast<long>(rng() % 7) - 3;
    const auto sol = solve_rational(a, b);
    if (!sol) {
      // inconsistent: appending b raises the rank
      RatMatrix ab(r, c + 1);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) ab(i, j) = a(i, j);
        ab(i, c) = b[i];
      }
      CHECK(rank(ab) == rank(a) + 1);
      continue;
    }
    CHECK(a * sol->particular == b);
    for (const auto& v : sol->kernel) CHECK(a * v == RatVector(r, Rational(0)));
    CHECK(sol->kernel.size() == c - rank(a));
  }
}

TEST_CASE("lp_feasible examples") {
  LinearSystem open(1);
  open.add_strict(rv({1}), 1);
  open.add_strict(rv({-1}), 0);
  auto x = lp_feasible(open);
  REQUIRE(x);
  CHECK((*x)[0] > 0);
  CHECK((*x)[0] < 1);

  LinearSystem empty(1);
  empty.add_strict(rv({1}), 0);
  empty.add_strict(rv({-1}), -1);
  CHECK_FALSE(lp_feasible(empty));
  CHECK_FALSE(fourier_motzkin_feasible(empty));

  LinearSystem seg(2);
  seg.add_equality(rv({1, 1}), 1);
  seg.add_strict(rv({-1, 0}), 0);
  seg.add_strict(rv({0, -1}), 0);
  auto y = lp_feasible(seg);
  REQUIRE(y);
  CHECK(seg.satisfied_by(*y));

  // touching closed boxes are weakly but not strictly feasible
  LinearSystem touch(1);
  touch.add_weak(rv({1}), 0);
  touch.add_weak(rv({-1}), 0);
  CHECK(lp_feasible(touch));
  touch.add_strict(rv({1}), 0);
  CHECK_FALSE(lp_feasible(touch));
}

TEST_CASE("lp_feasible agrees with Fourier-Motzkin on random systems") {
  std::mt19937_64 rng(17);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + rng() % 4;
    LinearSystem sys(d);
    auto row = [&] {
      RatVector v(d);
      for (auto& x : v) x = static_cast<long>(rng() % 5) - 2;
      return v;
    };
    const int rows = 2 + static_cast<int>(rng() % 5);
    for (int i = 0; i < rows; ++i) {
      const Rational rhs = static_cast<long>(rng() % 5) - 2;
      switch (rng() % 4) {
        case 0: sys.add_equality(row(), rhs); break;
        case 1: sys.add_strict(row(), rhs); break;
        default: sys.add_weak(row(), rhs); break;
      }
    }
    const auto x = lp_feasible(sys);
    CHECK(x.has_value() == fourier_motzkin_feasible(sys));
    if (x) {
      CHECK(sys.satisfied_by(*x));
      ++feasible;
    } else {
      ++infeasible;
    }
  }
  CHECK(feasible > 20);
  CHECK(infeasible > 20);
}

TEST_CASE("vertex enumeration of a square with a cut corner") {
  LinearSystem sys(2);
  sys.add_weak(rv({-1, 0}), 0);
  sys.add_weak(rv({0, -1}), 0);
  sys.add_weak(rv({1, 0}), 2);
  sys.add_weak(rv({0, 1}), 2);
  sys.add_weak(rv({1, 1}), 3);
  const auto v = enumerate_vertices(sys);
  CHECK(v == std::vector<RatVector>{rv({0, 0}), rv({0, 2}), rv({1, 2}), rv({2, 0}), rv({2, 1})});
}

TEST_CASE("exact helpers") {
  CHECK(determinant(IntMatrix::from_rows(std::vector<std::vector<long>>{{2, 1}, {1, 3}})) == 5);
  CHECK(primitive_integer(RatVector{Rational(2, 3), Rational(-4, 3)}) == std::vector<Integer>{1, -2});
  CHECK(to_int64(Integer(-7)) == -7);
  CHECK_THROWS_AS(to_int64(Integer("100000000000000000000000")), std::overflow_error);
}
