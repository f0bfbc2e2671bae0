#include "cpoly/constructions.hpp"

#include <optional>
#include <set>
#include <stdexcept>

namespace cpoly {

const std::vector<Kind>& all_kinds() {
  static const std::vector<Kind> kinds{Kind::chromatic, Kind::int_flow, Kind::mod_flow, Kind::int_tension,
                                       Kind::mod_tension};
  return kinds;
}

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::chromatic: return "chromatic";
    case Kind::int_flow: return "flow";
    case Kind::mod_flow: return "modflow";
    case Kind::int_tension: return "tension";
    case Kind::mod_tension: return "modtension";
  }
  return "?";
}

Kind parse_kind(const std::string& name) {
  for (Kind k : all_kinds())
    if (kind_name(k) == name) return k;
  throw std::invalid_argument("unknown kind '" + name + "' (expected chromatic, flow, modflow, tension or modtension)");
}

namespace {

RatVector unit(std::size_t dim, std::size_t j, long value = 1) {
  RatVector v(dim, Rational(0));
  v[j] = value;
  return v;
}

using Rows = std::vector<std::vector<std::int64_t>>;

// One row per vertex, zero rows included so rows stay indexed by vertex.
Rows vertex_rows(const Graph& g) {
  const IntMatrix a = incidence_matrix(g);
  Rows rows(a.rows(), std::vector<std::int64_t>(a.cols()));
  for (std::size_t v = 0; v < a.rows(); ++v)
    for (std::size_t j = 0; j < a.cols(); ++j) rows[v][j] = a(v, j).get_si();
  return rows;
}

RatVector as_rational(const std::vector<std::int64_t>& r) {
  RatVector v;
  for (auto x : r) v.emplace_back(static_cast<long>(x));
  return v;
}

// Open box lo < x < hi and closed box lo <= x <= hi on every coordinate.
void add_box(LinearSystem& open, LinearSystem& closed, const std::vector<std::int64_t>& lo,
             const std::vector<std::int64_t>& hi) {
  const std::size_t d = lo.size();
  for (std::size_t j = 0; j < d; ++j) {
    open.add_strict(unit(d, j, -1), Rational(static_cast<long>(-lo[j])));
    open.add_strict(unit(d, j), Rational(static_cast<long>(hi[j])));
    closed.add_weak(unit(d, j, -1), Rational(static_cast<long>(-lo[j])));
    closed.add_weak(unit(d, j), Rational(static_cast<long>(hi[j])));
  }
}

std::optional<Cell> make_cell(std::vector<std::int64_t> label, LinearSystem open, const LinearSystem& closed) {
  if (!lp_feasible(open)) return std::nullopt;
  std::vector<Point> points;
  for (const auto& v : enumerate_vertices(closed)) {
    Point p;
    for (const auto& x : v) {
      if (x.get_den() != 1)
        throw std::runtime_error("cell has a non-integral vertex; the constraint matrix is not totally unimodular");
      p.push_back(to_int64(x.get_num()));
    }
    points.push_back(std::move(p));
  }
  if (points.empty()) throw std::logic_error("nonempty cell without vertices");
  return Cell{std::move(label), std::move(open), LatticePolytope(closed.dim, std::move(points))};
}

// Calls f on every integer vector in the box [lo, hi].
template <class F>
void for_each_in_box(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi, F&& f) {
  std::vector<std::int64_t> x = lo;
  for (std::size_t j = 0; j < lo.size(); ++j)
    if (lo[j] > hi[j]) return;
  while (true) {
    f(x);
    std::size_t i = 0;
    while (i < x.size() && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == x.size()) return;
    ++x[i];
  }
}

void require_small(std::size_t count, const char* what) {
  if (count > 22) throw std::length_error(std::string(what) + ": too many candidate cells");
}

std::vector<Cell> chromatic_cells(const Graph& g) {
  std::vector<Cell> cells;
  if (g.has_loop()) return cells;
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  require_small(m, "chromatic_complex");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    LinearSystem open, closed;
    open.dim = closed.dim = n;
    add_box(open, closed, std::vector<std::int64_t>(n, 0), std::vector<std::int64_t>(n, 1));
    std::vector<std::int64_t> sigma(m);
    for (std::size_t j = 0; j < m; ++j) {
      sigma[j] = (mask >> j) & 1 ? -1 : 1;
      // sigma (x_head - x_tail) >= 0, written as sigma (x_tail - x_head) <= 0
      RatVector r(n, Rational(0));
      r[g.edges()[j].tail] += static_cast<long>(sigma[j]);
      r[g.edges()[j].head] -= static_cast<long>(sigma[j]);
      open.add_strict(r, 0);
      closed.add_weak(r, 0);
    }
    if (auto c = make_cell(std::move(sigma), std::move(open), closed)) cells.push_back(std::move(*c));
  }
  return cells;
}

// Cells (prod [a_e, a_e + 1]) cap {rows . x = 0} over a in {-1, 0}^E.
std::vector<Cell> orthant_cells(std::size_t m, const Rows& rows, const char* what) {
  std::vector<Cell> cells;
  require_small(m, what);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::int64_t> a(m), hi(m);
    for (std::size_t j = 0; j < m; ++j) {
      a[j] = (mask >> j) & 1 ? 0 : -1;
      hi[j] = a[j] + 1;
    }
    LinearSystem open, closed;
    open.dim = closed.dim = m;
    for (const auto& r : rows) {
      open.add_equality(as_rational(r), 0);
      closed.add_equality(as_rational(r), 0);
    }
    add_box(open, closed, a, hi);
    if (auto c = make_cell(std::move(a), std::move(open), closed)) cells.push_back(std::move(*c));
  }
  return cells;
}

// Cells [0,1]^E cap {rows . x = b} over integer b in [lo, hi].
std::vector<Cell> slice_cells(std::size_t m, const Rows& rows, const std::vector<std::int64_t>& lo,
                              const std::vector<std::int64_t>& hi) {
  std::vector<Cell> cells;
  for_each_in_box(lo, hi, [&](const std::vector<std::int64_t>& b) {
    LinearSystem open, closed;
    open.dim = closed.dim = m;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      open.add_equality(as_rational(rows[i]), Rational(static_cast<long>(b[i])));
      closed.add_equality(as_rational(rows[i]), Rational(static_cast<long>(b[i])));
    }
    add_box(open, closed, std::vector<std::int64_t>(m, 0), std::vector<std::int64_t>(m, 1));
    if (auto c = make_cell(b, std::move(open), closed)) cells.push_back(std::move(*c));
  });
  return cells;
}

// Some coordinate is constant on all vertices and equal to one of `values`.
bool on_coordinate_level(const LatticePolytope& p, const std::vector<std::int64_t>& values) {
  const auto& verts = p.vertices();
  for (std::size_t j = 0; j < p.ambient_dim(); ++j)
    for (std::int64_t value : values) {
      bool all = true;
      for (const auto& v : verts) all = all && v[j] == value;
      if (all) return true;
    }
  return false;
}

bool in_chromatic_boundary(const Graph& g, const LatticePolytope& p) {
  const auto& verts = p.vertices();
  for (const auto& e : g.edges()) {
    bool all = true;
    for (const auto& v : verts) all = all && v[e.head] == v[e.tail];
    if (all) return true;
  }
  return on_coordinate_level(p, {1});
}

}  // namespace

CellFamily build_cells(Kind kind, const Graph& g) {
  CellFamily family{kind, {}, {}};
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  std::size_t dim = m;
  std::function<bool(const LatticePolytope&)> in_sub;
  switch (kind) {
    case Kind::chromatic:
      dim = n;
      family.cells = chromatic_cells(g);
      in_sub = [&g](const LatticePolytope& p) { return in_chromatic_boundary(g, p); };
      break;
    case Kind::int_flow:
      family.cells = orthant_cells(m, vertex_rows(g), "int_flow_complex");
      break;
    case Kind::int_tension:
      family.cells = orthant_cells(m, cycle_basis(g), "int_tension_complex");
      break;
    case Kind::mod_flow: {
      std::vector<std::int64_t> lo, hi;
      for (std::size_t v = 0; v < n; ++v) {
        lo.push_back(-static_cast<std::int64_t>(g.outdegree(v)));
        hi.push_back(static_cast<std::int64_t>(g.indegree(v)));
      }
      family.cells = slice_cells(m, vertex_rows(g), lo, hi);
      break;
    }
    case Kind::mod_tension: {
      const auto cycles = cycle_basis(g);
      std::vector<std::int64_t> lo, hi;
      for (const auto& c : cycles) {
        std::int64_t pos = 0, neg = 0;
        for (auto x : c) (x > 0 ? pos : neg) += x > 0 ? x : -x;
        lo.push_back(-neg);
        hi.push_back(pos);
      }
      family.cells = slice_cells(m, cycles, lo, hi);
      break;
    }
  }
  if (!in_sub) {
    const std::vector<std::int64_t> levels =
        kind == Kind::int_flow || kind == Kind::int_tension ? std::vector<std::int64_t>{-1, 0, 1}
                                                            : std::vector<std::int64_t>{0, 1};
    in_sub = [levels](const LatticePolytope& p) { return on_coordinate_level(p, levels); };
  }

  std::vector<LatticePolytope> closed;
  for (const auto& c : family.cells) closed.push_back(c.closed);
  family.complex.total = generated_by(dim, closed);
  family.complex.sub = subcomplex_where(family.complex.total, in_sub);
  if (!family.complex.total.empty() &&
      family.complex.total.dim() != static_cast<int>(degree_bound(kind, g)))
    throw std::logic_error(kind_name(kind) + " complex has dimension " + std::to_string(family.complex.total.dim()) +
                           ", expected " + std::to_string(degree_bound(kind, g)));
  return family;
}

RelativeComplex construct(Kind kind, const Graph& g) { return build_cells(kind, g).complex; }
RelativeComplex chromatic_complex(const Graph& g) { return construct(Kind::chromatic, g); }
RelativeComplex int_flow_complex(const Graph& g) { return construct(Kind::int_flow, g); }
RelativeComplex mod_flow_complex(const Graph& g) { return construct(Kind::mod_flow, g); }
RelativeComplex int_tension_complex(const Graph& g) { return construct(Kind::int_tension, g); }
RelativeComplex mod_tension_complex(const Graph& g) { return construct(Kind::mod_tension, g); }

std::size_t degree_bound(Kind kind, const Graph& g) {
  const std::size_t n = g.vertex_count(), m = g.edge_count(), c = g.component_count();
  switch (kind) {
    case Kind::chromatic: return n;
    case Kind::int_flow:
    case Kind::mod_flow: return m + c - n;
    case Kind::int_tension:
    case Kind::mod_tension: return n - c;
  }
  return 0;
}

Integer brute_force(Kind kind, const Graph& g, std::int64_t k) {
  switch (kind) {
    case Kind::chromatic: return chromatic_bf(g, k);
    case Kind::int_flow: return int_flow_bf(g, k);
    case Kind::mod_flow: return mod_flow_bf(g, k);
    case Kind::int_tension: return int_tension_bf(g, k);
    case Kind::mod_tension: return mod_tension_bf(g, k);
  }
  return 0;
}

}  // namespace cpoly
