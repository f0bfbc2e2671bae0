#include "cpoly/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace cpoly {

namespace {

using Wide = __int128;

Wide dot_wide(const Point& a, const Point& b) {
  Wide s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<Wide>(a[i]) * b[i];
  return s;
}

Point to_point(const std::vector<Integer>& v) {
  Point p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = to_int64(v[i]);
  return p;
}

RatVector to_rat(const Point& p) {
  RatVector v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = Rational(static_cast<long>(p[i]));
  return v;
}

// Facets of the full-dimensional hull of `pts` in Z^m by the double
// description method on the cone {(c, delta) : c.q - delta <= 0 for all q}.
// Returns primitive (c, delta) pairs.
std::vector<std::pair<Point, std::int64_t>> double_description(const std::vector<Point>& pts, std::size_t m) {
  const std::size_t n = pts.size();
  std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(m + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) rows[i][j] = static_cast<long>(pts[i][j]);
    rows[i][m] = -1;
  }
  auto eval = [&](std::size_t i, const std::vector<Integer>& z) {
    Integer s = 0;
    for (std::size_t j = 0; j <= m; ++j) s += rows[i][j] * z[j];
    return s;
  };

  // Initial simplicial cone from m+1 affinely independent points.
  std::vector<std::size_t> basis_rows;
  {
    RatMatrix acc(0, m + 1);
    for (std::size_t i = 0; i < n && basis_rows.size() < m + 1; ++i) {
      RatMatrix trial(basis_rows.size() + 1, m + 1);
      for (std::size_t r = 0; r < basis_rows.size(); ++r)
        for (std::size_t j = 0; j <= m; ++j) trial(r, j) = Rational(rows[basis_rows[r]][j]);
      for (std::size_t j = 0; j <= m; ++j) trial(basis_rows.size(), j) = Rational(rows[i][j]);
      if (rank(trial) == basis_rows.size() + 1) basis_rows.push_back(i);
    }
    if (basis_rows.size() != m + 1) throw std::logic_error("double_description: points not full-dimensional");
  }

  struct Ray {
    std::vector<Integer> z;
    std::vector<bool> zero;  // over all rows; meaningful for processed rows
  };
  std::vector<bool> processed(n, false);
  std::vector<Ray> rays;
  {
    RatMatrix r0(m + 1, m + 1);
    for (std::size_t r = 0; r <= m; ++r)
      for (std::size_t j = 0; j <= m; ++j) r0(r, j) = Rational(rows[basis_rows[r]][j]);
    for (std::size_t j = 0; j <= m; ++j) {
      RatVector rhs(m + 1, Rational(0));
      rhs[j] = -1;
      auto z = solve_square(r0, rhs);
      Ray ray{primitive_integer(*z), std::vector<bool>(n, false)};
      rays.push_back(std::move(ray));
    }
    for (std::size_t r : basis_rows) processed[r] = true;
    for (auto& ray : rays)
      for (std::size_t r : basis_rows) ray.zero[r] = eval(r, ray.z) == 0;
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (processed[i]) continue;
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = eval(i, rays[r].z);
      if (val[r] > 0)
        pos.push_back(r);
      else if (val[r] < 0)
        neg.push_back(r);
    }
    if (pos.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r) rays[r].zero[i] = val[r] == 0;
      processed[i] = true;
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] > 0) continue;
      Ray kept = rays[r];
      kept.zero[i] = val[r] == 0;
      next.push_back(std::move(kept));
    }
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        std::vector<bool> common(n, false);
        std::size_t count = 0;
        for (std::size_t r = 0; r < n; ++r)
          if (processed[r] && rays[p].zero[r] && rays[q].zero[r]) {
            common[r] = true;
            ++count;
          }
        if (count + 1 < m) continue;
        bool adjacent = true;
        for (std::size_t w = 0; w < rays.size() && adjacent; ++w) {
          if (w == p || w == q) continue;
          bool contains = true;
          for (std::size_t r = 0; r < n; ++r)
            if (common[r] && !rays[w].zero[r]) {
              contains = false;
              break;
            }
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        RatVector combo(m + 1);
        for (std::size_t j = 0; j <= m; ++j) combo[j] = Rational(val[p] * rays[q].z[j] - val[q] * rays[p].z[j]);
        Ray ray{primitive_integer(combo), common};
        ray.zero[i] = true;
        next.push_back(std::move(ray));
      }
    processed[i] = true;
    rays = std::move(next);
  }

  std::vector<std::pair<Point, std::int64_t>> out;
  for (const auto& ray : rays) {
    RatVector c(m);
    for (std::size_t j = 0; j < m; ++j) c[j] = Rational(ray.z[j]);
    std::vector<Integer> prim = primitive_integer(c);
    Point normal = to_point(prim);
    if (std::all_of(normal.begin(), normal.end(), [](std::int64_t x) { return x == 0; })) continue;
    Wide best = dot_wide(normal, pts[0]);
    for (const auto& q : pts) best = std::max(best, dot_wide(normal, q));
    out.emplace_back(std::move(normal), static_cast<std::int64_t>(best));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

LatticePolytope::LatticePolytope(std::size_t ambient_dim, std::vector<Point> points) : ambient_dim_(ambient_dim) {
  if (points.empty()) throw std::invalid_argument("LatticePolytope: empty point set");
  for (const auto& p : points)
    if (p.size() != ambient_dim) throw std::invalid_argument("LatticePolytope: point has wrong dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  const Point& base = points.front();
  const std::size_t n = points.size();

  // Direction space and its pivot coordinates.
  RatMatrix diff(n - 1, ambient_dim);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j)
      diff(i - 1, j) = Rational(static_cast<long>(points[i][j] - base[j]));
  std::vector<std::size_t> pivots;
  {
    RatMatrix reduced = diff;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ambient_dim && r < reduced.rows(); ++c) {
      std::size_t p = r;
      while (p < reduced.rows() && reduced(p, c) == 0) ++p;
      if (p == reduced.rows()) continue;
      for (std::size_t j = 0; j < ambient_dim; ++j) std::swap(reduced(r, j), reduced(p, j));
      for (std::size_t i = 0; i < reduced.rows(); ++i) {
        if (i == r || reduced(i, c) == 0) continue;
        Rational f = reduced(i, c) / reduced(r, c);
        for (std::size_t j = 0; j < ambient_dim; ++j) reduced(i, j) -= f * reduced(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
  }
  dim_ = pivots.size();

  // Affine hull equations: normals orthogonal to every difference vector.
  {
    auto sol = solve_rational(diff, RatVector(diff.rows(), Rational(0)));
    for (const RatVector& k : sol->kernel) {
      Point normal = to_point(primitive_integer(k));
      std::int64_t rhs = static_cast<std::int64_t>(dot_wide(normal, base));
      equations_.push_back({std::move(normal), rhs});
    }
    std::sort(equations_.begin(), equations_.end(),
              [](const Hyperplane& a, const Hyperplane& b) { return a.normal < b.normal; });
  }

  if (equations_.empty()) {
    for (std::size_t j = 0; j < ambient_dim; ++j) {
      Point e(ambient_dim, 0);
      e[j] = 1;
      direction_lattice_.push_back(std::move(e));
    }
  } else {
    IntMatrix eq(equations_.size(), ambient_dim);
    for (std::size_t i = 0; i < equations_.size(); ++i)
      for (std::size_t j = 0; j < ambient_dim; ++j) eq(i, j) = static_cast<long>(equations_[i].normal[j]);
    for (const auto& b : integer_kernel_basis(eq)) direction_lattice_.push_back(to_point(b));
  }

  if (dim_ > 0) {
    std::vector<Point> projected(n, Point(dim_));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < dim_; ++j) projected[i][j] = points[i][pivots[j]];
    for (auto& [c, delta] : double_description(projected, dim_)) {
      Point normal(ambient_dim, 0);
      for (std::size_t j = 0; j < dim_; ++j) normal[pivots[j]] = c[j];
      facets_.push_back({std::move(normal), delta});
    }
    std::sort(facets_.begin(), facets_.end(),
              [](const Halfspace& a, const Halfspace& b) { return a.normal < b.normal; });

    // A point is extreme iff the normals of its tight facets span the
    // direction space.
    for (const auto& p : points) {
      std::vector<const Halfspace*> tight;
      for (const auto& f : facets_)
        if (dot_wide(f.normal, p) == f.offset) tight.push_back(&f);
      if (tight.size() < dim_) continue;
      RatMatrix m(tight.size(), dim_);
      for (std::size_t r = 0; r < tight.size(); ++r)
        for (std::size_t j = 0; j < dim_; ++j) m(r, j) = Rational(static_cast<long>(tight[r]->normal[pivots[j]]));
      if (rank(m) == dim_) vertices_.push_back(p);
    }
  } else {
    vertices_.push_back(base);
  }

  Point lo(ambient_dim), hi(ambient_dim);
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    lo[j] = hi[j] = vertices_.front()[j];
    for (const auto& v : vertices_) {
      lo[j] = std::min(lo[j], v[j]);
      hi[j] = std::max(hi[j], v[j]);
    }
  }
  lattice_points_ = scan_lattice_points(ambient_dim, equations_, facets_, lo, hi, 1);
}

bool LatticePolytope::contains(const Point& z, std::int64_t k) const {
  if (z.size() != ambient_dim_) return false;
  for (const auto& e : equations_)
    if (dot_wide(e.normal, z) != static_cast<Wide>(e.rhs) * k) return false;
  for (const auto& f : facets_)
    if (dot_wide(f.normal, z) > static_cast<Wide>(f.offset) * k) return false;
  return true;
}

bool LatticePolytope::contains(const RatVector& z) const { return system().satisfied_by(z); }

LinearSystem LatticePolytope::system() const {
  LinearSystem sys(ambient_dim_);
  for (const auto& e : equations_) sys.add_equality(to_rat(e.normal), Rational(static_cast<long>(e.rhs)));
  for (const auto& f : facets_) sys.add_weak(to_rat(f.normal), Rational(static_cast<long>(f.offset)));
  return sys;
}

std::vector<Halfspace> facets(const LatticePolytope& p) { return p.facets(); }

std::vector<Point> scan_lattice_points(std::size_t ambient_dim, const std::vector<Hyperplane>& equations,
                                       const std::vector<Halfspace>& facets, const Point& lo, const Point& hi,
                                       std::int64_t k) {
  struct Row {
    const Point* normal;
    Wide rhs;
    bool equality;
    std::vector<Wide> suffix_min, suffix_max;  // over coordinates j..d-1
  };
  std::vector<Row> rows;
  auto add = [&](const Point& normal, std::int64_t rhs, bool equality) {
    Row r{&normal, static_cast<Wide>(rhs) * k, equality, std::vector<Wide>(ambient_dim + 1, 0),
          std::vector<Wide>(ambient_dim + 1, 0)};
    for (std::size_t j = ambient_dim; j-- > 0;) {
      Wide a = static_cast<Wide>(normal[j]) * lo[j];
      Wide b = static_cast<Wide>(normal[j]) * hi[j];
      r.suffix_min[j] = r.suffix_min[j + 1] + std::min(a, b);
      r.suffix_max[j] = r.suffix_max[j + 1] + std::max(a, b);
    }
    rows.push_back(std::move(r));
  };
  for (const auto& e : equations) add(e.normal, e.rhs, true);
  for (const auto& f : facets) add(f.normal, f.offset, false);

  std::vector<Point> out;
  Point cur(ambient_dim, 0);
  std::vector<Wide> partial(rows.size(), 0);

  auto feasible = [&](std::size_t depth) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Row& row = rows[r];
      if (partial[r] + row.suffix_min[depth] > row.rhs) return false;
      if (row.equality && partial[r] + row.suffix_max[depth] < row.rhs) return false;
    }
    return true;
  };

  auto recurse = [&](auto& self, std::size_t depth) -> void {
    if (!feasible(depth)) return;
    if (depth == ambient_dim) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t x = lo[depth]; x <= hi[depth]; ++x) {
      cur[depth] = x;
      for (std::size_t r = 0; r < rows.size(); ++r) partial[r] += static_cast<Wide>((*rows[r].normal)[depth]) * x;
      self(self, depth + 1);
      for (std::size_t r = 0; r < rows.size(); ++r) partial[r] -= static_cast<Wide>((*rows[r].normal)[depth]) * x;
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<Point> lattice_points(const LatticePolytope& p, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("lattice_points: negative dilation");
  if (k == 1) return p.lattice_points();
  const std::size_t d = p.ambient_dim();
  Point lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::int64_t mn = p.vertices().front()[j], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    Wide a = static_cast<Wide>(mn) * k, b = static_cast<Wide>(mx) * k;
    if (a < INT64_MIN / 4 || b > INT64_MAX / 4) throw std::overflow_error("lattice_points: dilation too large");
    lo[j] = static_cast<std::int64_t>(a);
    hi[j] = static_cast<std::int64_t>(b);
  }
  return scan_lattice_points(d, p.equations(), p.facets(), lo, hi, k);
}

FaceLattice face_lattice(const LatticePolytope& p) {
  FaceLattice fl;
  fl.points = p.lattice_points();
  auto index_of = [&](const Point& x) {
    return static_cast<std::size_t>(std::lower_bound(fl.points.begin(), fl.points.end(), x) - fl.points.begin());
  };
  std::vector<std::size_t> all_vertices;
  for (const auto& v : p.vertices()) all_vertices.push_back(index_of(v));
  std::sort(all_vertices.begin(), all_vertices.end());

  const auto& fs = p.facets();
  std::vector<std::vector<std::size_t>> tight_vertices(fs.size()), tight_points(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t q = 0; q < fl.points.size(); ++q)
      if (dot_wide(fs[i].normal, fl.points[q]) == fs[i].offset) tight_points[i].push_back(q);
    for (std::size_t v : all_vertices)
      if (std::binary_search(tight_points[i].begin(), tight_points[i].end(), v)) tight_vertices[i].push_back(v);
  }

  std::map<std::vector<std::size_t>, std::size_t> index;
  auto make_node = [&](std::vector<std::size_t> verts, std::size_t dim) {
    auto [it, inserted] = index.emplace(verts, fl.nodes.size());
    if (!inserted) return it->second;
    FaceLattice::Node node;
    node.dim = dim;
    std::vector<std::size_t> pts;
    bool constrained = false;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (!std::includes(tight_vertices[i].begin(), tight_vertices[i].end(), verts.begin(), verts.end())) continue;
      if (!constrained) {
        pts = tight_points[i];
        constrained = true;
      } else {
        std::vector<std::size_t> keep;
        std::set_intersection(pts.begin(), pts.end(), tight_points[i].begin(), tight_points[i].end(),
                              std::back_inserter(keep));
        pts = std::move(keep);
      }
    }
    if (!constrained) {
      pts.resize(fl.points.size());
      std::iota(pts.begin(), pts.end(), 0);
    }
    node.points = std::move(pts);
    node.vertices = std::move(verts);
    fl.nodes.push_back(std::move(node));
    return fl.nodes.size() - 1;
  };

  make_node(all_vertices, p.dim());
  for (std::size_t cur = 0; cur < fl.nodes.size(); ++cur) {
    if (fl.nodes[cur].dim == 0) continue;
    const std::vector<std::size_t> verts = fl.nodes[cur].vertices;
    std::set<std::vector<std::size_t>> candidates;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      std::vector<std::size_t> meet;
      std::set_intersection(verts.begin(), verts.end(), tight_vertices[i].begin(), tight_vertices[i].end(),
                            std::back_inserter(meet));
      if (!meet.empty() && meet.size() < verts.size()) candidates.insert(std::move(meet));
    }
    std::vector<std::size_t> children;
    for (const auto& c : candidates) {
      bool maximal = true;
      for (const auto& other : candidates)
        if (other.size() > c.size() && std::includes(other.begin(), other.end(), c.begin(), c.end())) {
          maximal = false;
          break;
        }
      if (maximal) children.push_back(make_node(c, fl.nodes[cur].dim - 1));
    }
    fl.nodes[cur].facets = std::move(children);
  }
  return fl;
}

std::vector<std::vector<std::size_t>> pull_maximal_simplices(const FaceLattice& fl,
                                                             const std::vector<std::size_t>& rank,
                                                             std::size_t node) {
  std::vector<std::optional<std::vector<std::vector<std::size_t>>>> memo(fl.nodes.size());
  auto pull = [&](auto& self, std::size_t id) -> const std::vector<std::vector<std::size_t>>& {
    if (memo[id]) return *memo[id];
    const auto& f = fl.nodes[id];
    std::vector<std::vector<std::size_t>> result;
    if (f.vertices.size() == f.dim + 1 && f.points.size() == f.vertices.size()) {
      result.push_back(f.points);
    } else {
      std::size_t v = f.points.front();
      for (std::size_t q : f.points)
        if (rank[q] < rank[v]) v = q;
      for (std::size_t child : f.facets) {
        const auto& cf = fl.nodes[child];
        if (std::binary_search(cf.points.begin(), cf.points.end(), v)) continue;
        for (const auto& s : self(self, child)) {
          std::vector<std::size_t> cone = s;
          cone.insert(std::upper_bound(cone.begin(), cone.end(), v), v);
          result.push_back(std::move(cone));
        }
      }
    }
    memo[id] = std::move(result);
    return *memo[id];
  };
  return pull(pull, node);
}

std::vector<LatticePolytope> faces(const LatticePolytope& p) {
  FaceLattice fl = face_lattice(p);
  std::vector<LatticePolytope> out;
  out.reserve(fl.nodes.size());
  for (const auto& node : fl.nodes) {
    std::vector<Point> verts;
    for (std::size_t v : node.vertices) verts.push_back(fl.points[v]);
    out.emplace_back(p.ambient_dim(), std::move(verts));
  }
  return out;
}

bool is_unimodular_simplex(const std::vector<Point>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("is_unimodular_simplex: no vertices");
  const std::size_t m = vertices.size() - 1;
  if (m == 0) return true;
  const std::size_t d = vertices.front().size();
  IntMatrix edges(d, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < d; ++i) edges(i, j) = static_cast<long>(vertices[j + 1][i] - vertices[0][i]);
  SmithForm snf = smith_normal_form(edges);
  if (snf.rank != m) return false;
  for (std::size_t i = 0; i < m; ++i)
    if (snf.diagonal(i, i) != 1) return false;
  return true;
}

bool is_unimodular(const Simplex& s) {
  if (!s.is_simplex()) throw std::invalid_argument("is_unimodular: polytope is not a simplex");
  return is_unimodular_simplex(s.vertices());
}

bool is_empty_polytope(const LatticePolytope& p) { return p.lattice_points() == p.vertices(); }

std::int64_t default_normality_bound(const LatticePolytope& p) {
  return std::max<std::int64_t>(2, static_cast<std::int64_t>(p.dim()) - 1);
}

std::optional<NormalityWitness> normality_witness(const LatticePolytope& p, std::int64_t k_max) {
  const auto& base = p.lattice_points();
  std::set<Point> sums(base.begin(), base.end());
  for (std::int64_t k = 2; k <= k_max; ++k) {
    std::set<Point> next;
    for (const auto& s : sums)
      for (const auto& b : base) {
        Point t(s.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = s[i] + b[i];
        next.insert(std::move(t));
      }
    sums = std::move(next);
    for (const auto& z : lattice_points(p, k))
      if (!sums.count(z)) return NormalityWitness{k, z};
  }
  return std::nullopt;
}

bool is_normal(const LatticePolytope& p, std::int64_t k_max) { return !normality_witness(p, k_max); }

bool is_normal(const LatticePolytope& p) { return is_normal(p, default_normality_bound(p)); }

bool is_two_level(const LatticePolytope& p) {
  for (const auto& f : p.facets()) {
    std::set<Wide> values;
    for (const auto& z : p.lattice_points()) {
      values.insert(dot_wide(f.normal, z));
      if (values.size() > 2) return false;
    }
    if (values.size() != 2) return false;
    Integer spacing = 0;
    for (const auto& b : p.direction_lattice()) {
      Integer v = static_cast<long>(static_cast<std::int64_t>(dot_wide(f.normal, b)));
      mpz_gcd(spacing.get_mpz_t(), spacing.get_mpz_t(), v.get_mpz_t());
    }
    Wide gap = *values.rbegin() - *values.begin();
    if (spacing == 0 || Integer(static_cast<long>(static_cast<std::int64_t>(gap))) != spacing) return false;
  }
  return true;
}

bool is_compressed(const LatticePolytope& p, std::uint64_t order_budget, std::uint64_t seed) {
  if (!is_empty_polytope(p)) return false;
  const FaceLattice fl = face_lattice(p);
  const std::size_t n = fl.points.size();

  std::map<std::vector<std::size_t>, bool> unimodular;
  auto pull_is_unimodular = [&](const std::vector<std::size_t>& sequence) {
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[sequence[i]] = i;
    for (const auto& s : pull_maximal_simplices(fl, rank)) {
      auto it = unimodular.find(s);
      if (it == unimodular.end()) {
        std::vector<Point> verts;
        for (std::size_t q : s) verts.push_back(fl.points[q]);
        it = unimodular.emplace(s, is_unimodular_simplex(verts)).first;
      }
      if (!it->second) return false;
    }
    return true;
  };

  std::vector<std::size_t> sequence(n);
  std::iota(sequence.begin(), sequence.end(), 0);

  std::uint64_t factorial = 1;
  bool exhaustive = true;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (factorial > order_budget / i) {
      exhaustive = false;
      break;
    }
    factorial *= i;
  }

  if (exhaustive) {
    do {
      if (!pull_is_unimodular(sequence)) return false;
    } while (std::next_permutation(sequence.begin(), sequence.end()));
    return true;
  }

  if (!pull_is_unimodular(sequence)) return false;
  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < order_budget; ++t) {
    std::shuffle(sequence.begin(), sequence.end(), rng);
    if (!pull_is_unimodular(sequence)) return false;
  }
  return true;
}

}  // namespace cpoly
