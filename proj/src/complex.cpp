#include "cpoly/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cpoly {

PointOrder PointOrder::sequence(const std::vector<Point>& ordered) {
  PointOrder o;
  for (const auto& p : ordered) o.rank_.emplace(p, o.rank_.size());
  return o;
}

bool PointOrder::less(const Point& a, const Point& b) const {
  if (rank_.empty()) return a < b;
  auto ia = rank_.find(a);
  auto ib = rank_.find(b);
  if (ia != rank_.end() && ib != rank_.end()) return ia->second < ib->second;
  if (ia != rank_.end()) return true;
  if (ib != rank_.end()) return false;
  return a < b;
}

namespace {

bool affinely_independent(const std::vector<Point>& pts) {
  if (pts.size() <= 1) return true;
  const std::size_t d = pts.front().size();
  RatMatrix m(pts.size() - 1, d);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) m(i - 1, j) = Rational(static_cast<long>(pts[i][j] - pts[0][j]));
  return rank(m) == pts.size() - 1;
}

}  // namespace

GeomSimplicialComplex::GeomSimplicialComplex(std::size_t ambient_dim, std::vector<Point> vertex_table,
                                             const std::vector<std::vector<std::size_t>>& generators)
    : ambient_dim_(ambient_dim), vertices_(std::move(vertex_table)) {
  for (auto gen : generators) {
    std::sort(gen.begin(), gen.end());
    gen.erase(std::unique(gen.begin(), gen.end()), gen.end());
    if (gen.empty()) continue;
    for (std::size_t v : gen)
      if (v >= vertices_.size()) throw std::out_of_range("GeomSimplicialComplex: vertex index out of range");
    if (simplices_.count(gen)) continue;
    if (!affinely_independent(points_of(gen)))
      throw std::invalid_argument("GeomSimplicialComplex: simplex vertices are affinely dependent");
    const std::size_t n = gen.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i)) s.push_back(gen[i]);
      simplices_.insert(std::move(s));
    }
  }
}

std::vector<Point> GeomSimplicialComplex::points_of(const std::vector<std::size_t>& simplex) const {
  std::vector<Point> out;
  out.reserve(simplex.size());
  for (std::size_t v : simplex) out.push_back(vertices_[v]);
  return out;
}

int GeomSimplicialComplex::dim() const {
  int d = -1;
  for (const auto& s : simplices_) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

std::vector<std::int64_t> GeomSimplicialComplex::f_vector() const {
  std::vector<std::int64_t> f(static_cast<std::size_t>(dim() + 1), 0);
  for (const auto& s : simplices_) ++f[s.size() - 1];
  return f;
}

std::vector<std::vector<std::size_t>> GeomSimplicialComplex::maximal_simplices() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : simplices_) {
    bool maximal = true;
    for (std::size_t v = 0; v < vertices_.size() && maximal; ++v) {
      if (std::binary_search(s.begin(), s.end(), v)) continue;
      std::vector<std::size_t> bigger = s;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), v), v);
      if (simplices_.count(bigger)) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

PolytopalComplex PolytopalComplex::from_faces(std::size_t ambient_dim, std::vector<LatticePolytope> faces) {
  PolytopalComplex c(ambient_dim);
  std::map<std::vector<Point>, LatticePolytope> unique;
  for (auto& f : faces) {
    if (f.ambient_dim() != ambient_dim) throw std::invalid_argument("PolytopalComplex: face in wrong ambient space");
    auto key = f.vertices();
    unique.emplace(std::move(key), std::move(f));
  }
  for (auto& [key, f] : unique) {
    c.index_.emplace(key, c.faces_.size());
    c.faces_.push_back(std::move(f));
  }
  for (std::size_t i = 0; i < c.faces_.size(); ++i) {
    const auto& vi = c.faces_[i].vertices();
    bool maximal = true;
    for (std::size_t j = 0; j < c.faces_.size() && maximal; ++j) {
      const auto& vj = c.faces_[j].vertices();
      if (i != j && vj.size() > vi.size() && std::includes(vj.begin(), vj.end(), vi.begin(), vi.end()))
        maximal = false;
    }
    if (maximal) c.maximal_.push_back(i);
  }
  return c;
}

std::vector<LatticePolytope> PolytopalComplex::maximal_faces() const {
  std::vector<LatticePolytope> out;
  for (std::size_t i : maximal_) out.push_back(faces_[i]);
  return out;
}

int PolytopalComplex::dim() const {
  int d = -1;
  for (const auto& f : faces_) d = std::max(d, static_cast<int>(f.dim()));
  return d;
}

bool PolytopalComplex::has_face(const std::vector<Point>& vertices) const {
  std::vector<Point> key = vertices;
  std::sort(key.begin(), key.end());
  return index_.count(key) > 0;
}

namespace {

// Vertices of p on the smallest face of p containing all of `pts`.
std::vector<Point> smallest_face_vertices(const LatticePolytope& p, const std::vector<Point>& pts,
                                          std::vector<const Halfspace*>* tight_out = nullptr) {
  std::vector<const Halfspace*> tight;
  for (const auto& f : p.facets()) {
    bool all = true;
    for (const auto& z : pts) {
      __int128 s = 0;
      for (std::size_t i = 0; i < z.size(); ++i) s += static_cast<__int128>(f.normal[i]) * z[i];
      if (s != f.offset) {
        all = false;
        break;
      }
    }
    if (all) tight.push_back(&f);
  }
  std::vector<Point> out;
  for (const auto& v : p.vertices()) {
    bool on = true;
    for (const Halfspace* f : tight) {
      __int128 s = 0;
      for (std::size_t i = 0; i < v.size(); ++i) s += static_cast<__int128>(f->normal[i]) * v[i];
      if (s != f->offset) {
        on = false;
        break;
      }
    }
    if (on) out.push_back(v);
  }
  if (tight_out) *tight_out = std::move(tight);
  return out;
}

LinearSystem combined(const LatticePolytope& p, const LatticePolytope& q) {
  LinearSystem sys = p.system();
  LinearSystem other = q.system();
  sys.equalities.insert(sys.equalities.end(), other.equalities.begin(), other.equalities.end());
  sys.weak.insert(sys.weak.end(), other.weak.begin(), other.weak.end());
  return sys;
}

}  // namespace

bool meet_is_common_face(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) return false;
  std::vector<Point> in_q, in_p;
  for (const auto& v : p.vertices())
    if (q.contains(v)) in_q.push_back(v);
  for (const auto& v : q.vertices())
    if (p.contains(v)) in_p.push_back(v);
  if (in_q != in_p) return false;
  if (in_q.empty()) return !lp_feasible(combined(p, q));

  // conv(W) must be a face of both, and p cap q must not leave that face.
  std::vector<const Halfspace*> tight;
  if (smallest_face_vertices(p, in_q, &tight) != in_q) return false;
  if (smallest_face_vertices(q, in_q) != in_q) return false;
  if (tight.empty()) return true;
  LinearSystem sys = combined(p, q);
  RatVector sum(p.ambient_dim(), Rational(0));
  Rational bound = 0;
  for (const Halfspace* f : tight) {
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += static_cast<long>(f->normal[i]);
    bound += static_cast<long>(f->offset);
  }
  sys.add_strict(std::move(sum), bound);
  return !lp_feasible(sys);
}

bool validate(const PolytopalComplex& c) {
  std::set<std::vector<Point>> closure;
  for (std::size_t i : c.maximal()) {
    const FaceLattice fl = face_lattice(c.faces()[i]);
    for (const auto& node : fl.nodes) {
      std::vector<Point> verts;
      for (std::size_t v : node.vertices) verts.push_back(fl.points[v]);
      closure.insert(std::move(verts));
    }
  }
  if (closure.size() != c.faces().size()) return false;
  for (const auto& f : c.faces())
    if (!closure.count(f.vertices())) return false;
  const auto& m = c.maximal();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      if (!meet_is_common_face(c.faces()[m[a]], c.faces()[m[b]])) return false;
  return true;
}

bool validate(const RelativeComplex& c) {
  if (!c.sub.empty() && c.sub.ambient_dim() != c.total.ambient_dim()) return false;
  for (const auto& f : c.sub.faces())
    if (!c.total.has_face(f.vertices())) return false;
  return validate(c.total) && validate(c.sub);
}

PolytopalComplex generated_by(std::size_t ambient_dim, const std::vector<LatticePolytope>& generators) {
  for (const auto& g : generators)
    if (g.ambient_dim() != ambient_dim) throw std::invalid_argument("generated_by: generator in wrong ambient space");
  for (std::size_t a = 0; a < generators.size(); ++a)
    for (std::size_t b = a + 1; b < generators.size(); ++b)
      if (!meet_is_common_face(generators[a], generators[b])) {
        std::ostringstream os;
        os << "generated_by: generators " << a << " and " << b << " do not meet in a common face";
        throw std::invalid_argument(os.str());
      }
  std::vector<LatticePolytope> all;
  std::set<std::vector<Point>> seen;
  for (const auto& g : generators) {
    if (seen.count(g.vertices())) continue;
    for (auto& f : faces(g))
      if (seen.insert(f.vertices()).second) all.push_back(std::move(f));
  }
  return PolytopalComplex::from_faces(ambient_dim, std::move(all));
}

PolytopalComplex subcomplex_where(const PolytopalComplex& c,
                                  const std::function<bool(const LatticePolytope&)>& keep) {
  std::vector<LatticePolytope> kept;
  for (const auto& f : c.faces())
    if (keep(f)) kept.push_back(f);
  return PolytopalComplex::from_faces(c.ambient_dim(), std::move(kept));
}

namespace {

std::string describe(const std::vector<Point>& pts) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    os << (i ? ", " : "") << "(";
    for (std::size_t j = 0; j < pts[i].size(); ++j) os << (j ? "," : "") << pts[i][j];
    os << ")";
  }
  os << "}";
  return os.str();
}

// Maximal pulling simplices of p as point lists.
std::vector<std::vector<Point>> pull_points(const LatticePolytope& p, const PointOrder& order) {
  const FaceLattice fl = face_lattice(p);
  std::vector<std::size_t> seq(fl.points.size());
  std::iota(seq.begin(), seq.end(), 0);
  std::sort(seq.begin(), seq.end(),
            [&](std::size_t a, std::size_t b) { return order.less(fl.points[a], fl.points[b]); });
  std::vector<std::size_t> rank(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) rank[seq[i]] = i;
  std::vector<std::vector<Point>> out;
  for (const auto& s : pull_maximal_simplices(fl, rank)) {
    std::vector<Point> pts;
    for (std::size_t q : s) pts.push_back(fl.points[q]);
    out.push_back(std::move(pts));
  }
  return out;
}

GeomSimplicialComplex assemble(std::size_t ambient_dim, const std::vector<std::vector<Point>>& simplices) {
  std::vector<Point> table;
  for (const auto& s : simplices) table.insert(table.end(), s.begin(), s.end());
  std::sort(table.begin(), table.end());
  table.erase(std::unique(table.begin(), table.end()), table.end());
  std::vector<std::vector<std::size_t>> gens;
  for (const auto& s : simplices) {
    std::vector<std::size_t> idx;
    for (const auto& p : s)
      idx.push_back(static_cast<std::size_t>(std::lower_bound(table.begin(), table.end(), p) - table.begin()));
    gens.push_back(std::move(idx));
  }
  return GeomSimplicialComplex(ambient_dim, std::move(table), gens);
}

}  // namespace

NotCompressedError::NotCompressedError(std::vector<Point> face_vertices)
    : std::runtime_error("face " + describe(face_vertices) + " is not compressed"), face_(std::move(face_vertices)) {}

GeomSimplicialComplex pull_polytope(const LatticePolytope& p, const PointOrder& order) {
  return assemble(p.ambient_dim(), pull_points(p, order));
}

GeomSimplicialComplex pull_complex(const PolytopalComplex& c, const PointOrder& order, const PullOptions& options) {
  std::vector<std::vector<Point>> all;
  for (std::size_t i : c.maximal()) {
    const LatticePolytope& face = c.faces()[i];
    if (options.check_compressed && !is_compressed(face, options.order_budget, options.seed))
      throw NotCompressedError(face.vertices());
    auto simplices = pull_points(face, order);
    all.insert(all.end(), std::make_move_iterator(simplices.begin()), std::make_move_iterator(simplices.end()));
  }
  return assemble(c.ambient_dim(), all);
}

RelativeTriangulation triangulate_relative(const RelativeComplex& c, const PointOrder& order,
                                           const PullOptions& options) {
  RelativeTriangulation out;
  out.total = pull_complex(c.total, order, options);
  const auto sub_cells = c.sub.maximal_faces();
  for (const auto& s : out.total.simplices()) {
    const auto pts = out.total.points_of(s);
    for (const auto& cell : sub_cells) {
      if (std::all_of(pts.begin(), pts.end(), [&](const Point& z) { return cell.contains(z); })) {
        out.sub.insert(s);
        break;
      }
    }
  }
  out.f_vector.assign(static_cast<std::size_t>(out.total.dim() + 1), 0);
  for (const auto& s : out.total.simplices())
    if (!out.sub.count(s)) ++out.f_vector[s.size() - 1];
  return out;
}

std::vector<std::int64_t> relative_f_vector(const RelativeComplex& c, const PointOrder& order,
                                            const PullOptions& options) {
  return triangulate_relative(c, order, options).f_vector;
}

std::vector<Point> relative_lattice_points(const RelativeComplex& c, std::int64_t k) {
  std::set<Point> inside;
  for (std::size_t i : c.total.maximal())
    for (auto& z : lattice_points(c.total.faces()[i], k)) inside.insert(std::move(z));
  std::vector<Point> out;
  for (const auto& z : inside) {
    bool removed = false;
    for (std::size_t i : c.sub.maximal())
      if (c.sub.faces()[i].contains(z, k)) {
        removed = true;
        break;
      }
    if (!removed) out.push_back(z);
  }
  return out;
}

Integer count_relative_points(const RelativeComplex& c, std::int64_t k) {
  return Integer(static_cast<unsigned long>(relative_lattice_points(c, k).size()));
}

}  // namespace cpoly
