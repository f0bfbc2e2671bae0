#include "cpoly/normal_sr.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cpoly {

TermOrder TermOrder::parse(const std::string& name) {
  if (name == "grlex") return TermOrder(Kind::graded_lex);
  if (name == "grevlex") return TermOrder(Kind::graded_revlex);
  throw std::invalid_argument("unknown term order '" + name + "' (expected grlex or grevlex)");
}

std::string TermOrder::name() const { return kind_ == Kind::graded_lex ? "grlex" : "grevlex"; }

bool TermOrder::less(const Exponent& a, const Exponent& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("TermOrder: exponent length mismatch");
  const auto da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
  if (da != db) return da < db;
  if (kind_ == Kind::graded_lex) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

PointVariableTable::PointVariableTable(const PolytopalComplex& c) {
  std::set<Point> all;
  for (std::size_t i : c.maximal())
    for (const auto& p : c.faces()[i].lattice_points()) all.insert(p);
  points_.assign(all.begin(), all.end());
  u_ = IntMatrix(c.ambient_dim(), points_.size());
  for (std::size_t j = 0; j < points_.size(); ++j)
    for (std::size_t i = 0; i < c.ambient_dim(); ++i) u_(i, j) = static_cast<long>(points_[j][i]);
}

std::size_t PointVariableTable::index_of(const Point& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) throw std::out_of_range("PointVariableTable: point is not a variable");
  return static_cast<std::size_t>(it - points_.begin());
}

Point PointVariableTable::image(const Exponent& a) const {
  if (a.size() != points_.size()) throw std::invalid_argument("PointVariableTable: exponent length mismatch");
  std::vector<Integer> sum(u_.rows(), Integer(0));
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != 0)
      for (std::size_t i = 0; i < u_.rows(); ++i) sum[i] += u_(i, j) * static_cast<long>(a[j]);
  Point out;
  for (const auto& z : sum) out.push_back(to_int64(z));
  return out;
}

namespace {

PolytopalComplex lift(const PolytopalComplex& c, std::size_t ambient_dim) {
  std::vector<LatticePolytope> faces;
  for (const auto& f : c.faces()) {
    std::vector<Point> verts = f.vertices();
    for (auto& v : verts) v.push_back(1);
    faces.emplace_back(ambient_dim + 1, std::move(verts));
  }
  return PolytopalComplex::from_faces(ambient_dim + 1, std::move(faces));
}

std::string show(const Point& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

// All degree-k exponent vectors over `table` supported on the lattice points
// of `face` with image v.
void representations(const LatticePolytope& face, const PointVariableTable& table, const Point& v, std::int64_t k,
                     std::set<Exponent>& out) {
  const auto& pts = face.lattice_points();
  std::vector<std::size_t> var;
  for (const auto& p : pts) var.push_back(table.index_of(p));
  Exponent a(table.size(), 0);
  Point residual = v;

  auto is_zero = [](const Point& z) { return std::all_of(z.begin(), z.end(), [](std::int64_t x) { return x == 0; }); };
  auto recurse = [&](auto&& self, std::size_t j, std::int64_t remaining) -> void {
    if (remaining == 0) {
      if (is_zero(residual)) out.insert(a);
      return;
    }
    if (j == pts.size()) return;
    if (!face.contains(residual, remaining)) return;
    for (std::int64_t m = remaining; m >= 0; --m) {
      for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= m * pts[j][i];
      a[var[j]] = m;
      self(self, j + 1, remaining - m);
      a[var[j]] = 0;
      for (std::size_t i = 0; i < residual.size(); ++i) residual[i] += m * pts[j][i];
    }
  };
  recurse(recurse, 0, k);
}

}  // namespace

RelativeComplex homogenize(const RelativeComplex& c) {
  const std::size_t d = c.total.ambient_dim();
  return RelativeComplex{lift(c.total, d), lift(c.sub, d)};
}

bool is_homogenized(const PolytopalComplex& c) {
  for (const auto& f : c.faces())
    for (const auto& v : f.vertices())
      if (v.empty() || v.back() != 1) return false;
  return true;
}

bool polytopal_sr_membership(const Exponent& a, const PointVariableTable& table, const PolytopalComplex& c) {
  if (a.size() != table.size()) throw std::invalid_argument("polytopal_sr_membership: exponent length mismatch");
  std::vector<Point> support;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != 0) support.push_back(table.points()[j]);
  for (std::size_t i : c.maximal()) {
    const auto& face = c.faces()[i];
    if (std::all_of(support.begin(), support.end(), [&](const Point& p) { return face.contains(p); })) return false;
  }
  return true;
}

NormalHilbertResult hilbert_normal_witnessed(const RelativeComplex& c, std::int64_t k, const TermOrder& order) {
  if (k < 1) throw std::invalid_argument("hilbert_normal: k must be positive");
  if (!is_homogenized(c.total) || !is_homogenized(c.sub))
    throw std::invalid_argument("hilbert_normal: complex is not homogenized");
  for (std::size_t i : c.total.maximal()) {
    const auto& face = c.total.faces()[i];
    const std::int64_t bound = std::max(k, default_normality_bound(face));
    if (auto w = normality_witness(face, bound))
      throw NormalityError("face is not normal: " + show(w->point) + " in " + std::to_string(w->k) +
                           "P is not a sum of lattice points of P");
  }

  const PointVariableTable table(c.total);
  NormalHilbertResult result;
  for (const auto& v : relative_lattice_points(c, k)) {
    std::set<Exponent> reps;
    for (std::size_t i : c.total.maximal()) {
      const auto& face = c.total.faces()[i];
      if (face.contains(v, k)) representations(face, table, v, k, reps);
    }
    if (reps.empty())
      throw NormalityError("no degree-" + std::to_string(k) + " representation of lattice point " + show(v));
    const Exponent* best = &*reps.begin();
    for (const auto& a : reps)
      if (order.less(a, *best)) best = &a;
    for (const auto& a : reps)
      if (&a != best && !(order.less(*best, a) && !order.less(a, *best)))
        throw std::logic_error("hilbert_normal: term order does not single out a minimal representative");
    if (table.image(*best) != v || polytopal_sr_membership(*best, table, c.total))
      throw std::logic_error("hilbert_normal: witness fails verification at " + show(v));
    result.witnesses.push_back(NormalWitness{v, *best, reps.size()});
  }
  result.count = Integer(static_cast<unsigned long>(result.witnesses.size()));
  return result;
}

Integer hilbert_normal(const RelativeComplex& c, std::int64_t k, const TermOrder& order) {
  return hilbert_normal_witnessed(c, k, order).count;
}

}  // namespace cpoly
