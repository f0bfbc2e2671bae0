#include "cpoly/sr_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace cpoly {

AbstractComplex::AbstractComplex(std::size_t ground_size) {
  labels_.reserve(ground_size);
  for (std::size_t i = 0; i < ground_size; ++i) labels_.push_back(std::to_string(i));
}

AbstractComplex::AbstractComplex(std::vector<std::string> labels) : labels_(std::move(labels)) {}

AbstractComplex AbstractComplex::generated(std::size_t ground_size, const std::vector<Face>& generators) {
  AbstractComplex c(ground_size);
  for (const auto& g : generators) c.add_face(g);
  return c;
}

void AbstractComplex::add_face(Face face) {
  std::sort(face.begin(), face.end());
  face.erase(std::unique(face.begin(), face.end()), face.end());
  for (std::size_t v : face)
    if (v >= labels_.size()) throw std::out_of_range("AbstractComplex: vertex outside the ground set");
  if (faces_.count(face)) return;
  const std::size_t n = face.size();
  if (n >= 63) throw std::length_error("AbstractComplex: face too large");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Face s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) s.push_back(face[i]);
    faces_.insert(std::move(s));
  }
}

int AbstractComplex::dim() const {
  int d = -1;
  for (const auto& f : faces_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::vector<std::int64_t> AbstractComplex::f_vector() const {
  std::vector<std::int64_t> f(static_cast<std::size_t>(dim() + 1), 0);
  for (const auto& s : faces_)
    if (!s.empty()) ++f[s.size() - 1];
  return f;
}

bool AbstractComplex::is_subcomplex_of(const AbstractComplex& other) const {
  return std::includes(other.faces_.begin(), other.faces_.end(), faces_.begin(), faces_.end());
}

RelativeSRIdeal::RelativeSRIdeal(AbstractComplex delta, AbstractComplex sub)
    : delta_(std::move(delta)), sub_(std::move(sub)) {
  if (!sub_.is_subcomplex_of(delta_)) throw std::invalid_argument("RelativeSRIdeal: sub is not a subcomplex");
}

std::vector<Face> RelativeSRIdeal::relative_faces() const {
  std::vector<Face> out;
  for (const auto& f : delta_.faces())
    if (!sub_.contains(f)) out.push_back(f);
  return out;
}

std::vector<std::int64_t> RelativeSRIdeal::f_vector() const {
  std::vector<std::int64_t> f(static_cast<std::size_t>(delta_.dim() + 1), 0);
  for (const auto& s : relative_faces())
    if (!s.empty()) ++f[s.size() - 1];
  return f;
}

std::vector<Face> minimal_nonfaces(const AbstractComplex& delta) {
  if (delta.is_void()) return {Face{}};
  // A minimal non-face minus any vertex is a face, so it is some face plus one vertex.
  std::set<Face> out;
  for (const auto& f : delta.faces()) {
    for (std::size_t v = 0; v < delta.ground_size(); ++v) {
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      Face s = f;
      s.insert(std::upper_bound(s.begin(), s.end(), v), v);
      if (delta.contains(s) || out.count(s)) continue;
      bool minimal = true;
      for (std::size_t i = 0; i < s.size() && minimal; ++i) {
        Face t = s;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
        minimal = delta.contains(t);
      }
      if (minimal) out.insert(std::move(s));
    }
  }
  return {out.begin(), out.end()};
}

Integer binomial(const Integer& n, std::size_t i) {
  Integer num = 1;
  Integer den = 1;
  for (std::size_t j = 0; j < i; ++j) {
    num *= n - static_cast<unsigned long>(j);
    den *= static_cast<unsigned long>(j + 1);
  }
  return num / den;
}

Integer hilbert_from_f(const std::vector<std::int64_t>& f, std::int64_t k) {
  Integer total = 0;
  const Integer top = Integer(static_cast<long>(k)) - 1;
  for (std::size_t i = 0; i < f.size(); ++i) total += Integer(static_cast<long>(f[i])) * binomial(top, i);
  return total;
}

namespace {

struct MonomialCounter {
  const RelativeSRIdeal& ideal;
  std::size_t n;
  Face support;
  Integer count = 0;

  void run(std::size_t var, std::int64_t remaining) {
    if (var == n) {
      if (remaining == 0 && !ideal.sub().contains(support)) ++count;
      return;
    }
    run(var + 1, remaining);
    if (remaining == 0) return;
    support.push_back(var);
    if (ideal.delta().contains(support))
      for (std::int64_t e = 1; e <= remaining; ++e) run(var + 1, remaining - e);
    support.pop_back();
  }
};

}  // namespace

Integer hilbert_by_enumeration(const RelativeSRIdeal& ideal, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("hilbert_by_enumeration: negative degree");
  if (!ideal.delta().contains(Face{})) return 0;
  MonomialCounter counter{ideal, ideal.delta().ground_size(), {}, 0};
  counter.run(0, k);
  return counter.count;
}

AbstractComplex comb(const GeomSimplicialComplex& delta) {
  AbstractComplex c(delta.vertices().size());
  for (const auto& s : delta.simplices()) c.add_face(s);
  return c;
}

RelativeSRIdeal relative_sr_ideal(const RelativeTriangulation& t) {
  AbstractComplex sub(t.total.vertices().size());
  for (const auto& s : t.sub) sub.add_face(s);
  return RelativeSRIdeal(comb(t.total), std::move(sub));
}

RelativeComplex realize_polynomial(const std::vector<Rational>& f) {
  std::vector<std::int64_t> counts;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Rational x = f[i];
    x.canonicalize();
    if (x.get_den() != 1)
      throw std::invalid_argument("not realizable: f_" + std::to_string(i) + " = " + x.get_str() +
                                  " is not an integer");
    if (x < 0)
      throw std::invalid_argument("not realizable: f_" + std::to_string(i) + " = " + f[i].get_str() +
                                  " is negative");
    if (!x.get_num().fits_slong_p()) throw std::invalid_argument("realize_polynomial: coefficient too large");
    counts.push_back(x.get_num().get_si());
  }
  std::size_t top = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] > 0) top = i;
  const std::size_t d = top + 1;

  std::vector<LatticePolytope> simplices;
  std::set<std::vector<Point>> generators;
  std::int64_t t = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (std::int64_t j = 0; j < counts[i]; ++j, ++t) {
      std::vector<Point> verts;
      Point origin(d, 0);
      origin[0] = 2 * t;
      verts.push_back(origin);
      for (std::size_t a = 0; a < i; ++a) {
        Point p = origin;
        p[a] += 1;
        verts.push_back(p);
      }
      simplices.emplace_back(d, verts);
      generators.insert(simplices.back().vertices());
    }
  }
  RelativeComplex out;
  out.total = generated_by(d, simplices);
  out.sub = subcomplex_where(out.total, [&](const LatticePolytope& p) { return !generators.count(p.vertices()); });
  return out;
}

RelativeComplex realize_polynomial(const std::vector<std::int64_t>& f) {
  std::vector<Rational> q;
  for (auto x : f) q.emplace_back(static_cast<long>(x));
  return realize_polynomial(q);
}

}  // namespace cpoly
