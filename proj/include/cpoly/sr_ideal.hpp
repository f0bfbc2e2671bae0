// Abstract simplicial complexes, relative Stanley-Reisner ideals and their
// Hilbert functions, and the geometric realization of binomial-basis vectors.

#pragma once

#include "cpoly/complex.hpp"

#include <set>
#include <string>
#include <vector>

namespace cpoly {

using Face = std::vector<std::size_t>;  // sorted vertex indices

/// Subset-closed family of subsets of {0..n-1}. The void complex {} and the
/// complex {{}} are distinct: the first has no faces at all.
class AbstractComplex {
 public:
  AbstractComplex() = default;
  explicit AbstractComplex(std::size_t ground_size);
  explicit AbstractComplex(std::vector<std::string> labels);

  /// Closure of `generators`; a generator may be the empty face.
  static AbstractComplex generated(std::size_t ground_size, const std::vector<Face>& generators);

  void add_face(Face face);

  std::size_t ground_size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::set<Face>& faces() const { return faces_; }
  bool contains(const Face& face) const { return faces_.count(face) > 0; }
  bool is_void() const { return faces_.empty(); }
  /// -1 for {{}} and for the void complex.
  int dim() const;
  /// Counts of nonempty faces by dimension.
  std::vector<std::int64_t> f_vector() const;
  bool is_subcomplex_of(const AbstractComplex& other) const;

  bool operator==(const AbstractComplex& other) const { return faces_ == other.faces_; }

 private:
  std::vector<std::string> labels_;
  std::set<Face> faces_;
};

/// The pair sub subset of delta over a common ground set.
class RelativeSRIdeal {
 public:
  RelativeSRIdeal(AbstractComplex delta, AbstractComplex sub);
  const AbstractComplex& delta() const { return delta_; }
  const AbstractComplex& sub() const { return sub_; }
  /// Faces of delta not in sub, i.e. the supports of the monomials spanning the ideal.
  std::vector<Face> relative_faces() const;
  std::vector<std::int64_t> f_vector() const;

 private:
  AbstractComplex delta_;
  AbstractComplex sub_;
};

std::vector<Face> minimal_nonfaces(const AbstractComplex& delta);

/// C(n, i) for any integer n and i >= 0.
Integer binomial(const Integer& n, std::size_t i);

/// sum_i f_i C(k-1, i); at k = 0 this is sum_i (-1)^i f_i.
Integer hilbert_from_f(const std::vector<std::int64_t>& f, std::int64_t k);

/// Number of degree-k exponent vectors whose support is a face of delta and
/// not a face of sub, by direct enumeration.
Integer hilbert_by_enumeration(const RelativeSRIdeal& ideal, std::int64_t k);

/// Vertex sets of the simplices, plus the empty face when nonempty.
AbstractComplex comb(const GeomSimplicialComplex& delta);

/// The ideal of a relative triangulation: comb of the triangulation over comb
/// of the simplices lying in the subcomplex.
RelativeSRIdeal relative_sr_ideal(const RelativeTriangulation& t);

/// f_i disjoint closed unimodular i-simplices with their boundaries removed.
/// Simplex number t of dimension i is offset + conv{0, e_1, ..., e_i} with
/// offset 2t e_1, in ambient dimension (largest i with f_i > 0) + 1. Throws
/// std::invalid_argument for negative or non-integral entries.
RelativeComplex realize_polynomial(const std::vector<Rational>& f);
RelativeComplex realize_polynomial(const std::vector<std::int64_t>& f);

}  // namespace cpoly
