// Polytopal Stanley-Reisner ideals for complexes with normal faces: counting
// valid monomials through their images under the point matrix U.

#pragma once

#include "cpoly/complex.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cpoly {

using Exponent = std::vector<std::int64_t>;

/// Graded term orders over the variable order 0 < 1 < ... < n-1.
class TermOrder {
 public:
  enum class Kind { graded_lex, graded_revlex };

  TermOrder() = default;
  explicit TermOrder(Kind kind) : kind_(kind) {}
  static TermOrder parse(const std::string& name);  // "grlex" or "grevlex"

  Kind kind() const { return kind_; }
  std::string name() const;
  bool less(const Exponent& a, const Exponent& b) const;

 private:
  Kind kind_ = Kind::graded_revlex;
};

/// The lattice points of a complex as variables, in lexicographic order, and
/// the matrix U having them as columns.
class PointVariableTable {
 public:
  explicit PointVariableTable(const PolytopalComplex& c);

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::size_t index_of(const Point& p) const;  // throws std::out_of_range
  const IntMatrix& matrix() const { return u_; }
  /// U a.
  Point image(const Exponent& a) const;

 private:
  std::vector<Point> points_;
  IntMatrix u_;
};

/// Every face P replaced by P x {1}.
RelativeComplex homogenize(const RelativeComplex& c);

bool is_homogenized(const PolytopalComplex& c);

/// x^a in I_C: no face of C contains all points in supp(a).
bool polytopal_sr_membership(const Exponent& a, const PointVariableTable& table, const PolytopalComplex& c);

/// Raised when a lattice point has no representation as a sum of k lattice
/// points of one face.
class NormalityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NormalWitness {
  Point point;        // v in k(|C| minus |C'|)
  Exponent exponent;  // the order-minimal a with U a = v, supp(a) in a face
  std::size_t representations = 0;
};

struct NormalHilbertResult {
  Integer count = 0;
  std::vector<NormalWitness> witnesses;
};

/// Number of valid monomials of degree k. Requires a homogenized complex whose
/// maximal faces are normal (checked up to max(k, default bound)); every
/// counted lattice point gets an explicit order-minimal witness.
NormalHilbertResult hilbert_normal_witnessed(const RelativeComplex& c, std::int64_t k, const TermOrder& order = {});

Integer hilbert_normal(const RelativeComplex& c, std::int64_t k, const TermOrder& order = {});

}  // namespace cpoly
