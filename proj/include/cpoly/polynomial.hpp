// Exact univariate polynomials kept in the monomial basis and in the basis
// C(k-1, i), i >= 0.

#pragma once

#include "cpoly/exact.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cpoly {

class BinomialPolynomial {
 public:
  /// The zero polynomial.
  BinomialPolynomial();
  static BinomialPolynomial from_monomial(std::vector<Rational> coeffs);
  static BinomialPolynomial from_binomial(std::vector<Rational> coeffs);

  /// Coefficients of k^0, k^1, ...; trailing zeros trimmed, at least one entry.
  const std::vector<Rational>& monomial() const { return monomial_; }
  /// f_0, f_1, ... with p(k) = sum_i f_i C(k-1, i); same length as monomial().
  const std::vector<Rational>& binomial() const { return binomial_; }
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }

  Rational operator()(const Rational& k) const;

  bool operator==(const BinomialPolynomial& other) const { return monomial_ == other.monomial_; }

 private:
  std::vector<Rational> monomial_;
  std::vector<Rational> binomial_;
};

using Sample = std::pair<std::int64_t, Integer>;

/// The polynomial of degree <= d through the samples. Needs at least d+1
/// distinct positive sample points; the lowest d+1 determine the polynomial and
/// the rest must agree, else std::domain_error.
BinomialPolynomial interpolate(std::vector<Sample> samples, std::size_t degree_bound);

/// f_i = (Delta^i p)(1).
std::vector<Rational> to_binomial_basis(const BinomialPolynomial& p);

/// Every binomial-basis coefficient is a non-negative integer.
bool is_realizable(const BinomialPolynomial& p);

Rational evaluate(const BinomialPolynomial& p, const Rational& k);

/// Parses "3", "-1/2".
Rational parse_rational(const std::string& text);

}  // namespace cpoly
