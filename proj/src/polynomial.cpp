#include "cpoly/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cpoly {

namespace {

// Also canonicalizes, since callers may pass unreduced fractions.
void trim(std::vector<Rational>& c) {
  for (auto& x : c) x.canonicalize();
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  if (c.empty()) c.emplace_back(0);
}

Rational horner(const std::vector<Rational>& c, const Rational& k) {
  Rational value = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) value = value * k + *it;
  return value;
}

// p(x) * (x - root)
void multiply_linear(std::vector<Rational>& p, const Rational& root) {
  p.emplace_back(0);
  for (std::size_t i = p.size() - 1; i > 0; --i) p[i] = p[i - 1] - root * p[i];
  p[0] = -root * p[0];
}

std::vector<Rational> binomial_to_monomial(const std::vector<Rational>& f) {
  std::vector<Rational> out(std::max<std::size_t>(f.size(), 1), Rational(0));
  std::vector<Rational> basis{Rational(1)};  // C(k-1, i) in monomial form
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) out[j] += f[i] * basis[j];
    multiply_linear(basis, Rational(static_cast<long>(i + 1)));
    for (auto& c : basis) c /= static_cast<long>(i + 1);
  }
  return out;
}

std::vector<Rational> monomial_to_binomial(const std::vector<Rational>& c) {
  const std::size_t n = c.size();
  std::vector<Rational> values;
  for (std::size_t j = 0; j < n; ++j) values.push_back(horner(c, Rational(static_cast<long>(j + 1))));
  std::vector<Rational> f;
  for (std::size_t i = 0; i < n; ++i) {
    f.push_back(values[0]);
    for (std::size_t j = 0; j + 1 < values.size(); ++j) values[j] = values[j + 1] - values[j];
    values.pop_back();
  }
  return f;
}

}  // namespace

BinomialPolynomial::BinomialPolynomial() : monomial_{Rational(0)}, binomial_{Rational(0)} {}

BinomialPolynomial BinomialPolynomial::from_monomial(std::vector<Rational> coeffs) {
  trim(coeffs);
  BinomialPolynomial p;
  p.binomial_ = monomial_to_binomial(coeffs);
  p.monomial_ = std::move(coeffs);
  return p;
}

BinomialPolynomial BinomialPolynomial::from_binomial(std::vector<Rational> coeffs) {
  trim(coeffs);
  return from_monomial(binomial_to_monomial(coeffs));
}

int BinomialPolynomial::degree() const {
  if (monomial_.size() == 1 && monomial_[0] == 0) return -1;
  return static_cast<int>(monomial_.size()) - 1;
}

Rational BinomialPolynomial::operator()(const Rational& k) const { return horner(monomial_, k); }

BinomialPolynomial interpolate(std::vector<Sample> samples, std::size_t degree_bound) {
  std::map<std::int64_t, Integer> by_k;
  for (const auto& [k, value] : samples) {
    if (k < 1) throw std::invalid_argument("interpolate: sample points must be positive");
    auto [it, inserted] = by_k.emplace(k, value);
    if (!inserted && it->second != value)
      throw std::domain_error("interpolate: conflicting values at k = " + std::to_string(k));
  }
  if (by_k.size() < degree_bound + 1)
    throw std::invalid_argument("interpolate: need " + std::to_string(degree_bound + 1) + " distinct samples");

  std::vector<std::pair<Rational, Rational>> nodes;
  for (const auto& [k, value] : by_k) {
    if (nodes.size() == degree_bound + 1) break;
    nodes.emplace_back(Rational(static_cast<long>(k)), Rational(value));
  }
  std::vector<Rational> coeffs(degree_bound + 1, Rational(0));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == i) continue;
      multiply_linear(basis, nodes[j].first);
      denom *= nodes[i].first - nodes[j].first;
    }
    const Rational scale = nodes[i].second / denom;
    for (std::size_t t = 0; t < basis.size(); ++t) coeffs[t] += scale * basis[t];
  }
  BinomialPolynomial p = BinomialPolynomial::from_monomial(std::move(coeffs));
  for (const auto& [k, value] : by_k)
    if (p(Rational(static_cast<long>(k))) != Rational(value))
      throw std::domain_error("not a polynomial of claimed degree " + std::to_string(degree_bound) +
                              ": mismatch at k = " + std::to_string(k));
  return p;
}

std::vector<Rational> to_binomial_basis(const BinomialPolynomial& p) { return p.binomial(); }

bool is_realizable(const BinomialPolynomial& p) {
  return std::all_of(p.binomial().begin(), p.binomial().end(),
                     [](const Rational& f) { return f.get_den() == 1 && f >= 0; });
}

Rational evaluate(const BinomialPolynomial& p, const Rational& k) { return p(k); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("not a rational number: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace cpoly
