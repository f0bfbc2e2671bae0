#include "cpoly/exact.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace cpoly {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

namespace {

template <class T>
void swap_rows(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

template <class T>
void swap_cols(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst += factor * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += factor * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += factor * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t t = 0;

  for (; t < limit; ++t) {
    bool have_pivot = false;
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = 0, pj = 0;
      bool found = false;
      for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
          if (a(i, j) == 0) continue;
          if (!found || abs(a(i, j)) < abs(a(pi, pj))) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) break;
      have_pivot = true;
      swap_rows(a, t, pi);
      swap_rows(left, t, pi);
      swap_cols(a, t, pj);
      swap_cols(right, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        Integer neg = -q;
        add_row(a, i, t, neg);
        add_row(left, i, t, neg);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        Integer neg = -q;
        add_col(a, j, t, neg);
        add_col(right, j, t, neg);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every later entry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < a.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          Integer r = a(i, j) % a(t, t);
          if (r != 0) {
            add_row(a, t, i, Integer(1));
            add_row(left, t, i, Integer(1));
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (!have_pivot) break;
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < a.cols(); ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < left.cols(); ++j) left(t, j) = -left(t, j);
    }
  }
  return SmithForm{std::move(a), std::move(left), std::move(right), t};
}

Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      swap_rows(m, k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = num / prev;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t ncols_to_pivot) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols_to_pivot && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, r, p);
    Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RatMatrix m) { return rref(m, m.cols()).size(); }

std::vector<std::vector<Integer>> integer_kernel_basis(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  std::vector<std::vector<Integer>> basis;
  for (std::size_t j = snf.rank; j < m.cols(); ++j) basis.push_back(snf.right.col(j));
  return basis;
}

std::optional<AffineSolution> solve_rational(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_rational: dimension mismatch");
  const std::size_t n = a.cols();
  RatMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug, n);
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    if (aug(i, n) != 0) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    sol.particular[pivots[i]] = aug(i, n);
    is_pivot[pivots[i]] = true;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(n, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug(i, f);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

std::optional<RatVector> solve_square(RatMatrix a, RatVector b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_square: dimension mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      swap_rows(a, c, p);
      std::swap(b[c], b[p]);
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      b[i] -= f * b[c];
    }
  }
  RatVector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational s = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= a(ii, j) * x[j];
    x[ii] = s / a(ii, ii);
  }
  return x;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Integer> primitive_integer(const RatVector& v) {
  Integer lcm = 1;
  for (const Rational& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * lcm;
    out[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1)
    for (Integer& x : out) x /= g;
  return out;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

void LinearSystem::add_equality(RatVector coeffs, Rational rhs) {
  if (coeffs.size() != dim) throw std::invalid_argument("LinearSystem: coefficient length mismatch");
  equalities.push_back({std::move(coeffs), std::move(rhs)});
}

void LinearSystem::add_weak(RatVector coeffs, Rational rhs) {
  if (coeffs.size() != dim) throw std::invalid_argument("LinearSystem: coefficient length mismatch");
  weak.push_back({std::move(coeffs), std::move(rhs)});
}

void LinearSystem::add_strict(RatVector coeffs, Rational rhs) {
  if (coeffs.size() != dim) throw std::invalid_argument("LinearSystem: coefficient length mismatch");
  strict.push_back({std::move(coeffs), std::move(rhs)});
}

bool LinearSystem::satisfied_by(const RatVector& x) const {
  if (x.size() != dim) return false;
  for (const auto& c : equalities)
    if (dot(c.coeffs, x) != c.rhs) return false;
  for (const auto& c : weak)
    if (dot(c.coeffs, x) > c.rhs) return false;
  for (const auto& c : strict)
    if (dot(c.coeffs, x) >= c.rhs) return false;
  return true;
}

LinearSystem LinearSystem::closure() const {
  LinearSystem out = *this;
  out.weak.insert(out.weak.end(), out.strict.begin(), out.strict.end());
  out.strict.clear();
  return out;
}

namespace {

// x = particular + sum_j y_j kernel[j]; inequality rows rewritten in y.
struct Reduced {
  AffineSolution param;
  std::vector<Constraint> weak;
  std::vector<Constraint> strict;
};

std::optional<Reduced> eliminate_equalities(const LinearSystem& sys) {
  Reduced red;
  if (sys.equalities.empty()) {
    red.param.particular.assign(sys.dim, Rational(0));
    for (std::size_t j = 0; j < sys.dim; ++j) {
      RatVector e(sys.dim, Rational(0));
      e[j] = 1;
      red.param.kernel.push_back(std::move(e));
    }
  } else {
    RatMatrix a(sys.equalities.size(), sys.dim);
    RatVector b(sys.equalities.size());
    for (std::size_t i = 0; i < sys.equalities.size(); ++i) {
      for (std::size_t j = 0; j < sys.dim; ++j) a(i, j) = sys.equalities[i].coeffs[j];
      b[i] = sys.equalities[i].rhs;
    }
    auto sol = solve_rational(a, b);
    if (!sol) return std::nullopt;
    red.param = std::move(*sol);
  }
  auto rewrite = [&](const Constraint& c) {
    Constraint out;
    out.coeffs.reserve(red.param.kernel.size());
    for (const RatVector& k : red.param.kernel) out.coeffs.push_back(dot(c.coeffs, k));
    out.rhs = c.rhs - dot(c.coeffs, red.param.particular);
    return out;
  };
  for (const auto& c : sys.weak) red.weak.push_back(rewrite(c));
  for (const auto& c : sys.strict) red.strict.push_back(rewrite(c));
  return red;
}

RatVector lift(const AffineSolution& param, const RatVector& y) {
  RatVector x = param.particular;
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j] == 0) continue;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[j] * param.kernel[j][i];
  }
  return x;
}

// maximize c.z subject to rows[i].z <= b[i], z >= 0, by the two-phase tableau
// method with Bland's rule. nullopt when infeasible.
std::optional<RatVector> simplex_maximize(const std::vector<RatVector>& rows, const RatVector& b,
                                          const RatVector& c) {
  const std::size_t m = rows.size();
  const std::size_t n = c.size();
  const std::size_t art = n + m;
  const std::size_t width = n + m + 1;  // rhs stored at index `width`
  std::vector<RatVector> t(m, RatVector(width + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = rows[i][j];
    t[i][n + i] = 1;
    t[i][art] = -1;
    t[i][width] = b[i];
    basis[i] = n + i;
  }
  RatVector obj(width + 1, Rational(0));

  auto pivot = [&](std::size_t r, std::size_t e) {
    Rational inv = 1 / t[r][e];
    for (Rational& x : t[r]) x *= inv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][e] == 0) continue;
      Rational f = t[i][e];
      for (std::size_t j = 0; j <= width; ++j) t[i][j] -= f * t[r][j];
    }
    if (obj[e] != 0) {
      Rational f = obj[e];
      for (std::size_t j = 0; j <= width; ++j) obj[j] -= f * t[r][j];
    }
    basis[r] = e;
  };

  auto run = [&](std::size_t allowed) {
    for (;;) {
      std::size_t e = allowed;
      for (std::size_t j = 0; j < allowed; ++j)
        if (obj[j] > 0) {
          e = j;
          break;
        }
      if (e == allowed) return;
      std::size_t r = t.size();
      Rational best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][e] <= 0) continue;
        Rational ratio = t[i][width] / t[i][e];
        if (r == t.size() || ratio < best || (ratio == best && basis[i] < basis[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r == t.size()) throw std::logic_error("simplex: unbounded objective");
      pivot(r, e);
    }
  };

  std::size_t most_negative = m;
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0 && (most_negative == m || b[i] < b[most_negative])) most_negative = i;

  if (most_negative != m) {
    obj[art] = -1;
    pivot(most_negative, art);
    run(width);
    for (std::size_t i = 0; i < t.size(); ++i)
      if (basis[i] == art && t[i][width] != 0) return std::nullopt;
    if (obj[width] != 0) return std::nullopt;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (basis[i] != art) continue;
      std::size_t j = 0;
      while (j < art && t[i][j] == 0) ++j;
      if (j < art) {
        pivot(i, j);
      } else {
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
      break;
    }
  }
  for (auto& row : t) row[art] = 0;

  std::fill(obj.begin(), obj.end(), Rational(0));
  for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];
  for (std::size_t i = 0; i < t.size(); ++i) {
    Rational cb = obj[basis[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j <= width; ++j) obj[j] -= cb * t[i][j];
  }
  run(art);

  RatVector z(n, Rational(0));
  for (std::size_t i = 0; i < t.size(); ++i)
    if (basis[i] < n) z[basis[i]] = t[i][width];
  return z;
}

}  // namespace

std::optional<RatVector> lp_feasible(const LinearSystem& sys) {
  auto red = eliminate_equalities(sys);
  if (!red) return std::nullopt;
  const std::size_t m = red->param.kernel.size();

  if (m == 0) {
    const RatVector& x = red->param.particular;
    if (sys.satisfied_by(x)) return x;
    return std::nullopt;
  }

  // Variables: y = u - w with u, w >= 0, plus the margin eps when needed.
  const bool margin = !red->strict.empty();
  const std::size_t n = 2 * m + (margin ? 1 : 0);
  std::vector<RatVector> rows;
  RatVector rhs;
  auto push = [&](const Constraint& c, bool with_margin) {
    RatVector row(n, Rational(0));
    for (std::size_t j = 0; j < m; ++j) {
      row[j] = c.coeffs[j];
      row[m + j] = -c.coeffs[j];
    }
    if (with_margin) row[2 * m] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(c.rhs);
  };
  for (const auto& c : red->weak) push(c, false);
  for (const auto& c : red->strict) push(c, true);
  RatVector objective(n, Rational(0));
  if (margin) {
    RatVector cap(n, Rational(0));
    cap[2 * m] = 1;
    rows.push_back(std::move(cap));
    rhs.push_back(Rational(1));
    objective[2 * m] = 1;
  }

  auto z = simplex_maximize(rows, rhs, objective);
  if (!z) return std::nullopt;
  if (margin && (*z)[2 * m] <= 0) return std::nullopt;
  RatVector y(m);
  for (std::size_t j = 0; j < m; ++j) y[j] = (*z)[j] - (*z)[m + j];
  RatVector x = lift(red->param, y);
  if (!sys.satisfied_by(x)) throw std::logic_error("lp_feasible: witness fails verification");
  return x;
}

bool fourier_motzkin_feasible(const LinearSystem& sys) {
  auto red = eliminate_equalities(sys);
  if (!red) return false;
  const std::size_t m = red->param.kernel.size();

  // normalized direction -> (tightest rhs, strict?)
  using Row = std::map<RatVector, std::pair<Rational, bool>>;
  Row rows;
  bool infeasible = false;
  auto insert = [&](RatVector coeffs, Rational rhs, bool strict) {
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
    if (lead == coeffs.size()) {
      if (strict ? !(rhs > 0) : !(rhs >= 0)) infeasible = true;
      return;
    }
    Rational scale = abs(coeffs[lead]);
    for (Rational& x : coeffs) x /= scale;
    rhs /= scale;
    auto it = rows.find(coeffs);
    if (it == rows.end()) {
      rows.emplace(std::move(coeffs), std::make_pair(rhs, strict));
    } else if (rhs < it->second.first || (rhs == it->second.first && strict)) {
      it->second = {rhs, strict};
    }
  };
  for (const auto& c : red->weak) insert(c.coeffs, c.rhs, false);
  for (const auto& c : red->strict) insert(c.coeffs, c.rhs, true);

  for (std::size_t var = m; var-- > 0 && !infeasible;) {
    std::vector<std::pair<RatVector, std::pair<Rational, bool>>> pos, neg;
    Row next;
    rows.swap(next);
    for (auto& [coeffs, bound] : next) {
      if (coeffs[var] > 0)
        pos.emplace_back(coeffs, bound);
      else if (coeffs[var] < 0)
        neg.emplace_back(coeffs, bound);
      else
        insert(coeffs, bound.first, bound.second);
    }
    for (const auto& [pc, pb] : pos)
      for (const auto& [nc, nb] : neg) {
        Rational wp = -nc[var];
        Rational wn = pc[var];
        RatVector combo(m);
        for (std::size_t j = 0; j < m; ++j) combo[j] = wp * pc[j] + wn * nc[j];
        combo[var] = 0;
        insert(std::move(combo), wp * pb.first + wn * nb.first, pb.second || nb.second);
      }
  }
  return !infeasible;
}

std::vector<RatVector> enumerate_vertices(const LinearSystem& sys) {
  if (!sys.strict.empty()) throw std::invalid_argument("enumerate_vertices: strict constraints not supported");
  auto red = eliminate_equalities(sys);
  if (!red) return {};
  const std::size_t m = red->param.kernel.size();
  if (m == 0) {
    if (sys.satisfied_by(red->param.particular)) return {red->param.particular};
    return {};
  }
  const auto& rows = red->weak;
  if (rows.size() < m) return {};

  std::set<RatVector> found;
  std::vector<std::size_t> pick(m);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    RatMatrix a(m, m);
    RatVector b(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) a(i, j) = rows[pick[i]].coeffs[j];
      b[i] = rows[pick[i]].rhs;
    }
    if (auto y = solve_square(a, b)) {
      bool ok = true;
      for (const auto& r : rows)
        if (dot(r.coeffs, *y) > r.rhs) {
          ok = false;
          break;
        }
      if (ok) found.insert(lift(red->param, *y));
    }
    // next combination
    std::size_t i = m;
    while (i > 0 && pick[i - 1] == rows.size() - m + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

}  // namespace cpoly
