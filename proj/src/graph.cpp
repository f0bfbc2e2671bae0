#include "cpoly/graph.hpp"

#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace cpoly {

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (const auto& e : edges_)
    if (e.tail >= vertices_.size() || e.head >= vertices_.size())
      throw std::invalid_argument("Graph: edge endpoint is not a vertex");
}

Graph Graph::with_vertices(std::size_t n, std::vector<Edge> edges) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Graph(std::move(labels), std::move(edges));
}

std::size_t Graph::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return i;
  throw std::out_of_range("Graph: unknown vertex '" + label + "'");
}

bool Graph::has_loop() const {
  for (const auto& e : edges_)
    if (e.is_loop()) return true;
  return false;
}

std::size_t Graph::component_count() const {
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = vertices_.size();
  for (const auto& e : edges_) {
    const std::size_t a = find(e.tail), b = find(e.head);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

std::size_t Graph::indegree(std::size_t v) const {
  std::size_t n = 0;
  for (const auto& e : edges_)
    if (e.head == v && !e.is_loop()) ++n;
  return n;
}

std::size_t Graph::outdegree(std::size_t v) const {
  std::size_t n = 0;
  for (const auto& e : edges_)
    if (e.tail == v && !e.is_loop()) ++n;
  return n;
}

Graph Graph::reversed(std::size_t e) const {
  Graph g = *this;
  std::swap(g.edges_.at(e).tail, g.edges_.at(e).head);
  return g;
}

IntMatrix incidence_matrix(const Graph& g) {
  IntMatrix a(g.vertex_count(), g.edge_count());
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edges()[j];
    if (e.is_loop()) continue;
    a(e.head, j) = 1;
    a(e.tail, j) = -1;
  }
  return a;
}

std::vector<std::vector<std::int64_t>> cycle_basis(const Graph& g) {
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t j = 0; j < m; ++j) {
    const Edge& e = g.edges()[j];
    if (e.is_loop()) continue;
    incident[e.tail].push_back(j);
    incident[e.head].push_back(j);
  }
  // BFS forest; parent_edge[v] is the tree edge towards the root.
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_edge(n, none), depth(n, 0);
  std::vector<bool> seen(n, false), tree(m, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t j : incident[v]) {
        const Edge& e = g.edges()[j];
        const std::size_t w = e.tail == v ? e.head : e.tail;
        if (seen[w]) continue;
        seen[w] = true;
        parent_edge[w] = j;
        depth[w] = depth[v] + 1;
        tree[j] = true;
        queue.push_back(w);
      }
    }
  }
  auto parent = [&](std::size_t v) {
    const Edge& e = g.edges()[parent_edge[v]];
    return e.tail == v ? e.head : e.tail;
  };

  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t j = 0; j < m; ++j) {
    const Edge& e = g.edges()[j];
    if (tree[j] || e.is_loop()) continue;
    // Traverse e from tail to head, then return along tree paths head -> lca -> tail.
    std::vector<std::int64_t> c(m, 0);
    c[j] = 1;
    std::size_t a = e.head, b = e.tail;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        const std::size_t t = parent_edge[a];
        c[t] += g.edges()[t].tail == a ? 1 : -1;
        a = parent(a);
      } else {
        const std::size_t t = parent_edge[b];
        c[t] += g.edges()[t].head == b ? 1 : -1;
        b = parent(b);
      }
    }
    basis.push_back(std::move(c));
  }
  for (std::size_t j = 0; j < m; ++j)
    if (g.edges()[j].is_loop()) {
      std::vector<std::int64_t> c(m, 0);
      c[j] = 1;
      basis.push_back(std::move(c));
    }

  const IntMatrix a = incidence_matrix(g);
  for (const auto& c : basis)
    for (std::size_t v = 0; v < n; ++v) {
      Integer s = 0;
      for (std::size_t j = 0; j < m; ++j) s += a(v, j) * static_cast<long>(c[j]);
      if (s != 0) throw std::logic_error("cycle_basis: vector is not a cycle");
    }
  return basis;
}

namespace {

void guard_states(std::size_t positions, std::int64_t values, const char* what) {
  if (positions == 0 || values <= 1) return;
  if (static_cast<double>(positions) * std::log2(static_cast<double>(values)) > 34.0)
    throw std::length_error(std::string(what) + ": enumeration exceeds 2^34 states");
}

// Calls visit(x) for every x in values^n (odometer order) and counts hits.
template <class Visit>
Integer enumerate(std::size_t n, const std::vector<std::int64_t>& values, Visit&& visit) {
  Integer count = 0;
  if (values.empty()) return n == 0 && visit(std::vector<std::int64_t>{}) ? 1 : 0;
  std::vector<std::size_t> digit(n, 0);
  std::vector<std::int64_t> x(n, values[0]);
  while (true) {
    if (visit(x)) ++count;
    std::size_t i = 0;
    while (i < n && ++digit[i] == values.size()) {
      digit[i] = 0;
      x[i] = values[0];
      ++i;
    }
    if (i == n) break;
    x[i] = values[digit[i]];
  }
  return count;
}

std::vector<std::int64_t> nonzero_symmetric(std::int64_t k) {
  std::vector<std::int64_t> v;
  for (std::int64_t x = -k + 1; x <= k - 1; ++x)
    if (x != 0) v.push_back(x);
  return v;
}

std::vector<std::int64_t> nonzero_residues(std::int64_t k) {
  std::vector<std::int64_t> v;
  for (std::int64_t x = 1; x <= k - 1; ++x) v.push_back(x);
  return v;
}

std::int64_t mod(std::int64_t a, std::int64_t k) {
  const std::int64_t r = a % k;
  return r < 0 ? r + k : r;
}

void require_positive(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("counting oracle: k must be positive");
}

// sum_j row[j] x[j] over sparse rows.
using SparseRow = std::vector<std::pair<std::size_t, std::int64_t>>;

std::vector<SparseRow> vertex_rows(const Graph& g) {
  std::vector<SparseRow> rows(g.vertex_count());
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edges()[j];
    if (e.is_loop()) continue;
    rows[e.head].emplace_back(j, 1);
    rows[e.tail].emplace_back(j, -1);
  }
  return rows;
}

std::vector<SparseRow> cycle_rows(const Graph& g) {
  std::vector<SparseRow> rows;
  for (const auto& c : cycle_basis(g)) {
    SparseRow r;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] != 0) r.emplace_back(j, c[j]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::int64_t apply(const SparseRow& r, const std::vector<std::int64_t>& x) {
  std::int64_t s = 0;
  for (const auto& [j, c] : r) s += c * x[j];
  return s;
}

Integer count_kernel(const Graph& g, const std::vector<SparseRow>& rows, const std::vector<std::int64_t>& values,
                     std::int64_t modulus, const char* what) {
  guard_states(g.edge_count(), static_cast<std::int64_t>(values.size()), what);
  if (g.edge_count() == 0) return 1;
  return enumerate(g.edge_count(), values, [&](const std::vector<std::int64_t>& x) {
    for (const auto& r : rows) {
      const std::int64_t s = apply(r, x);
      if (modulus ? mod(s, modulus) != 0 : s != 0) return false;
    }
    return true;
  });
}

}  // namespace

Integer chromatic_bf(const Graph& g, std::int64_t k) {
  require_positive(k);
  if (g.has_loop()) return 0;
  guard_states(g.vertex_count(), k, "chromatic_bf");
  std::vector<std::int64_t> colors(static_cast<std::size_t>(k));
  std::iota(colors.begin(), colors.end(), 0);
  return enumerate(g.vertex_count(), colors, [&](const std::vector<std::int64_t>& x) {
    for (const auto& e : g.edges())
      if (x[e.tail] == x[e.head]) return false;
    return true;
  });
}

Integer int_flow_bf(const Graph& g, std::int64_t k) {
  require_positive(k);
  return count_kernel(g, vertex_rows(g), nonzero_symmetric(k), 0, "int_flow_bf");
}

Integer mod_flow_bf(const Graph& g, std::int64_t k) {
  require_positive(k);
  return count_kernel(g, vertex_rows(g), nonzero_residues(k), k, "mod_flow_bf");
}

Integer int_tension_bf(const Graph& g, std::int64_t k) {
  require_positive(k);
  return count_kernel(g, cycle_rows(g), nonzero_symmetric(k), 0, "int_tension_bf");
}

Integer mod_tension_bf(const Graph& g, std::int64_t k) {
  require_positive(k);
  return count_kernel(g, cycle_rows(g), nonzero_residues(k), k, "mod_tension_bf");
}

}  // namespace cpoly
