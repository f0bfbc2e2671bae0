// Oriented multigraphs and brute-force counts of colorings, flows and tensions.

#pragma once

#include "cpoly/exact.hpp"

#include <string>
#include <vector>

namespace cpoly {

struct Edge {
  std::size_t tail = 0;
  std::size_t head = 0;
  bool is_loop() const { return tail == head; }
  bool operator==(const Edge&) const = default;
};

/// Vertices are labels; edges refer to vertices by index. Loops and parallel
/// edges are allowed.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertices, std::vector<Edge> edges);
  /// Vertices named "0".."n-1".
  static Graph with_vertices(std::size_t n, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t index_of(const std::string& label) const;  // throws std::out_of_range

  bool has_loop() const;
  std::size_t component_count() const;
  std::size_t indegree(std::size_t v) const;   // loops excluded
  std::size_t outdegree(std::size_t v) const;  // loops excluded

  /// The same graph with edge e reversed.
  Graph reversed(std::size_t e) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

/// |V| x |E|: +1 at the head, -1 at the tail, loop columns zero.
IntMatrix incidence_matrix(const Graph& g);

/// Fundamental cycles of a BFS spanning forest, then one unit vector per loop.
/// Each vector c satisfies A c = 0.
std::vector<std::vector<std::int64_t>> cycle_basis(const Graph& g);

/// Refuses enumerations above 2^34 states with std::length_error.
Integer chromatic_bf(const Graph& g, std::int64_t k);
Integer int_flow_bf(const Graph& g, std::int64_t k);
Integer mod_flow_bf(const Graph& g, std::int64_t k);
Integer int_tension_bf(const Graph& g, std::int64_t k);
Integer mod_tension_bf(const Graph& g, std::int64_t k);

}  // namespace cpoly
