// Relative polytopal complexes whose Ehrhart functions are the chromatic,
// flow and tension counting functions of a graph.

#pragma once

#include "cpoly/complex.hpp"
#include "cpoly/graph.hpp"

#include <string>
#include <vector>

namespace cpoly {

enum class Kind { chromatic, int_flow, mod_flow, int_tension, mod_tension };

const std::vector<Kind>& all_kinds();
/// "chromatic", "flow", "modflow", "tension", "modtension".
std::string kind_name(Kind kind);
Kind parse_kind(const std::string& name);  // throws std::invalid_argument

/// One nonempty cell: the label selecting it (sign vector, orthant or offset
/// vector), its open description and its closure.
struct Cell {
  std::vector<std::int64_t> label;
  LinearSystem open;
  LatticePolytope closed;
};

struct CellFamily {
  Kind kind;
  std::vector<Cell> cells;
  RelativeComplex complex;
};

/// Builds the cells of the given kind. Throws std::runtime_error if a cell has
/// a non-integral vertex.
CellFamily build_cells(Kind kind, const Graph& g);

RelativeComplex chromatic_complex(const Graph& g);
RelativeComplex int_flow_complex(const Graph& g);
RelativeComplex mod_flow_complex(const Graph& g);
RelativeComplex int_tension_complex(const Graph& g);
RelativeComplex mod_tension_complex(const Graph& g);
RelativeComplex construct(Kind kind, const Graph& g);

/// |V| for chromatic, |E|-|V|+c for flows, |V|-c for tensions.
std::size_t degree_bound(Kind kind, const Graph& g);

Integer brute_force(Kind kind, const Graph& g, std::int64_t k);

}  // namespace cpoly
