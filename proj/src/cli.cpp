#include "cpoly/cli.hpp"

#include "cpoly/normal_sr.hpp"
#include "cpoly/report.hpp"
#include "cpoly/sr_ideal.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cpoly {

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string show(const Point& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void write_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << j.dump(2) << "\n";
}

std::vector<Rational> parse_coeffs(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (out.empty()) throw InputError("--coeffs: no coefficients given");
  return out;
}

PullOptions pull_options(std::uint64_t orders, std::uint64_t seed) {
  PullOptions p;
  p.order_budget = orders;
  p.seed = seed;
  return p;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting polynomials of graphs as Ehrhart and Hilbert functions", "cpoly"};
  app.require_subcommand(1);
  bool as_json = false;
  bool timing = false;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_flag("--timing", timing, "Include timings in reports");

  std::string kind_name_arg, graph_path, method = "all", out_path, complex_path, polytope_path, order_name,
                                         coeffs;
  std::int64_t kmax = 0, k = 0;
  std::uint64_t orders = 50, seed = 0;

  auto* poly = app.add_subcommand("poly", "Counting polynomial of one kind");
  poly->add_option("kind", kind_name_arg, "chromatic|flow|modflow|tension|modtension")->required();
  poly->add_option("graph", graph_path, "Graph JSON")->required();
  poly->add_option("--method", method, "brute|geometric|hilbert|all");
  poly->add_option("--kmax", kmax, "Largest k evaluated (default: degree bound + 2)");

  auto* cert = app.add_subcommand("certify", "All kinds, all methods; exit 0 iff all agree");
  cert->add_option("graph", graph_path, "Graph JSON")->required();
  cert->add_option("--kmax", kmax, "Largest k evaluated (default: degree bound + 2)");

  auto* cplx = app.add_subcommand("complex", "Write the relative complex of one kind");
  cplx->add_option("kind", kind_name_arg, "chromatic|flow|modflow|tension|modtension")->required();
  cplx->add_option("graph", graph_path, "Graph JSON")->required();
  cplx->add_option("--out", out_path, "Output file (default: stdout)");

  auto* tri = app.add_subcommand("triangulate", "Pulling triangulation of a relative complex");
  tri->add_option("complex", complex_path, "Complex JSON")->required();
  order_name = "lex";
  tri->add_option("--order", order_name, "Point order (lex)");
  tri->add_option("--orders", orders, "Orders tried per face in the compressedness check");
  tri->add_option("--seed", seed, "Seed for the compressedness check");

  auto* comp = app.add_subcommand("check-compressed", "Polytope predicates");
  comp->add_option("polytope", polytope_path, "Polytope JSON")->required();
  comp->add_option("--orders", orders, "Pulling orders to test");
  comp->add_option("--seed", seed, "Seed for random orders");

  auto* real = app.add_subcommand("realize", "Relative complex with a given binomial-basis vector");
  real->add_option("--coeffs", coeffs, "f0,f1,...")->required();
  real->add_option("--out", out_path, "Output file (default: stdout)");

  std::string term_order = "grevlex";
  auto* hn = app.add_subcommand("hilbert-normal", "Valid-monomial count for normal-faced complexes");
  hn->add_option("complex", complex_path, "Complex JSON")->required();
  hn->add_option("--k", k, "Degree")->required();
  hn->add_option("--order", term_order, "grevlex|grlex");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*poly || *cert) {
      const Graph g = graph_from_json(read_json_file(graph_path));
      AnalysisOptions opts;
      if (kmax > 0) opts.kmax = kmax;
      if (*poly) {
        opts.methods = Methods::parse(method);
        const KindReport r = analyze(parse_kind(kind_name_arg), g, opts);
        if (as_json) write_json(out, kind_to_json(r, timing));
        else {
          if (r.polynomial) write_json(out, polynomial_to_json(*r.polynomial));
          print_kind(out, r, timing);
        }
        return r.pass() ? 0 : 1;
      }
      const RunReport r = certify(g, opts);
      if (as_json) write_json(out, report_to_json(r, timing));
      else print_report(out, r, timing);
      return r.pass() ? 0 : 1;
    }

    if (*cplx) {
      const Graph g = graph_from_json(read_json_file(graph_path));
      const Kind kind = parse_kind(kind_name_arg);
      const RelativeComplex c = construct(kind, g);
      const Json j = complex_to_json(c);
      if (out_path.empty()) write_json(out, j);
      else {
        write_file(out_path, j);
        out << kind_name(kind) << " complex: " << c.total.maximal().size() << " maximal cells, "
            << c.total.size() << " faces, " << c.sub.size() << " faces in the subcomplex, dimension "
            << c.total.dim() << "\n";
      }
      return 0;
    }

    if (*tri) {
      if (order_name != "lex") throw InputError("unsupported --order '" + order_name + "' (only lex)");
      const RelativeComplex c = complex_from_json(read_json_file(complex_path));
      const RelativeTriangulation t =
          triangulate_relative(c, PointOrder::lexicographic(), pull_options(orders, seed));
      Json simplices = Json::array();
      for (const auto& s : t.total.maximal_simplices()) simplices.push_back(s);
      const Json j = {{"vertices", t.total.vertices()},
                      {"maximal_simplices", simplices},
                      {"f_vector", t.total.f_vector()},
                      {"relative_f_vector", t.f_vector}};
      if (as_json) write_json(out, j);
      else {
        out << "vertices: " << t.total.vertices().size() << "\n";
        for (const auto& s : t.total.maximal_simplices()) {
          out << "simplex";
          for (const auto& p : t.total.points_of(s)) out << " " << show(p);
          out << "\n";
        }
        out << "relative f-vector:";
        for (auto f : t.f_vector) out << " " << f;
        out << "\n";
      }
      return 0;
    }

    if (*comp) {
      const LatticePolytope p = polytope_from_json(read_json_file(polytope_path));
      const auto witness = normality_witness(p, default_normality_bound(p));
      const bool compressed = is_compressed(p, orders, seed);
      Json j = {{"dim", p.dim()},
                {"lattice_points", p.lattice_points().size()},
                {"empty", is_empty_polytope(p)},
                {"two_level", is_two_level(p)},
                {"normal", !witness.has_value()},
                {"compressed", compressed}};
      if (witness) j["normality_witness"] = {{"k", witness->k}, {"point", witness->point}};
      if (as_json) write_json(out, j);
      else {
        out << "dimension " << p.dim() << ", " << p.lattice_points().size() << " lattice points\n";
        out << "empty: " << (is_empty_polytope(p) ? "yes" : "no") << "\n";
        out << "two-level: " << (is_two_level(p) ? "yes" : "no") << "\n";
        out << "normal: " << (witness ? "no, " + show(witness->point) + " in " + std::to_string(witness->k) + "P" : "yes")
            << "\n";
        out << "compressed: " << (compressed ? "yes" : "no") << "\n";
      }
      return 0;
    }

    if (*real) {
      RelativeComplex c;
      try {
        c = realize_polynomial(parse_coeffs(coeffs));
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      const Json j = complex_to_json(c);
      if (!out_path.empty()) {
        write_file(out_path, j);
        out << "wrote " << out_path << "\n";
      } else {
        write_json(out, j);
      }
      return 0;
    }

    if (*hn) {
      RelativeComplex c = complex_from_json(read_json_file(complex_path));
      if (!is_homogenized(c.total) || !is_homogenized(c.sub)) c = homogenize(c);
      NormalHilbertResult r;
      try {
        r = hilbert_normal_witnessed(c, k, TermOrder::parse(term_order));
      } catch (const NormalityError& e) {
        throw InputError(std::string("normality check: ") + e.what());
      }
      const Integer direct = count_relative_points(c, k);
      const PointVariableTable table(c.total);
      if (as_json) {
        Json ws = Json::array();
        for (const auto& w : r.witnesses) {
          Json support = Json::array();
          for (std::size_t i = 0; i < w.exponent.size(); ++i)
            if (w.exponent[i]) support.push_back({{"point", table.points()[i]}, {"exponent", w.exponent[i]}});
          ws.push_back({{"point", w.point}, {"witness", support}, {"representations", w.representations}});
        }
        write_json(out, {{"k", k},
                         {"order", term_order},
                         {"hilbert", to_string(r.count)},
                         {"lattice_points", to_string(direct)},
                         {"witnesses", ws}});
      } else {
        out << "k = " << k << ", order " << term_order << "\n";
        for (const auto& w : r.witnesses) {
          out << show(w.point) << " =";
          bool first = true;
          for (std::size_t i = 0; i < w.exponent.size(); ++i)
            if (w.exponent[i]) {
              out << (first ? " " : " + ") << w.exponent[i] << "*" << show(table.points()[i]);
              first = false;
            }
          out << "  (" << w.representations << " representations)\n";
        }
        out << "valid monomials: " << r.count << ", lattice points: " << direct << "\n";
      }
      if (r.count != direct) {
        err << "valid-monomial count and lattice-point count differ\n";
        return 1;
      }
      return 0;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotCompressedError& e) {
    err << "compressedness check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace cpoly
