#include "cpoly/report.hpp"

#include "cpoly/sr_ideal.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace cpoly {

Methods Methods::parse(const std::string& name) {
  if (name == "all") return Methods{};
  if (name == "brute") return Methods{true, false, false};
  if (name == "geometric") return Methods{false, true, false};
  if (name == "hilbert") return Methods{false, false, true};
  throw std::invalid_argument("unknown method '" + name + "' (expected brute, geometric, hilbert or all)");
}

bool EvaluationRow::agree() const {
  std::optional<Integer> seen;
  for (const auto* v : {&brute, &geometric, &hilbert}) {
    if (!*v) continue;
    if (seen && *seen != **v) return false;
    seen = **v;
  }
  return true;
}

bool RunReport::pass() const {
  for (const auto& k : kinds)
    if (!k.pass()) return false;
  return true;
}

KindReport analyze(Kind kind, const Graph& g, const AnalysisOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  KindReport r;
  r.kind = kind;
  r.degree_bound = degree_bound(kind, g);
  r.kmax = options.kmax.value_or(static_cast<std::int64_t>(r.degree_bound) + 2);
  if (r.kmax < 1) throw std::invalid_argument("kmax must be positive");
  for (std::int64_t k = 1; k <= r.kmax; ++k) r.rows.push_back(EvaluationRow{k, {}, {}, {}});

  const Methods& m = options.methods;
  if (m.brute)
    for (auto& row : r.rows) row.brute = brute_force(kind, g, row.k);

  if (m.geometric || m.hilbert) {
    const RelativeComplex c = construct(kind, g);
    if (m.geometric)
      for (auto& row : r.rows) row.geometric = count_relative_points(c, row.k);
    if (m.hilbert) {
      try {
        const RelativeTriangulation t = triangulate_relative(c, PointOrder::lexicographic(), options.pull);
        r.f_vector = t.f_vector;
        const RelativeSRIdeal ideal = relative_sr_ideal(t);
        for (auto& row : r.rows) {
          row.hilbert = hilbert_from_f(r.f_vector, row.k);
          if (hilbert_by_enumeration(ideal, row.k) != *row.hilbert)
            r.failures.push_back("Hilbert function by f-vector and by monomial enumeration differ at k = " +
                                 std::to_string(row.k));
        }
      } catch (const NotCompressedError& e) {
        r.failures.push_back(std::string("compressedness precondition: ") + e.what());
      }
    }
  }

  for (const auto& row : r.rows)
    if (!row.agree()) r.failures.push_back("methods disagree at k = " + std::to_string(row.k));

  std::vector<Sample> samples;
  for (const auto& row : r.rows) {
    const auto& v = row.brute ? row.brute : row.geometric ? row.geometric : row.hilbert;
    if (v) samples.emplace_back(row.k, *v);
  }
  if (samples.size() >= r.degree_bound + 1) {
    try {
      r.polynomial = interpolate(samples, r.degree_bound);
      if (!is_realizable(*r.polynomial))
        r.failures.push_back("binomial-basis coefficients are not non-negative integers");
      if (m.hilbert && !r.f_vector.empty()) {
        std::vector<Rational> f;
        for (auto x : r.f_vector) f.emplace_back(static_cast<long>(x));
        if (BinomialPolynomial::from_binomial(f) != *r.polynomial)
          r.failures.push_back("relative f-vector does not match the binomial-basis coefficients");
      }
    } catch (const std::domain_error& e) {
      r.failures.push_back(std::string("polynomiality: ") + e.what());
    }
  } else {
    r.failures.push_back("too few samples to determine a polynomial of degree " + std::to_string(r.degree_bound));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

RunReport certify(const Graph& g, const AnalysisOptions& options) {
  RunReport report;
  report.vertices = g.vertex_count();
  report.edges = g.edge_count();
  report.components = g.component_count();
  for (Kind kind : all_kinds()) report.kinds.push_back(analyze(kind, g, options));
  return report;
}

namespace {

std::string cell(const std::optional<Integer>& v) { return v ? v->get_str() : "-"; }

std::string join(const std::vector<Rational>& xs) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i].get_str();
  os << ")";
  return os.str();
}

Json optional_json(const std::optional<Integer>& v) { return v ? Json(v->get_str()) : Json(nullptr); }

}  // namespace

void print_kind(std::ostream& out, const KindReport& r, bool timing) {
  out << kind_name(r.kind) << ": degree bound " << r.degree_bound << ", " << (r.pass() ? "PASS" : "FAIL");
  if (timing) out << std::fixed << std::setprecision(3) << " (" << r.seconds << " s)";
  out << "\n";
  if (r.polynomial) {
    out << "  monomial " << join(r.polynomial->monomial()) << "\n";
    out << "  binomial " << join(r.polynomial->binomial()) << "\n";
  }
  out << "  " << std::setw(4) << "k" << std::setw(14) << "brute" << std::setw(14) << "geometric" << std::setw(14)
      << "hilbert" << "\n";
  for (const auto& row : r.rows)
    out << "  " << std::setw(4) << row.k << std::setw(14) << cell(row.brute) << std::setw(14) << cell(row.geometric)
        << std::setw(14) << cell(row.hilbert) << (row.agree() ? "" : "  <- disagree") << "\n";
  for (const auto& f : r.failures) out << "  failed: " << f << "\n";
}

void print_report(std::ostream& out, const RunReport& r, bool timing) {
  out << "graph: " << r.vertices << " vertices, " << r.edges << " edges, " << r.components << " components\n";
  for (const auto& k : r.kinds) print_kind(out, k, timing);
  out << "verdict: " << (r.pass() ? "PASS" : "FAIL") << "\n";
}

Json kind_to_json(const KindReport& r, bool timing) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"k", row.k},
                    {"brute", optional_json(row.brute)},
                    {"geometric", optional_json(row.geometric)},
                    {"hilbert", optional_json(row.hilbert)},
                    {"agree", row.agree()}});
  Json j = {{"kind", kind_name(r.kind)},
            {"degree_bound", r.degree_bound},
            {"kmax", r.kmax},
            {"polynomial", r.polynomial ? polynomial_to_json(*r.polynomial) : Json(nullptr)},
            {"f_vector", r.f_vector},
            {"evaluations", rows},
            {"failures", r.failures},
            {"verdict", r.pass() ? "PASS" : "FAIL"}};
  if (timing) j["seconds"] = r.seconds;
  return j;
}

Json report_to_json(const RunReport& r, bool timing) {
  Json kinds = Json::array();
  for (const auto& k : r.kinds) kinds.push_back(kind_to_json(k, timing));
  return {{"graph", {{"vertices", r.vertices}, {"edges", r.edges}, {"components", r.components}}},
          {"kinds", kinds},
          {"verdict", r.pass() ? "PASS" : "FAIL"}};
}

}  // namespace cpoly
