// Cross-checking the three computations of a counting polynomial and
// reporting the outcome.

#pragma once

#include "cpoly/complex.hpp"
#include "cpoly/constructions.hpp"
#include "cpoly/json_io.hpp"
#include "cpoly/polynomial.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cpoly {

struct Methods {
  bool brute = true;
  bool geometric = true;  // lattice points of the relative complex
  bool hilbert = true;    // f-vector of the pulled triangulation
  static Methods parse(const std::string& name);  // brute|geometric|hilbert|all
};

struct EvaluationRow {
  std::int64_t k = 0;
  std::optional<Integer> brute;
  std::optional<Integer> geometric;
  std::optional<Integer> hilbert;
  bool agree() const;
};

struct KindReport {
  Kind kind = Kind::chromatic;
  std::size_t degree_bound = 0;
  std::int64_t kmax = 0;
  std::optional<BinomialPolynomial> polynomial;
  std::vector<std::int64_t> f_vector;  // relative f-vector, when the hilbert method ran
  std::vector<EvaluationRow> rows;
  std::vector<std::string> failures;  // each names the check that failed
  double seconds = 0;
  bool pass() const { return failures.empty(); }
};

struct RunReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::vector<KindReport> kinds;
  bool pass() const;
};

struct AnalysisOptions {
  Methods methods;
  std::optional<std::int64_t> kmax;  // default: degree bound + 2
  PullOptions pull;
};

KindReport analyze(Kind kind, const Graph& g, const AnalysisOptions& options = {});
RunReport certify(const Graph& g, const AnalysisOptions& options = {});

void print_kind(std::ostream& out, const KindReport& r, bool timing = false);
void print_report(std::ostream& out, const RunReport& r, bool timing = false);
Json kind_to_json(const KindReport& r, bool timing = false);
Json report_to_json(const RunReport& r, bool timing = false);

}  // namespace cpoly
