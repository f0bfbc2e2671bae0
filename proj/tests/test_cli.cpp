#include "cpoly/cli.hpp"
#include "cpoly/json_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cpoly;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("cpoly_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const std::string k3_json = R"({"vertices": ["a","b","c"], "edges": [
  {"tail":"a","head":"b"}, {"tail":"b","head":"c"}, {"tail":"a","head":"c"}]})";
const std::string bridge_json = R"({"vertices": ["a","b"], "edges": [{"tail":"a","head":"b"}]})";

}  // namespace

TEST_CASE("certify K3") {
  const auto r = run({"certify", temp_file("k3.json", k3_json)});
  CHECK(r.code == 0);
  CHECK(r.out.find("binomial (0,0,6,6)") != std::string::npos);
  CHECK(r.out.find("verdict: PASS") != std::string::npos);

  const auto j = run({"--json", "certify", temp_file("k3.json", k3_json)});
  CHECK(j.code == 0);
  const Json report = Json::parse(j.out);
  CHECK(report["verdict"] == "PASS");
  CHECK(report["kinds"].size() == 5);
  CHECK(report["kinds"][0]["polynomial"]["binomial"] == Json::array({"0", "0", "6", "6"}));
}

TEST_CASE("certify output is deterministic") {
  const auto path = temp_file("k3.json", k3_json);
  CHECK(run({"certify", path}).out == run({"certify", path}).out);
}

TEST_CASE("poly on a bridge") {
  const auto r = run({"--json", "poly", "flow", temp_file("bridge.json", bridge_json)});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["polynomial"]["monomial"] == Json::array({"0"}));
  for (const auto& row : j["evaluations"]) CHECK(row["brute"] == "0");
  const auto m = run({"poly", "modflow", temp_file("bridge.json", bridge_json), "--method", "brute", "--kmax", "3"});
  CHECK(m.code == 0);
  CHECK(m.out.find("\"0\"") != std::string::npos);
}

TEST_CASE("realize") {
  const auto bad = run({"realize", "--coeffs", "-1,1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("not realizable") != std::string::npos);
  CHECK(run({"realize", "--coeffs", "1/2"}).code == 2);
  const auto good = run({"realize", "--coeffs", "0,2"});
  CHECK(good.code == 0);
  const auto c = complex_from_json(Json::parse(good.out));
  CHECK(c.total.maximal().size() == 2);
}

TEST_CASE("complex, triangulate and hilbert-normal") {
  const auto c = run({"complex", "chromatic", temp_file("bridge.json", bridge_json)});
  REQUIRE(c.code == 0);
  const auto path = temp_file("k2_complex.json", c.out);
  const auto t = run({"--json", "triangulate", path});
  CHECK(t.code == 0);
  CHECK(Json::parse(t.out)["relative_f_vector"] == Json::array({0, 2, 2}));
  CHECK(run({"triangulate", path, "--order", "revlex"}).code == 2);
  const auto h = run({"--json", "hilbert-normal", path, "--k", "3"});
  CHECK(h.code == 0);
  const Json hj = Json::parse(h.out);
  CHECK(hj["hilbert"] == "6");
  CHECK(hj["lattice_points"] == "6");
  CHECK(hj["witnesses"].size() == 6);
}

TEST_CASE("check-compressed") {
  const auto reeve = temp_file("reeve.json", R"({"ambient_dim": 3, "vertices": [[0,0,0],[1,0,0],[0,1,0],[1,1,3]]})");
  const auto r = run({"--json", "check-compressed", reeve});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["normal"] == false);
  CHECK(j["compressed"] == false);
  CHECK(j["normality_witness"]["point"] == Json::array({1, 1, 1}));
  const auto square = temp_file("square.json", R"({"ambient_dim": 2, "vertices": [[0,0],[1,0],[0,1],[1,1]]})");
  CHECK(Json::parse(run({"--json", "check-compressed", square}).out)["compressed"] == true);
}

TEST_CASE("non-normal input to hilbert-normal") {
  const auto reeve = temp_file("reeve_complex.json",
                               R"({"vertices": [[0,0,0],[1,0,0],[0,1,0],[1,1,3]], "faces": [[0,1,2,3]]})");
  const auto r = run({"hilbert-normal", reeve, "--k", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("normality") != std::string::npos);
}

TEST_CASE("malformed input") {
  CHECK(run({"certify", temp_file("broken.json", "{")}).code == 2);
  CHECK(run({"certify", "/nonexistent/graph.json"}).code == 2);
  CHECK(run({"poly", "tutte", temp_file("k3.json", k3_json)}).code == 2);
  CHECK(run({"certify", temp_file("badedge.json", R"({"vertices": ["a"], "edges": [{"tail":"a","head":"z"}]})")}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}
