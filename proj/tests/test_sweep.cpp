#include <doctest.h>

#include <omp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fqv/cli.hpp"
#include "fqv/errors.hpp"
#include "fqv/sweep.hpp"

using namespace fqv;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run verify(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = verify_main(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<nlohmann::json> parse_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  }
  return out;
}

std::string render(const SweepResult& r) {
  std::ostringstream os;
  write_records(os, r, OutputFormat::json_lines);
  return os.str();
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("fqv_test_" + name);
}

}  // namespace

TEST_CASE("family inventory") {
  const auto& fams = list_families();
  CHECK(fams.size() == 21);
  const std::vector<std::string> ids = {
      "eisenstein", "lemma1", "spadesuit", "binom-over-p", "wolstenholme", "prop1", "thm1",
      "observation", "lemma2", "heartsuit", "corollary1", "sury93", "mneimneh", "dsum-closed",
      "dsum-cross", "difference-recurrences", "hypergeom-step", "triple-sum", "partition-count",
      "determinant-vs-partition", "choi-series"};
  for (std::size_t i = 0; i < ids.size(); ++i) CHECK(fams[i].id == ids[i]);

  const Run r = verify({"list-families"});
  CHECK(r.status == 0);
  CHECK(r.out.find("prop1") != std::string::npos);
  CHECK(r.out.find("{p: odd prime}") != std::string::npos);
  CHECK(r.out.find("mneimneh") != std::string::npos);
  CHECK(r.out.find("{n, r}") != std::string::npos);
}

TEST_CASE("range parsing") {
  CHECK(parse_range("n", "3:10") == Range{3, 10});
  CHECK(parse_range("n", "7") == Range{7, 7});
  CHECK(parse_range("a", "-10:-2") == Range{-10, -2});
  CHECK_THROWS_AS(parse_range("n", "3:x"), ConfigError);
  CHECK_THROWS_AS(parse_range("n", ""), ConfigError);
}

TEST_CASE("configuration errors name the field and exit with 2") {
  const Run unknown = verify({"--families", "prop1,nope"});
  CHECK(unknown.status == 2);
  CHECK(unknown.err.find("families") != std::string::npos);
  CHECK(unknown.out.empty());

  const Run empty = verify({"--families", "prop1", "--primes", "11:5"});
  CHECK(empty.status == 2);
  CHECK(empty.err.find("prime_range") != std::string::npos);

  const Run rmax = verify({"--families", "dsum-closed", "--r-max", "8"});
  CHECK(rmax.status == 2);
  CHECK(rmax.err.find("r_max") != std::string::npos);

  const Run cap = verify({"--families", "thm1", "--primes", "3:200", "--backend", "exact"});
  CHECK(cap.status == 2);
  CHECK(cap.err.find("prime_range") != std::string::npos);

  CHECK(verify({"--backend", "quantum"}).status == 2);
  CHECK(verify({"--format", "xml"}).status == 2);
  CHECK(verify({"--no-such-flag"}).status == 2);

  SweepConfig c;
  c.n_range = Range{5, 1};
  try {
    run_sweep(c);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "n_range");
  }
}

TEST_CASE("backend=both on the base-2 mod p^2 family") {
  const Run r = verify({"--families", "prop1", "--primes", "5:101", "--backend", "both"});
  CHECK(r.status == 0);
  const auto lines = parse_lines(r.out);
  CHECK(lines.size() == 2 * 24);
  for (const auto& j : lines) {
    CHECK(j["pass"] == true);
    CHECK(j["agree"] == true);
    CHECK(j["backend"] == "both");
  }
  CHECK(lines[0]["family"] == "prop1");
  CHECK(lines[0]["params"]["p"] == 5);
  CHECK(lines[0]["modulus"] == 25);
  CHECK(lines[0]["lhs"] == "3");

  // p = 3 is a counterexample, so the same sweep from 3 fails.
  const Run from3 = verify({"--families", "prop1", "--primes", "3:101", "--backend", "both"});
  CHECK(from3.status == 1);
  const auto first = parse_lines(from3.out).front();
  CHECK(first["params"]["p"] == 3);
  CHECK(first["pass"] == false);
  CHECK(first["agree"] == true);
}

TEST_CASE("backend=both falls back to modular above the exact cap") {
  const Run r = verify({"--families", "thm1", "--primes", "97:113", "--backend", "both"});
  CHECK(r.status == 0);
  const auto lines = parse_lines(r.out);
  REQUIRE(lines.size() == 6);  // 97, 101, 103, 107, 109, 113
  CHECK(lines[0]["backend"] == "both");
  CHECK(lines[1]["backend"] == "both");
  CHECK(lines[2]["backend"] == "modular");
  CHECK_FALSE(lines[2].contains("agree"));
  CHECK(lines[5]["backend"] == "modular");
}

TEST_CASE("out-of-domain records") {
  const Run strict = verify({"--families", "wolstenholme", "--primes", "3:3"});
  CHECK(strict.status == 1);
  const auto lines = parse_lines(strict.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["pass"] == false);
  CHECK(lines[0].contains("error"));
  CHECK(lines[0]["lhs"] == "6");

  const Run lenient =
      verify({"--families", "wolstenholme", "--primes", "3:3", "--allow-domain-errors"});
  CHECK(lenient.status == 0);
  CHECK(lenient.err.find("warning") != std::string::npos);
  CHECK(lenient.out == strict.out);
}

TEST_CASE("record schema and order") {
  const Run r = verify({"--families", "thm1,hypergeom-step", "--primes", "3:7", "--n", "2:3"});
  CHECK(r.status == 0);
  std::istringstream in(r.out);
  std::string first;
  std::getline(in, first);
  CHECK(first ==
        R"({"family":"thm1","params":{"p":3},"modulus":9,"lhs":"1","rhs":"1","pass":true,"backend":"modular"})");
  const auto lines = parse_lines(r.out);
  REQUIRE(lines.size() == 3 + 5);
  CHECK(lines[3] == nlohmann::json::parse(
                        R"({"family":"hypergeom-step","params":{"n":2,"j":1},"modulus":"exact","lhs":"1/2","rhs":"1/2","pass":true,"backend":"exact"})"));
  CHECK(lines[7]["params"]["n"] == 3);
  CHECK(lines[7]["params"]["j"] == 3);

  // The order in which families are named does not matter.
  CHECK(verify({"--families", "hypergeom-step,thm1", "--primes", "3:7", "--n", "2:3"}).out ==
        r.out);
}

TEST_CASE("csv and summary formats") {
  const Run csv = verify({"--families", "corollary1", "--n", "1:2", "--format", "csv"});
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("family,params,modulus,lhs,rhs,pass,backend,agree,error\n", 0) == 0);
  CHECK(csv.out.find("corollary1-a,n=1,exact,1/2,1/2,true,exact,,\n") != std::string::npos);

  const Run sum = verify({"--families", "choi-series", "--format", "summary"});
  CHECK(sum.status == 1);
  CHECK(sum.out.find("choi-series") != std::string::npos);
  CHECK(sum.out.find("status: FAIL") != std::string::npos);
}

TEST_CASE("floating-point records carry their tolerance") {
  SweepConfig c;
  c.families = {"choi-series"};
  c.series_terms = 1000;
  c.series_tolerance = 0.5;
  const auto result = run_sweep(c);
  REQUIRE(result.records.size() == 3);
  const auto j = nlohmann::json::parse(to_json_line(result.records[0]));
  CHECK(j["modulus"] == "float");
  CHECK(j["tolerance"] == 0.5);
  CHECK(result.exit_status() == 0);
}

TEST_CASE("config file, with flags taking precedence") {
  const auto path = temp_file("config.json");
  {
    std::ofstream f(path);
    f << R"({"families": ["sury93", "thm1"], "n_range": [0, 3], "prime_range": "3:5",
             "backend": "both", "format": "csv"})";
  }
  const Run from_file = verify({"--config", path.string()});
  CHECK(from_file.status == 0);
  CHECK(from_file.out.rfind("family,", 0) == 0);
  CHECK(from_file.out.find("thm1,p=5,25,3,3,true,both,true,") != std::string::npos);

  const Run overridden = verify({"--config", path.string(), "--format", "json-lines", "--n", "1:1"});
  const auto lines = parse_lines(overridden.out);
  REQUIRE(lines.size() == 2 + 2);
  CHECK(lines[2]["params"]["n"] == 1);

  {
    std::ofstream f(path);
    f << R"({"families": ["thm1"], "bogus": 1})";
  }
  const Run bad = verify({"--config", path.string()});
  CHECK(bad.status == 2);
  CHECK(bad.err.find("bogus") != std::string::npos);
  CHECK(verify({"--config", temp_file("missing.json").string()}).status == 2);
  std::filesystem::remove(path);
}

TEST_CASE("output file") {
  const auto path = temp_file("out.jsonl");
  const Run r = verify({"--families", "partition-count", "--out", path.string()});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(parse_lines(ss.str()).size() == 13);
  std::filesystem::remove(path);
}

TEST_CASE("parallel and serial runners produce identical output") {
  SweepConfig c;
  c.families = {"lemma1", "binom-over-p", "wolstenholme", "mneimneh", "dsum-cross",
                "difference-recurrences", "triple-sum"};
  c.prime_range = Range{3, 60};
  c.n_range = Range{1, 12};
  c.backend = BackendChoice::both;
  const std::string serial = render(run_sweep(c, Execution::serial));
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  const std::string parallel4 = render(run_sweep(c, Execution::parallel));
  omp_set_num_threads(1);
  const std::string parallel1 = render(run_sweep(c, Execution::parallel));
  omp_set_num_threads(saved);
  CHECK(serial == parallel4);
  CHECK(serial == parallel1);
  CHECK(render(run_sweep(c)) == serial);
}
