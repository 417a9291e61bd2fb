#include "fqv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fqv/errors.hpp"
#include "fqv/sweep.hpp"

namespace fqv {

namespace {

void print_families(std::ostream& out) {
  std::size_t id_width = 2, schema_width = 6;
  for (const auto& f : list_families()) {
    id_width = std::max(id_width, f.id.size());
    schema_width = std::max(schema_width, f.schema.size());
  }
  out << fmt::format("{:<{}}  {:<{}}  {}\n", "id", id_width, "schema", schema_width, "checks");
  for (const auto& f : list_families()) {
    out << fmt::format("{:<{}}  {:<{}}  {}\n", f.id, id_width, f.schema, schema_width,
                       f.statement);
  }
}

std::string read_file(const std::string& field, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(field, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int verify_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sweep exact and modular identity checks over parameter ranges."};
  app.name("verify");

  std::vector<std::string> families;
  std::string primes, n_range, a_range, backend, format, output, config_path;
  int r_max = 0;
  std::uint64_t exact_cap = 0;
  long series_terms = 0;
  bool allow_domain_errors = false, serial = false;

  auto* opt_families = app.add_option("--families", families, "comma-separated family ids")
                           ->delimiter(',');
  auto* opt_primes = app.add_option("--primes", primes, "prime range lo:hi");
  auto* opt_n = app.add_option("--n", n_range, "n range lo:hi");
  auto* opt_a = app.add_option("--a", a_range, "base range lo:hi (spadesuit)");
  auto* opt_r = app.add_option("--r-max", r_max, "largest r, 1..7");
  auto* opt_backend = app.add_option("--backend", backend, "exact|modular|both");
  auto* opt_format = app.add_option("--format", format, "json-lines|csv|summary");
  auto* opt_out = app.add_option("--out", output, "output path (default: stdout)");
  auto* opt_cap = app.add_option("--exact-cap", exact_cap, "largest p for the exact backend");
  auto* opt_terms = app.add_option("--series-terms", series_terms, "partial-sum length N");
  app.add_option("--config", config_path, "JSON file with SweepConfig fields");
  auto* opt_allow = app.add_flag("--allow-domain-errors", allow_domain_errors,
                                 "report out-of-domain records without failing");
  app.add_flag("--serial", serial, "run cells one at a time (reference runner)");
  auto* list_cmd = app.add_subcommand("list-families", "print the family inventory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  if (list_cmd->parsed()) {
    print_families(out);
    return 0;
  }

  SweepConfig config;
  try {
    if (!config_path.empty()) config = config_from_json_text(read_file("config", config_path));
    if (opt_families->count()) config.families = families;
    if (opt_primes->count()) config.prime_range = parse_range("prime_range", primes);
    if (opt_n->count()) config.n_range = parse_range("n_range", n_range);
    if (opt_a->count()) config.a_range = parse_range("a_range", a_range);
    if (opt_r->count()) config.r_max = r_max;
    if (opt_backend->count()) config.backend = parse_backend(backend);
    if (opt_format->count()) config.format = parse_format(format);
    if (opt_out->count()) config.output = output;
    if (opt_cap->count()) config.exact_cap = exact_cap;
    if (opt_terms->count()) config.series_terms = series_terms;
    if (opt_allow->count()) config.allow_domain_errors = true;
    validate(config);
  } catch (const ConfigError& e) {
    err << "verify: configuration error: " << e.what() << '\n';
    return 2;
  }

  const SweepResult result =
      run_sweep(config, serial ? Execution::serial : Execution::parallel);

  if (config.output.empty() || config.output == "-") {
    write_records(out, result, config.format);
  } else {
    std::ofstream file(config.output);
    if (!file) {
      err << "verify: configuration error: output: cannot open '" << config.output << "'\n";
      return 2;
    }
    write_records(file, result, config.format);
  }

  if (result.domain_errors() > 0 && config.allow_domain_errors) {
    err << "verify: warning: " << result.domain_errors() << " out-of-domain record(s)\n";
  }
  if (result.failures() > 0) err << "verify: " << result.failures() << " check(s) failed\n";
  return result.exit_status();
}

}  // namespace fqv
