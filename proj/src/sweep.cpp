#include "fqv/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <map>
#include <ostream>

#include <fmt/format.h>

#include <json.hpp>

#include "families.hpp"
#include "fqv/errors.hpp"

namespace fqv {

namespace {

using detail::Cell;
using detail::Family;

std::int64_t parse_int(const std::string& field, std::string_view text) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError(field, "not an integer: '" + std::string(text) + "'");
  }
  return v;
}

void require_nonempty(const std::string& field, const std::optional<Range>& r) {
  if (r && r->lo > r->hi) {
    throw ConfigError(field, fmt::format("empty range {}:{}", r->lo, r->hi));
  }
}

struct Task {
  const Family* family;
  Cell cell;
};

std::vector<const Family*> selected_families(const SweepConfig& config) {
  std::vector<const Family*> out;
  if (config.families.empty()) {
    for (const auto& f : detail::registry()) out.push_back(&f);
    return out;
  }
  // Registry order, whatever order the names were given in.
  for (const auto& f : detail::registry()) {
    if (std::find(config.families.begin(), config.families.end(), f.info.id) !=
        config.families.end()) {
      out.push_back(&f);
    }
  }
  return out;
}

Params cell_params(const Family& f, const Cell& cell) {
  Params p;
  if (!f.cell_params.empty()) p.push_back({f.cell_params[0], cell.x});
  if (f.cell_params.size() > 1) p.push_back({f.cell_params[1], cell.y});
  return p;
}

// A cell that threw instead of producing records becomes one failing record.
SweepRecord error_record(const Family& f, const Cell& cell, const std::string& what) {
  CheckReport r;
  r.family = f.info.id;
  r.params = cell_params(f, cell);
  r.pass = false;
  r.error = what;
  return {std::move(r), "none", std::nullopt};
}

std::vector<SweepRecord> run_task(const Task& task, const detail::SweepContext& ctx) {
  try {
    return task.family->run(task.cell, ctx);
  } catch (const DomainError& e) {
    return {error_record(*task.family, task.cell, e.what())};
  } catch (const std::exception& e) {
    auto rec = error_record(*task.family, task.cell, std::string("internal: ") + e.what());
    return {rec};
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

bool counts_as_failure(const SweepRecord& r, bool allow_domain_errors) {
  if (r.report.pass) return false;
  return !(allow_domain_errors && !r.report.error.empty());
}

}  // namespace

Range parse_range(const std::string& field, const std::string& text) {
  // The low end may be negative; a leading '-' is never the separator.
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) {
    const auto v = parse_int(field, text);
    return {v, v};
  }
  return {parse_int(field, std::string_view(text).substr(0, colon)),
          parse_int(field, std::string_view(text).substr(colon + 1))};
}

BackendChoice parse_backend(const std::string& text) {
  if (text == "exact") return BackendChoice::exact;
  if (text == "modular") return BackendChoice::modular;
  if (text == "both") return BackendChoice::both;
  throw ConfigError("backend", "expected exact, modular or both, got '" + text + "'");
}

OutputFormat parse_format(const std::string& text) {
  if (text == "json-lines") return OutputFormat::json_lines;
  if (text == "csv") return OutputFormat::csv;
  if (text == "summary") return OutputFormat::summary;
  throw ConfigError("format", "expected json-lines, csv or summary, got '" + text + "'");
}

void validate(const SweepConfig& config) {
  for (const auto& id : config.families) {
    if (!detail::find_family(id)) throw ConfigError("families", "unknown family '" + id + "'");
  }
  require_nonempty("prime_range", config.prime_range);
  require_nonempty("n_range", config.n_range);
  require_nonempty("a_range", config.a_range);
  if (config.prime_range) {
    if (config.prime_range->lo < 0) throw ConfigError("prime_range", "negative bound");
    if (config.prime_range->hi >= (std::int64_t{1} << 32)) {
      throw ConfigError("prime_range", "primes must be below 2^32");
    }
    if (config.backend == BackendChoice::exact &&
        static_cast<u64>(config.prime_range->hi) > config.exact_cap) {
      throw ConfigError("prime_range",
                        fmt::format("exact backend is limited to p <= {} (exact_cap)",
                                    config.exact_cap));
    }
  }
  if (config.n_range && config.n_range->lo < 0) {
    throw ConfigError("n_range", "negative bound");
  }
  if (config.n_range && config.n_range->hi > 100000) {
    throw ConfigError("n_range", "upper bound above 100000");
  }
  if (config.r_max && (*config.r_max < 1 || *config.r_max > 7)) {
    throw ConfigError("r_max", "closed forms exist for 1 <= r_max <= 7");
  }
  if (config.series_terms < 1) throw ConfigError("series_terms", "must be positive");
  if (!(config.series_tolerance >= 0)) throw ConfigError("series_tolerance", "must be >= 0");
}

SweepConfig config_from_json_text(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError("config", e.what());
  }
  if (!doc.is_object()) throw ConfigError("config", "expected a JSON object");

  auto range = [](const std::string& field, const json& v) -> Range {
    if (v.is_string()) return parse_range(field, v.get<std::string>());
    if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer()) {
      return {v[0].get<std::int64_t>(), v[1].get<std::int64_t>()};
    }
    throw ConfigError(field, "expected \"lo:hi\" or [lo, hi]");
  };

  SweepConfig c;
  for (const auto& [key, v] : doc.items()) {
    try {
      if (key == "families") {
        if (v.is_string()) {
          std::string s = v.get<std::string>();
          std::size_t start = 0;
          while (start <= s.size()) {
            auto comma = s.find(',', start);
            if (comma == std::string::npos) comma = s.size();
            if (comma > start) c.families.push_back(s.substr(start, comma - start));
            start = comma + 1;
          }
        } else {
          c.families = v.get<std::vector<std::string>>();
        }
      } else if (key == "prime_range" || key == "primes") {
        c.prime_range = range("prime_range", v);
      } else if (key == "n_range") {
        c.n_range = range("n_range", v);
      } else if (key == "a_range") {
        c.a_range = range("a_range", v);
      } else if (key == "r_max") {
        c.r_max = v.get<int>();
      } else if (key == "backend") {
        c.backend = parse_backend(v.get<std::string>());
      } else if (key == "format") {
        c.format = parse_format(v.get<std::string>());
      } else if (key == "output") {
        c.output = v.get<std::string>();
      } else if (key == "allow_domain_errors") {
        c.allow_domain_errors = v.get<bool>();
      } else if (key == "exact_cap") {
        c.exact_cap = v.get<std::uint64_t>();
      } else if (key == "series_terms") {
        c.series_terms = v.get<long>();
      } else if (key == "series_tolerance") {
        c.series_tolerance = v.get<double>();
      } else {
        throw ConfigError(key, "unknown configuration field");
      }
    } catch (const json::exception& e) {
      throw ConfigError(key, e.what());
    }
  }
  return c;
}

const std::vector<FamilyInfo>& list_families() {
  static const std::vector<FamilyInfo> infos = [] {
    std::vector<FamilyInfo> out;
    for (const auto& f : detail::registry()) out.push_back(f.info);
    return out;
  }();
  return infos;
}

std::size_t SweepResult::failures() const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(),
      [&](const SweepRecord& r) { return counts_as_failure(r, allow_domain_errors); }));
}

std::size_t SweepResult::domain_errors() const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(),
      [](const SweepRecord& r) { return !r.report.error.empty(); }));
}

int SweepResult::exit_status() const { return failures() == 0 ? 0 : 1; }

SweepResult run_sweep(const SweepConfig& config, Execution execution) {
  validate(config);

  std::vector<Task> tasks;
  int extent = 1;
  for (const Family* f : selected_families(config)) {
    for (const Cell& cell : f->cells(config)) {
      if (f->extent) extent = std::max(extent, f->extent(cell));
      tasks.push_back({f, cell});
    }
  }

  // Shared read-only tables, built before any cell runs.
  const HarmonicTable harmonics(extent, 7);
  const StirlingTable stirling(extent);
  const detail::SweepContext ctx{config, harmonics, stirling};

  std::vector<std::vector<SweepRecord>> slots(tasks.size());
  const auto count = static_cast<std::int64_t>(tasks.size());
  if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) slots[i] = run_task(tasks[i], ctx);
  } else {
    for (std::int64_t i = 0; i < count; ++i) slots[i] = run_task(tasks[i], ctx);
  }

  SweepResult result;
  result.allow_domain_errors = config.allow_domain_errors;
  for (auto& slot : slots) {
    for (auto& rec : slot) result.records.push_back(std::move(rec));
  }
  return result;
}

std::string to_json_line(const SweepRecord& record) {
  const CheckReport& r = record.report;
  nlohmann::ordered_json j;
  j["family"] = r.family;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& p : r.params) params[p.name] = p.value;
  j["params"] = params;
  if (r.modulus) {
    j["modulus"] = *r.modulus;
  } else {
    j["modulus"] = r.modulus_str();
  }
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["pass"] = r.pass;
  j["backend"] = record.backend;
  if (record.agree) j["agree"] = *record.agree;
  if (r.tolerance) j["tolerance"] = *r.tolerance;
  if (!r.error.empty()) j["error"] = r.error;
  return j.dump();
}

void write_records(std::ostream& os, const SweepResult& result, OutputFormat format) {
  switch (format) {
    case OutputFormat::json_lines:
      for (const auto& rec : result.records) os << to_json_line(rec) << '\n';
      return;
    case OutputFormat::csv:
      os << "family,params,modulus,lhs,rhs,pass,backend,agree,error\n";
      for (const auto& rec : result.records) {
        const auto& r = rec.report;
        os << csv_field(r.family) << ',' << csv_field(r.params_str()) << ','
           << r.modulus_str() << ',' << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ','
           << (r.pass ? "true" : "false") << ',' << rec.backend << ','
           << (rec.agree ? (*rec.agree ? "true" : "false") : "") << ','
           << csv_field(r.error) << '\n';
      }
      return;
    case OutputFormat::summary: {
      struct Tally {
        std::size_t total = 0, pass = 0, fail = 0, domain = 0;
      };
      std::vector<std::string> order;
      std::map<std::string, Tally> tallies;
      for (const auto& rec : result.records) {
        const auto& r = rec.report;
        auto [it, inserted] = tallies.try_emplace(r.family);
        if (inserted) order.push_back(r.family);
        Tally& t = it->second;
        ++t.total;
        if (r.pass) {
          ++t.pass;
        } else if (!r.error.empty()) {
          ++t.domain;
        } else {
          ++t.fail;
        }
      }
      os << fmt::format("{:<28} {:>8} {:>8} {:>8} {:>8}\n", "family", "total", "pass", "fail",
                        "domain");
      Tally all;
      for (const auto& name : order) {
        const Tally& t = tallies[name];
        os << fmt::format("{:<28} {:>8} {:>8} {:>8} {:>8}\n", name, t.total, t.pass, t.fail,
                          t.domain);
        all.total += t.total;
        all.pass += t.pass;
        all.fail += t.fail;
        all.domain += t.domain;
      }
      os << fmt::format("{:<28} {:>8} {:>8} {:>8} {:>8}\n", "TOTAL", all.total, all.pass,
                        all.fail, all.domain);
      os << (result.exit_status() == 0 ? "status: PASS\n" : "status: FAIL\n");
      return;
    }
  }
}

}  // namespace fqv
