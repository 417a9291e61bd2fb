#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fqv/report.hpp"

namespace fqv {

struct Range {
  std::int64_t lo;
  std::int64_t hi;
  friend bool operator==(const Range&, const Range&) = default;
};

/// Parses "lo:hi" (or a single "v" meaning v:v).
Range parse_range(const std::string& field, const std::string& text);

enum class BackendChoice { exact, modular, both };
enum class OutputFormat { json_lines, csv, summary };

BackendChoice parse_backend(const std::string& text);
OutputFormat parse_format(const std::string& text);

/// Unset ranges fall back to each family's own default range; set ranges are
/// intersected with the family's domain (odd n for lemma2, n >= 3 for the
/// triple sum, and so on).
struct SweepConfig {
  std::vector<std::string> families;  // empty: every family
  std::optional<Range> prime_range;
  std::optional<Range> n_range;
  std::optional<Range> a_range;
  std::optional<int> r_max;
  BackendChoice backend = BackendChoice::modular;
  std::string output;  // empty or "-": standard output
  OutputFormat format = OutputFormat::json_lines;
  bool allow_domain_errors = false;
  std::uint64_t exact_cap = 101;
  long series_terms = 1'000'000;
  double series_tolerance = 2e-4;
};

/// Throws ConfigError naming the offending field.
void validate(const SweepConfig& config);

/// Reads a SweepConfig from a JSON document with the same field names
/// (families, primes, n_range, a_range, r_max, backend, format, output,
/// allow_domain_errors, exact_cap, series_terms, series_tolerance).
SweepConfig config_from_json_text(const std::string& text);

struct FamilyInfo {
  std::string id;
  std::string statement;
  std::string schema;
};

/// Stable inventory of the check families, in sweep order.
const std::vector<FamilyInfo>& list_families();

struct SweepRecord {
  CheckReport report;
  std::string backend;       // "exact", "modular" or "both"
  std::optional<bool> agree; // set when both backends ran
};

struct SweepResult {
  std::vector<SweepRecord> records;
  bool allow_domain_errors = false;

  std::size_t failures() const;       // failing records that count
  std::size_t domain_errors() const;
  /// 0 when every counted record passes, 1 otherwise.
  int exit_status() const;
};

enum class Execution { parallel, serial };

/// Runs every (family, parameter) cell. Cells run concurrently under
/// Execution::parallel; records are always emitted in family order, then
/// ascending parameters, so both modes produce identical output.
SweepResult run_sweep(const SweepConfig& config,
                      Execution execution = Execution::parallel);

std::string to_json_line(const SweepRecord& record);
void write_records(std::ostream& os, const SweepResult& result,
                   OutputFormat format);

}  // namespace fqv
