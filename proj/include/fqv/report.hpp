#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqv/modular.hpp"
#include "fqv/rational.hpp"

namespace fqv {

struct Param {
  std::string name;
  std::int64_t value;
  friend bool operator==(const Param&, const Param&) = default;
};

using Params = std::vector<Param>;

/// Outcome of one verification instance.
///
/// Exact and modular records pass iff the canonical renderings of both sides
/// are identical. Floating-point records (tolerance set) pass iff the two
/// sides differ by at most the tolerance.
struct CheckReport {
  std::string family;
  Params params;
  std::optional<u64> modulus;  // nullopt means an exact identity
  std::string lhs;
  std::string rhs;
  bool pass = false;
  std::optional<double> tolerance;
  std::string error;  // set for out-of-domain records

  std::string modulus_str() const;
  std::string params_str() const;  // "p=5;n=2"
};

CheckReport exact_report(std::string family, Params params, const Rational& lhs,
                         const Rational& rhs);
CheckReport exact_report(std::string family, Params params, std::string lhs,
                         std::string rhs);
CheckReport modular_report(std::string family, Params params,
                           const Residue& lhs, const Residue& rhs);
CheckReport tolerance_report(std::string family, Params params, double lhs,
                             double rhs, double tolerance);

}  // namespace fqv
