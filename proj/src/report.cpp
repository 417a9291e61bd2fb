#include "fqv/report.hpp"

#include <cmath>

#include <fmt/format.h>

#include "fqv/errors.hpp"

namespace fqv {

std::string CheckReport::modulus_str() const {
  if (tolerance) return "float";
  return modulus ? std::to_string(*modulus) : "exact";
}

std::string CheckReport::params_str() const {
  std::string s;
  for (const auto& p : params) {
    if (!s.empty()) s += ';';
    s += p.name + '=' + std::to_string(p.value);
  }
  return s;
}

CheckReport exact_report(std::string family, Params params, const Rational& lhs,
                         const Rational& rhs) {
  return exact_report(std::move(family), std::move(params), lhs.str(),
                      rhs.str());
}

CheckReport exact_report(std::string family, Params params, std::string lhs,
                         std::string rhs) {
  CheckReport r;
  r.family = std::move(family);
  r.params = std::move(params);
  r.pass = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

CheckReport modular_report(std::string family, Params params,
                           const Residue& lhs, const Residue& rhs) {
  if (lhs.modulus() != rhs.modulus()) {
    throw ModulusMismatch("report sides reduced modulo different moduli");
  }
  CheckReport r =
      exact_report(std::move(family), std::move(params),
                   std::to_string(lhs.value()), std::to_string(rhs.value()));
  r.modulus = lhs.modulus();
  return r;
}

CheckReport tolerance_report(std::string family, Params params, double lhs,
                             double rhs, double tolerance) {
  CheckReport r;
  r.family = std::move(family);
  r.params = std::move(params);
  r.lhs = fmt::format("{:.12f}", lhs);
  r.rhs = fmt::format("{:.12f}", rhs);
  r.tolerance = tolerance;
  r.pass = std::fabs(lhs - rhs) <= tolerance;
  return r;
}

}  // namespace fqv
