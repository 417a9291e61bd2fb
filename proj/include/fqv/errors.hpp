#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fqv {

/// Parameter outside the domain where an identity or congruence is claimed.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a modular inverse does not exist; carries gcd(a, m).
class NotInvertible : public std::domain_error {
 public:
  NotInvertible(std::uint64_t gcd, const std::string& what)
      : std::domain_error(what), gcd_(gcd) {}
  std::uint64_t gcd() const noexcept { return gcd_; }

 private:
  std::uint64_t gcd_;
};

class NotPrime : public std::domain_error {
 public:
  explicit NotPrime(std::uint64_t n)
      : std::domain_error("not an odd prime: " + std::to_string(n)), n_(n) {}
  std::uint64_t value() const noexcept { return n_; }

 private:
  std::uint64_t n_;
};

// Arithmetic between residues with different moduli. This is a bug in the
// caller, never a property of the data.
class ModulusMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace fqv
