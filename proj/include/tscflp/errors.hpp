#pragma once

#include <stdexcept>
#include <string>

namespace tscflp {

/// Malformed instance file: missing key, wrong type, wrong shape.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string key, const std::string& what)
      : std::runtime_error("instance key '" + key + "': " + what), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Well-formed data that violates a model invariant (non-positive values,
/// insufficient total capacity, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Capacity cannot cover demand. `stage` is "plant" or "depot" when the
/// shortfall is attributable to one stage, otherwise "network".
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(std::string stage, const std::string& what)
      : std::runtime_error(what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace tscflp
