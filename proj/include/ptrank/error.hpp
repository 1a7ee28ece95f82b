#ifndef PTRANK_ERROR_HPP
#define PTRANK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ptrank {

/// Base error for contract violations (dimension mismatches, invalid
/// arguments, domain errors such as the zero matrix).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when parsing a JSON document fails. `field()` names the
/// offending field (dotted path, e.g. "entries[3][1]").
class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& msg)
      : Error("parse error at '" + field + "': " + msg), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Raised when a verified rank bound fails on a concrete instance.
/// Carries the full instance as JSON so the failure is reproducible.
class BoundViolation : public Error {
 public:
  BoundViolation(const std::string& msg, std::string instance_json)
      : Error(msg), instance_json_(std::move(instance_json)) {}
  const std::string& instance_json() const { return instance_json_; }

 private:
  std::string instance_json_;
};

}  // namespace ptrank

#endif  // PTRANK_ERROR_HPP
