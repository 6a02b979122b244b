#pragma once

#include <stdexcept>
#include <string>

#include "hwp/factor.hpp"

namespace hwp {

inline constexpr const char* kSchemaVersion = "1";

/// Malformed or non-canonical certificate document. `location` is a JSON
/// path such as "factors[3].arcs[5]" or "byte 120" for syntax errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, const std::string& what)
      : std::runtime_error(location + ": " + what), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

/// Canonical JSON document: keys sorted, one factor per line, factors in
/// canonical order. The certificate is canonicalized on a copy first, so
/// equal certificates serialize to identical bytes.
std::string serialize(const Certificate& c);

/// Throws ParseError on syntax errors, schema violations, an unknown schema
/// version, duplicate or unsorted arcs, or factors out of canonical order.
/// The result is not verified; use check_certificate for that.
Certificate deserialize(const std::string& text);

}  // namespace hwp
