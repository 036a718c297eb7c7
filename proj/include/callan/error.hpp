#pragma once

#include <stdexcept>
#include <string>

namespace callan {

enum class ErrorCode {
  invalid_argument,
  out_of_range,
  division_by_zero,
  non_series_quotient,
  invalid_composition,
  domain,
  consistency,
  unsupported,
  parse,
};

// Single exception type for the library; the code selects the C status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace callan
