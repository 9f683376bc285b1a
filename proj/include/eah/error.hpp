#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eah {

enum class ErrorCode {
  argument,
  range,
  width,
  truncation,
  corrupt_stream,
  corrupt_header,
  trailing_garbage,
  table_incomplete,
  lookup,
  bad_magic,
  unsupported_version,
  io,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eah
