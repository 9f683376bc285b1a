#include "eah/error.hpp"

namespace eah {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::argument: return "argument error";
    case ErrorCode::range: return "range error";
    case ErrorCode::width: return "width error";
    case ErrorCode::truncation: return "truncation error";
    case ErrorCode::corrupt_stream: return "corrupt stream";
    case ErrorCode::corrupt_header: return "corrupt header";
    case ErrorCode::trailing_garbage: return "trailing garbage";
    case ErrorCode::table_incomplete: return "table incomplete";
    case ErrorCode::lookup: return "lookup error";
    case ErrorCode::bad_magic: return "bad magic";
    case ErrorCode::unsupported_version: return "unsupported version";
    case ErrorCode::io: return "I/O error";
  }
  return "error";
}

}  // namespace eah
