#pragma once

#include <gtest/gtest.h>

#include "eah/error.hpp"
#include "oracles.hpp"

namespace eah::testing {

// Runs fn and returns the code of the eah::Error it throws.
template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an eah::Error";
  return ErrorCode::io;
}

}  // namespace eah::testing
