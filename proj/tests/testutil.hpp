#ifndef FPL_TESTS_TESTUTIL_HPP_
#define FPL_TESTS_TESTUTIL_HPP_

#include <string>

#include <fpl/common.hpp>

// Runs f and returns the error code it fails with, or "" if it succeeds.
template <class F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const fpl::Error& e) {
    return e.code;
  }
  return "";
}

#endif
