// Shared plumbing: exact arithmetic aliases, the error type, small helpers.
#ifndef FPL_COMMON_HPP_
#define FPL_COMMON_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fpl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Every recoverable failure carries a stable machine-readable code (the part
// callers and tests match on) plus a human-readable message.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

inline BigInt factorial(long n) {
  BigInt r = 1;
  for (long i = 2; i <= n; ++i)
    r *= i;
  return r;
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || k > n)
    return 0;
  if (k > n - k)
    k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline std::string str(const BigInt& v) { return v.str(); }

// Rationals print as "p" or "p/q", always in lowest terms.
inline std::string str(const Rational& v) {
  std::string s = numerator(v).str();
  if (denominator(v) != 1)
    s += "/" + denominator(v).str();
  return s;
}

}  // namespace fpl

#endif
