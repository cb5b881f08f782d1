#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace tiered {

// Every quantity in this library is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when a request would exceed the configured exhaustive-search
// capacity.  The CLI maps this to exit code 3.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown by self-checking operations (EGF residuals, Bessel coefficients)
// when a cross-check that must hold fails.  The CLI maps this to exit code 1.
class verification_error : public std::runtime_error {
 public:
  explicit verification_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Integer division that must leave no remainder.
inline Int exact_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b != a)
    throw std::logic_error("exact_div: " + a.str() + " not divisible by " + b.str());
  return q;
}

}  // namespace tiered
