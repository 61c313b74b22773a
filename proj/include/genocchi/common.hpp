#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace genocchi {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when an identity that must hold by construction fails
/// (inexact division, a bijection producing an invalid object, ...).
/// Seeing one means there is a bug, not bad input.
class IntegrityError : public std::logic_error {
public:
  explicit IntegrityError(const std::string& what) : std::logic_error(what) {}
};

inline long long binom2(long long n) { return n * (n - 1) / 2; }

} // namespace genocchi
