#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sullivan {

/// Exact arbitrary-precision rational scalar. Everything in the engine is
/// computed over Q; there is no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace sullivan
