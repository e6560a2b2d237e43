#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "tjurina/errors.hpp"

namespace tjurina {

// Exact arbitrary-precision rational coefficient type.  Every computation in
// the library is carried out over Q; no floating point appears anywhere.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) { return q.str(); }

// Parses "p" or "p/q" (q > 0 after normalisation).  Used by the expression
// parser and by point literals in scripts.
inline Rational parse_rational(const std::string& text) {
  try {
    Rational q(text);
    return q;
  } catch (const std::exception&) {
    throw DomainError("not a rational literal: '" + text + "'");
  }
}

}  // namespace tjurina
