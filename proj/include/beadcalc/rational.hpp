// Exact arbitrary-precision integer and rational scalars used everywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace beadcalc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised on domain errors: bad input files, violated preconditions, etc.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "3", "-5/2"; used by both the Laurent parser and element files.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

}  // namespace beadcalc
