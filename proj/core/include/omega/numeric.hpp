#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace omega {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);
double to_double(const Rational& r);
// natural log of a positive big integer, accurate to double precision
double log_big(const BigInt& v);

}  // namespace omega
