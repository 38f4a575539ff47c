#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bwprob {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Integer power with arbitrary-precision result.
BigInt big_pow(const BigInt& base, long exp);

// Natural log of a positive big integer, accurate to double precision even
// when the value itself overflows double range.
double log_big(const BigInt& x);

// Natural log of a positive rational in (0, inf).
double log_big(const BigRat& x);

}  // namespace bwprob
