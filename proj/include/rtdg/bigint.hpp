#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rtdg {

// Counts (q^n, n!, chromatic numbers of formula expressions) overflow 64 bits
// quickly; all counting arithmetic stays exact.
using BigInt = boost::multiprecision::cpp_int;

BigInt int_pow(const BigInt& base, unsigned exp);
BigInt factorial(unsigned n);

} // namespace rtdg
