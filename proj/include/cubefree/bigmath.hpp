#pragma once

// Exact arithmetic helpers shared by the bound formulas. Everything here is
// arbitrary precision so no formula is capped by the machine word.

#include <boost/multiprecision/cpp_int.hpp>

namespace cubefree {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

BigInt pow2(unsigned exponent);

bool is_prime(int p);

double to_double(const BigInt& value);
double to_double(const BigRat& value);

// ceil(value) for a nonnegative rational.
BigInt ceil_rational(const BigRat& value);

}  // namespace cubefree
