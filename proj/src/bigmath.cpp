#include "cubefree/bigmath.hpp"

namespace cubefree {

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    // result stays integral at every step: the partial product of i
    // consecutive integers is divisible by i!.
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt pow2(unsigned exponent) { return BigInt{1} << exponent; }

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

double to_double(const BigInt& value) { return value.convert_to<double>(); }

double to_double(const BigRat& value) { return value.convert_to<double>(); }

BigInt ceil_rational(const BigRat& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);  // positive
    BigInt q = num / den;
    if (q * den != num && num > 0) ++q;
    return q;
}

}  // namespace cubefree
