#include "rtdg/bigint.hpp"

namespace rtdg {

BigInt int_pow(const BigInt& base, unsigned exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1u) result *= b;
        exp >>= 1u;
        if (exp > 0) b *= b;
    }
    return result;
}

BigInt factorial(unsigned n) {
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

} // namespace rtdg
