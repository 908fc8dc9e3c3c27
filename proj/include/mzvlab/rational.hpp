#ifndef MZVLAB_RATIONAL_HPP
#define MZVLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace mzvlab {

// Exact rational arithmetic for formal-sum coefficients and small-n
// harmonic sums. cpp_rational keeps canonical lowest terms with a
// positive denominator, which is exactly the invariant we need.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline BigInt factorial(long n) {
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace mzvlab

#endif
