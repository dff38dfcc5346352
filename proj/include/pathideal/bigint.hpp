#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace pathideal {

// All combinatorial counts and polynomial coefficients use exact
// arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient C(n, k) via the multiplicative formula.
// Out-of-range k (negative or > n) yields 0; n must be >= 0.
inline BigInt binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact at every step
    }
    return result;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace pathideal
