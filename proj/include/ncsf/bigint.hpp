#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncsf {

/// Arbitrary-precision signed integer used for every coefficient.
using BigInt = boost::multiprecision::cpp_int;

/// Thrown when an operation is asked to work past its configured degree bound.
class DegreeBoundExceeded : public std::out_of_range {
public:
    DegreeBoundExceeded(const std::string& what, int n, int bound)
        : std::out_of_range(what + ": degree " + std::to_string(n) + " exceeds bound " +
                            std::to_string(bound)),
          degree(n), limit(bound) {}
    int degree;
    int limit;
};

inline void check_degree_bound(const char* what, int n, int bound) {
    if (n > bound) throw DegreeBoundExceeded(what, n, bound);
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace ncsf
