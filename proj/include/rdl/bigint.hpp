#pragma once

// Exact arbitrary-precision integers and rationals used throughout the
// library.  Counting paths never touch floating point; the only doubles in
// the project are the final growth-rate readouts.

#include <boost/multiprecision/cpp_int.hpp>

namespace rdl {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is a binomial prefix at every step
    }
    return r;
}

// Division known to be exact by construction; throws if that promise is
// broken, which always indicates a transcription bug upstream.
inline BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("exact_div: division left a remainder");
    return q;
}

}  // namespace rdl
