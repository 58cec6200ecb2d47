// Arbitrary-precision integer/rational aliases and small helpers.
// All exact arithmetic in the library flows through these types; no
// computation that affects a result is ever done in floating point.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace normcert {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    Int r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// Decimal string, used for serialization when a value exceeds int64.
inline std::string to_decimal(const Int& v) { return v.get_str(10); }

inline bool fits_int64(const Int& v) {
    return v >= Int("-9223372036854775808") && v <= Int("9223372036854775807");
}

inline std::int64_t to_int64(const Int& v) {
    return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

}  // namespace normcert
