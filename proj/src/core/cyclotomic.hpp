// Exact arithmetic in Z[zeta_n], the ring of integers extended by a
// primitive n-th root of unity.
//
// Values are stored canonically as integer vectors of length phi(n):
// the coordinates of the residue modulo the n-th cyclotomic polynomial
// Phi_n in the power basis 1, zeta, ..., zeta^{phi(n)-1}.  Equality of
// canonical vectors is equality in the ring, so "is this coefficient
// zero?" is decidable exactly.
#pragma once

#include <vector>

#include "bigint.hpp"

namespace normcert {

// Dense little-endian integer polynomial, no trailing zeros.
using IntPoly = std::vector<Int>;

long euler_phi(long n);

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

// Quotient of an exact division (throws std::logic_error on nonzero
// remainder); b must be nonzero.
IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b);

// Phi_n, computed by the divisor recursion
//   Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
// and cached for the lifetime of the process.  The cache is guarded by
// a mutex and is a pure memo: results are identical with or without it.
const IntPoly& cyclotomic_polynomial(long n);

class CyclotomicInt {
  public:
    CyclotomicInt() : n_(1), c_(1, Int(0)) {}
    static CyclotomicInt zero(long n);
    static CyclotomicInt integer(long n, const Int& v);
    static CyclotomicInt zeta_power(long n, long k);
    // sum_{x=0}^{n-1} counts[x] * zeta_n^x
    static CyclotomicInt from_zeta_counts(long n, const std::vector<Int>& counts);

    long conductor() const { return n_; }
    const std::vector<Int>& coeffs() const { return c_; }

    bool is_zero() const;
    bool operator==(const CyclotomicInt& o) const {
        return n_ == o.n_ && c_ == o.c_;
    }
    bool operator!=(const CyclotomicInt& o) const { return !(*this == o); }

    CyclotomicInt operator+(const CyclotomicInt& o) const;
    CyclotomicInt operator-(const CyclotomicInt& o) const;
    CyclotomicInt operator*(const CyclotomicInt& o) const;
    CyclotomicInt operator*(const Int& k) const;
    CyclotomicInt operator-() const;

    // Exact scalar division; throws std::logic_error if any coordinate
    // is not divisible.
    CyclotomicInt divided_by(const Int& k) const;

  private:
    CyclotomicInt(long n, std::vector<Int> c) : n_(n), c_(std::move(c)) {}
    long n_;
    std::vector<Int> c_;  // length phi(n_)
};

// Canonical length-phi(n) residue of an arbitrary integer polynomial in
// zeta_n (little-endian coefficient list, any length).
std::vector<Int> reduce_mod_cyclotomic(std::vector<Int> poly, long n);

}  // namespace normcert
