#include "cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace normcert {

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

void poly_trim(IntPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    poly_trim(out);
    return out;
}

IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.empty()) throw std::logic_error("polynomial division by zero");
    IntPoly rem = a;
    poly_trim(rem);
    if (rem.size() < b.size()) {
        if (!rem.empty()) throw std::logic_error("inexact polynomial division");
        return {};
    }
    IntPoly quot(rem.size() - b.size() + 1, Int(0));
    const Int& lead = b.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int top = rem[k + b.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0)
            throw std::logic_error("inexact polynomial division");
        Int q = top / lead;
        quot[k] = q;
        for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= q * b[j];
    }
    for (const Int& r : rem)
        if (r != 0) throw std::logic_error("inexact polynomial division");
    poly_trim(quot);
    return quot;
}

const IntPoly& cyclotomic_polynomial(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
    static std::map<long, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto hit = cache.find(n);
    if (hit != cache.end()) return hit->second;
    // Fill the cache bottom-up over all divisors of n (lock held).
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0 || cache.count(d)) continue;
        IntPoly xd_minus_1(d + 1, Int(0));
        xd_minus_1[0] = -1;
        xd_minus_1[d] = 1;
        IntPoly lower = {Int(1)};
        for (long e = 1; e < d; ++e)
            if (d % e == 0) lower = poly_mul(lower, cache.at(e));
        cache.emplace(d, poly_div_exact(xd_minus_1, lower));
    }
    return cache.at(n);
}

std::vector<Int> reduce_mod_cyclotomic(std::vector<Int> poly, long n) {
    const IntPoly& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;  // = euler_phi(n), phi is monic
    // Fold exponents mod n first (zeta^n = 1), keeping sizes small.
    if (poly.size() > static_cast<std::size_t>(n)) {
        std::vector<Int> folded(n, Int(0));
        for (std::size_t i = 0; i < poly.size(); ++i)
            folded[i % n] += poly[i];
        poly.swap(folded);
    }
    // Remainder modulo the monic phi: clear every coefficient at
    // degree >= deg, from the top down.
    for (std::size_t k = poly.size(); k-- > deg;) {
        std::size_t shift = k - deg;
        Int top = poly[k];
        if (top == 0) continue;
        for (std::size_t j = 0; j < phi.size(); ++j)
            poly[shift + j] -= top * phi[j];
    }
    poly.resize(deg, Int(0));
    std::vector<Int> out(deg, Int(0));
    for (std::size_t i = 0; i < poly.size() && i < deg; ++i) out[i] = poly[i];
    return out;
}

CyclotomicInt CyclotomicInt::zero(long n) {
    return CyclotomicInt(n, std::vector<Int>(euler_phi(n), Int(0)));
}

CyclotomicInt CyclotomicInt::integer(long n, const Int& v) {
    std::vector<Int> c(euler_phi(n), Int(0));
    if (euler_phi(n) >= 1) c[0] = v;
    return CyclotomicInt(n, std::move(c));
}

CyclotomicInt CyclotomicInt::zeta_power(long n, long k) {
    k %= n;
    if (k < 0) k += n;
    std::vector<Int> poly(k + 1, Int(0));
    poly[k] = 1;
    return CyclotomicInt(n, reduce_mod_cyclotomic(std::move(poly), n));
}

CyclotomicInt CyclotomicInt::from_zeta_counts(long n,
                                              const std::vector<Int>& counts) {
    if (counts.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("zeta count vector must have length n");
    return CyclotomicInt(n, reduce_mod_cyclotomic(counts, n));
}

bool CyclotomicInt::is_zero() const {
    for (const Int& v : c_)
        if (v != 0) return false;
    return true;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("conductor mismatch");
    std::vector<Int> c(c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return CyclotomicInt(n_, std::move(c));
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("conductor mismatch");
    std::vector<Int> c(c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
    return CyclotomicInt(n_, std::move(c));
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("conductor mismatch");
    std::vector<Int> prod(poly_mul(c_, o.c_));
    prod.resize(std::max<std::size_t>(prod.size(), 1), Int(0));
    return CyclotomicInt(n_, reduce_mod_cyclotomic(std::move(prod), n_));
}

CyclotomicInt CyclotomicInt::operator*(const Int& k) const {
    std::vector<Int> c(c_);
    for (Int& v : c) v *= k;
    return CyclotomicInt(n_, std::move(c));
}

CyclotomicInt CyclotomicInt::operator-() const {
    std::vector<Int> c(c_);
    for (Int& v : c) v = -v;
    return CyclotomicInt(n_, std::move(c));
}

CyclotomicInt CyclotomicInt::divided_by(const Int& k) const {
    if (k == 0) throw std::logic_error("division by zero");
    std::vector<Int> c(c_);
    for (Int& v : c) {
        if (v % k != 0) throw std::logic_error("inexact cyclotomic division");
        v /= k;
    }
    return CyclotomicInt(n_, std::move(c));
}

}  // namespace normcert
