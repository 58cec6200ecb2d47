#include "witness.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "expansion.hpp"

namespace normcert {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<long, long> least_prime_and_cofactor(long n) {
    if (n <= 1 || is_prime(n))
        throw std::invalid_argument(
            "least_prime_and_cofactor requires a composite order");
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return {p, n / p};
    throw std::logic_error("unreachable: composite has a small factor");
}

namespace {

void partitions_desc(long e, long max_part, std::vector<long>& cur,
                     std::vector<std::vector<long>>& out) {
    if (e == 0) {
        out.push_back(cur);
        return;
    }
    for (long part = std::min(e, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_desc(e - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<long>> all_abelian_groups(long order) {
    if (order < 1) throw std::invalid_argument("order must be positive");
    if (order == 1) return {{1}};
    // Factor the order, then combine one exponent partition per prime
    // into a canonical divisor chain.
    std::vector<std::pair<long, long>> factorization;  // (prime, exponent)
    long m = order;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            long e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            factorization.push_back({p, e});
        }
    }
    if (m > 1) factorization.push_back({m, 1});

    std::vector<std::vector<std::vector<long>>> per_prime;
    for (auto& [p, e] : factorization) {
        std::vector<std::vector<long>> parts;
        std::vector<long> cur;
        partitions_desc(e, e, cur, parts);
        per_prime.push_back(std::move(parts));
    }
    std::vector<std::vector<long>> chains;
    std::vector<std::size_t> choice(per_prime.size(), 0);
    while (true) {
        std::size_t layers = 0;
        for (std::size_t i = 0; i < per_prime.size(); ++i)
            layers = std::max(layers, per_prime[i][choice[i]].size());
        std::vector<long> chain(layers, 1);
        for (std::size_t i = 0; i < per_prime.size(); ++i) {
            const std::vector<long>& part = per_prime[i][choice[i]];
            for (std::size_t j = 0; j < part.size(); ++j) {
                long pk = 1;
                for (long t = 0; t < part[j]; ++t) pk *= factorization[i].first;
                chain[j] *= pk;
            }
        }
        std::reverse(chain.begin(), chain.end());  // ascending divisibility
        chains.push_back(std::move(chain));
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == per_prime[i].size())
            choice[i++] = 0;
        if (i == choice.size()) break;
    }
    std::sort(chains.begin(), chains.end());
    return chains;
}

Exponents case_Ia_formal(long n) {
    auto [p, q] = least_prime_and_cofactor(n);
    if (q % p != 0)
        throw std::invalid_argument("Case Ia needs p to divide q = n/p");
    Exponents e(n, 0);
    e[0] += 1;
    e[1 % n] += q - 2;
    e[(n - q + 2) % n] += 1;
    e[q % n] += (p - 1) * q;
    return e;
}

namespace {

std::string cyclic_subgroup_note(long gen, long order) {
    std::ostringstream s;
    s << "H = <" << gen << "> of order " << order;
    return s.str();
}

}  // namespace

WitnessMonomial witness_case_Ia(long n) {
    auto [p, q] = least_prime_and_cofactor(n);
    if (q % p != 0)
        throw std::invalid_argument("Case Ia needs p to divide q = n/p");
    if (n == 4)
        throw std::invalid_argument(
            "Case Ia collapses at n = 4 (index collision yields X_0^2 X_2^2 "
            "with nonzero coefficient)");
    return {"Ia", case_Ia_formal(n), p, q, cyclic_subgroup_note(p, q)};
}

WitnessMonomial witness_case_Ib(long n) {
    auto [p, q] = least_prime_and_cofactor(n);
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("Case Ib needs gcd(p, q) = 1");
    Exponents e(n, 0);
    e[0] += q - 2;
    e[(q - p) % n] += 1;
    e[(n - q + p) % n] += 1;
    e[p % n] += (p - 1) * q;
    return {"Ib", std::move(e), p, q, cyclic_subgroup_note(q, p)};
}

WitnessMonomial witness_case_II(const AbelianGroup& g) {
    const std::vector<long>& q_ = g.moduli();
    const long r = g.rank();
    if (g.moduli() != g.normalized())
        throw std::invalid_argument("Case II needs the canonical moduli chain");
    if (r < 2 || q_[r - 1] < 3)
        throw std::invalid_argument("Case II needs r >= 2 and q_r >= 3");
    const long n = g.order();
    const long q1 = q_[0];
    const long q = n / q1;
    Exponents e(n, 0);
    Element ones(r, 1), mid(r, 0), top(r, 0);
    for (long i = 1; i < r; ++i) {
        mid[i] = 1;
        top[i] = q_[i] - 1;
    }
    e[0] += q - 2;
    e[g.index_of(mid)] += 1;
    e[g.index_of(top)] += 1;
    e[g.index_of(ones)] += q * (q1 - 1);
    std::ostringstream note;
    note << "H = 0 x Z/" << q_[1];
    for (long i = 2; i < r; ++i) note << " x Z/" << q_[i];
    note << " of order " << q;
    return {"II", std::move(e), q1, q, note.str()};
}

WitnessMonomial witness_case_III(const AbelianGroup& g) {
    const long k = g.rank();
    for (long q : g.moduli())
        if (q != 2)
            throw std::invalid_argument("Case III needs G = (Z/2)^k");
    if (k < 3) throw std::invalid_argument("Case III needs k >= 3");
    const long n = g.order();
    const long q = n / 2;
    // Elements with first coordinate 0 are exactly ranks 0..n/2-1.
    Exponents e(n, 0);
    for (long v = 0; v < q; ++v) e[v] += 1;
    e[n - 1] += q;  // rank n-1 = (1,...,1)
    std::ostringstream note;
    note << "U = 0 x (Z/2)^" << (k - 1) << " of order " << q;
    return {"III", std::move(e), 2, q, note.str()};
}

WitnessMonomial select_witness(const AbelianGroup& g) {
    const long n = g.order();
    if (n <= 1 || is_prime(n) || n == 4)
        throw std::invalid_argument(
            "no witness is defined for order 1, prime order, or order 4");
    std::vector<long> canon = g.normalized();
    AbelianGroup cg(canon);
    if (canon.size() == 1) {
        auto [p, q] = least_prime_and_cofactor(n);
        return q % p == 0 ? witness_case_Ia(n) : witness_case_Ib(n);
    }
    bool all_two = true;
    for (long q : canon)
        if (q != 2) all_two = false;
    if (all_two) return witness_case_III(cg);
    return witness_case_II(cg);
}

bool verify_witness(const AbelianGroup& g, const Exponents& monomial) {
    if (degree_of(monomial) != g.order())
        throw std::invalid_argument("witness degree must equal |G|");
    if (weight_rank(g, monomial) != 0)
        throw std::invalid_argument("witness must be invariant (weight zero)");
    return eigen_coefficient(g, monomial).is_zero();
}

std::vector<std::vector<Exponents>> h_invariant_factorizations(
    long n, const Exponents& monomial) {
    auto [p, q] = least_prime_and_cofactor(n);
    if (q % p != 0)
        throw std::invalid_argument(
            "factorization enumeration needs p | q (Case Ia setting)");
    if (static_cast<long>(monomial.size()) != n || degree_of(monomial) != n)
        throw std::invalid_argument("monomial must have degree n over Z/n");
    AbelianGroup g({n});
    if (weight_rank(g, monomial) != 0)
        throw std::invalid_argument("monomial must be invariant");

    // All degree-q divisors D <= M with sum_l l*D_l = 0 mod q, i.e.
    // invariance under the order-q subgroup <p>.
    std::vector<Exponents> divisors;
    Exponents cur(n, 0);
    auto enumerate = [&](auto&& self, long var, long deg, long wt) -> void {
        if (deg == q) {
            if (wt % q == 0) divisors.push_back(cur);
            return;
        }
        if (var == n) return;
        long cap = std::min(monomial[var], q - deg);
        for (long e = 0; e <= cap; ++e) {
            cur[var] = e;
            self(self, var + 1, deg + e, wt + e * var);
            cur[var] = 0;
        }
    };
    enumerate(enumerate, 0, 0, 0);
    std::sort(divisors.begin(), divisors.end());

    // Nondecreasing p-tuples of divisors multiplying back to M.
    std::vector<std::vector<Exponents>> tuples;
    std::vector<long> pick;
    Exponents remaining = monomial;
    auto fits = [&](const Exponents& d) {
        for (long v = 0; v < n; ++v)
            if (d[v] > remaining[v]) return false;
        return true;
    };
    auto search = [&](auto&& self, long from, long taken) -> void {
        if (taken == p) {
            if (degree_of(remaining) == 0) {
                std::vector<Exponents> tuple;
                for (long idx : pick) tuple.push_back(divisors[idx]);
                tuples.push_back(std::move(tuple));
            }
            return;
        }
        for (long i = from; i < static_cast<long>(divisors.size()); ++i) {
            if (!fits(divisors[i])) continue;
            for (long v = 0; v < n; ++v) remaining[v] -= divisors[i][v];
            pick.push_back(i);
            self(self, i, taken + 1);
            pick.pop_back();
            for (long v = 0; v < n; ++v) remaining[v] += divisors[i][v];
        }
    };
    search(search, 0, 0);
    return tuples;
}

std::vector<Int> prime_S_counts(long p, const std::vector<long>& a) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (p > 11)
        throw std::invalid_argument(
            "permutation enumeration limited to p <= 11");
    if (static_cast<long>(a.size()) != p)
        throw std::invalid_argument("composition must have length p");
    long total = 0;
    for (long ai : a) {
        if (ai < 0) throw std::invalid_argument("composition parts >= 0");
        total += ai;
    }
    if (total != p)
        throw std::invalid_argument("composition parts must sum to p");
    // slot_block[j] = r for the slot at position j (0-based), from the
    // prefix sums of a.
    std::vector<long> slot_block;
    for (long r = 0; r < p; ++r)
        for (long c = 0; c < a[r]; ++c) slot_block.push_back(r);
    std::vector<Int> counts(p, Int(0));
    std::vector<long> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        long w = 0;
        for (long j = 0; j < p; ++j) w += perm[j] * slot_block[j];
        counts[w % p] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return counts;
}

PrimeCertificate prime_certificate(long p, const std::vector<long>& a) {
    long weighted = 0;
    for (std::size_t i = 0; i < a.size(); ++i) weighted += a[i] * i;
    PrimeCertificate cert;
    cert.p = p;
    cert.a = a;
    cert.counts = prime_S_counts(p, a);  // validates p and a's shape
    if (weighted % p != 0)
        throw std::invalid_argument(
            "composition must satisfy sum i*a_i = 0 mod p");

    Int total = 0;
    for (const Int& c : cert.counts) total += c;
    cert.sum_is_factorial = (total == factorial(p));

    cert.p_divides_counts = true;
    for (const Int& c : cert.counts)
        if (c % p != 0) cert.p_divides_counts = false;

    cert.count0_ne_count1 = (cert.counts[0] != cert.counts[1]);

    cert.unit_symmetry = true;
    for (long u = 1; u < p; ++u)
        for (long x = 0; x < p; ++x)
            if (cert.counts[(u * x) % p] != cert.counts[x])
                cert.unit_symmetry = false;

    cert.reduced = CyclotomicInt::from_zeta_counts(p, cert.counts);
    cert.reduced_nonzero = !cert.reduced.is_zero();

    AbelianGroup zp({p});
    Exponents multiset(a.begin(), a.end());
    Int arr_count = 1;
    for (long ai : a) arr_count *= factorial(ai);
    CyclotomicInt expected = eigen_coefficient(zp, multiset) * arr_count;
    cert.matches_eigen = (cert.reduced == expected);
    return cert;
}

Lemma2Result lemma2_counts(long k, unsigned long v1) {
    if (k < 1) throw std::invalid_argument("dimension k must be >= 1");
    if (k > 4)
        throw std::invalid_argument(
            "exhaustive subset enumeration limited to k <= 4");
    const unsigned long universe = 1ul << k;
    if (v1 == 0) throw std::invalid_argument("v1 must be a nonzero vector");
    if (v1 >= universe)
        throw std::invalid_argument("v1 must have k coordinates");
    Lemma2Result res;
    res.k = k;
    res.v1 = v1;
    const unsigned long n_subsets = 1ul << universe;
    for (unsigned long mask = 0; mask < n_subsets; ++mask) {
        unsigned long xorsum = 0;
        for (unsigned long e = 0; e < universe; ++e)
            if ((mask >> e) & 1ul) xorsum ^= e;
        bool odd = (__builtin_popcountl(mask) & 1) != 0;
        if (!odd && xorsum == 0) {
            ++res.count_even_zero;
            res.pairing.push_back({mask, mask ^ (1ul << v1)});
        } else if (odd && xorsum == v1) {
            ++res.count_odd_v1;
        }
    }
    return res;
}

}  // namespace normcert
