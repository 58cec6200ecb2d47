// Degeneracy witness constructions for composite orders, prime-case
// counting certificates, subgroup-invariant factorizations, and the
// even/odd subset bijection.
//
// Witness constructions (all invariant of degree n = |G|, indices of
// cyclic labels reduced mod n; p = least prime divisor, q = n/p):
//   Ia  (cyclic, p | q):      X_0 X_1^{q-2} X_{n-q+2} X_q^{(p-1)q}
//   Ib  (cyclic, gcd(p,q)=1): X_0^{q-2} X_{q-p} X_{n-q+p} X_p^{(p-1)q}
//   II  (canonical q_1|...|q_r, r >= 2, q_r >= 3; q = n/q_1):
//        X_{(0,..,0)}^{q-2} X_{(0,1,..,1)} X_{(0,q_2-1,..,q_r-1)}
//        X_{(1,..,1)}^{q(q_1-1)}
//   III ((Z/2)^k, k >= 3; q = n/2, U = 0 + (Z/2)^{k-1}):
//        (prod_{v in U} X_v) X_{(1,..,1)}^q
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "criterion.hpp"
#include "cyclotomic.hpp"
#include "group.hpp"
#include "monomial.hpp"

namespace normcert {

struct WitnessMonomial {
    std::string case_tag;  // "Ia" | "Ib" | "II" | "III"
    Exponents exps;        // over characters of the canonical group
    long p = 0;
    long q = 0;
    std::string subgroup;  // human-readable parameter note
};

// (least prime divisor, cofactor); n prime or n <= 1 -> invalid-argument.
std::pair<long, long> least_prime_and_cofactor(long n);

bool is_prime(long n);

// Canonical moduli chains d1 | d2 | ... of every abelian group of the
// given order, sorted ascending lexicographically.
std::vector<std::vector<long>> all_abelian_groups(long order);

// The Case Ia exponent vector with no collapse guard; at n = 4 the
// indices collide and the result X_0^2 X_2^2 is not a witness (its
// coefficient is -2), which is exactly why constructors reject n = 4.
Exponents case_Ia_formal(long n);

WitnessMonomial witness_case_Ia(long n);
WitnessMonomial witness_case_Ib(long n);
WitnessMonomial witness_case_II(const AbelianGroup& g);
WitnessMonomial witness_case_III(const AbelianGroup& g);

// Dispatch on the canonical form of G: cyclic -> Ia/Ib by the p|q
// test; (Z/2)^k with k >= 3 -> III; otherwise -> II.  |G| prime, 1, or
// 4 -> invalid-argument.  The monomial lives over the canonical group
// normalize(G); use witness_group() for its labels.
WitnessMonomial select_witness(const AbelianGroup& g);

// True iff the monomial's diagonal coefficient is exactly zero.  The
// monomial must be invariant of degree |G|.
bool verify_witness(const AbelianGroup& g, const Exponents& monomial);

// All unordered p-tuples of H-invariant degree-q monomials whose
// product is M, where n = pq with p the least prime divisor, p | q,
// and H is the unique subgroup of order q (generated by p); a monomial
// D is H-invariant iff sum_l l*D_l = 0 mod q.  Tuples are listed with
// components ascending.
std::vector<std::vector<Exponents>> h_invariant_factorizations(
    long n, const Exponents& monomial);

// counts[x] = |S_{x,a}|: permutations of {0,...,p-1} placed in slots
// 1..p grouped in blocks by a (slot j carries block weight r when
// b_{r-1} < j <= b_r, b the prefix sums), counted by
// w(s) = sum_j s(j)*r(j) mod p.
std::vector<Int> prime_S_counts(long p, const std::vector<long>& a);

struct PrimeCertificate {
    long p = 0;
    std::vector<long> a;
    std::vector<Int> counts;  // counts[x], x = 0..p-1
    CyclotomicInt reduced;    // sum_x counts[x] zeta^x, canonical mod Phi_p

    bool sum_is_factorial = false;       // sum_x counts[x] = p!
    bool p_divides_counts = false;       // p | counts[x] for all x
    bool count0_ne_count1 = false;       // counts[0] != counts[1]
    bool unit_symmetry = false;          // counts[u*x] = counts[x], u unit
    bool reduced_nonzero = false;        // reduced != 0
    bool matches_eigen = false;          // reduced = (prod a_i!) * eigen coeff

    bool all_ok() const {
        return sum_is_factorial && p_divides_counts && count0_ne_count1 &&
               unit_symmetry && reduced_nonzero && matches_eigen;
    }
};

// Assembles the counts and evaluates every certificate check.  Check
// outcomes are reported in the returned struct; callers decide whether
// a failure is fatal (a failing check signals an engine bug or a false
// upstream claim, not bad input).
PrimeCertificate prime_certificate(long p, const std::vector<long>& a);

struct Lemma2Result {
    long k = 0;
    unsigned long v1 = 0;  // nonzero vector of F_2^k, encoded by bits
    long count_even_zero = 0;  // subsets A: |A| even, sum A = 0
    long count_odd_v1 = 0;     // subsets A: |A| odd,  sum A = v1
    // The pairing A -> A symm-diff {v1}, one pair per even-zero subset
    // (subsets encoded as bitmasks over the 2^k universe elements).
    std::vector<std::pair<unsigned long, unsigned long>> pairing;
};

// Exhaustive over all 2^(2^k) subsets; k <= 4 (65536 subsets at k=4).
Lemma2Result lemma2_counts(long k, unsigned long v1);

}  // namespace normcert
