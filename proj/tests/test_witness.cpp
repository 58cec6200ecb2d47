#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "core/bigint.hpp"
#include "core/expansion.hpp"
#include "core/witness.hpp"

using namespace normcert;

namespace {
// Builds a dense exponent vector of length n from sparse {index: exp}.
Exponents sparse(long n, std::initializer_list<std::pair<long, long>> terms) {
    Exponents e(n, 0);
    for (auto [i, v] : terms) e[i] += v;
    return e;
}
}  // namespace

TEST_CASE("primality and least-prime splitting") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(least_prime_and_cofactor(12) == std::pair<long, long>(2, 6));
    CHECK(least_prime_and_cofactor(15) == std::pair<long, long>(3, 5));
    CHECK_THROWS_AS(least_prime_and_cofactor(7), std::invalid_argument);
    CHECK_THROWS_AS(least_prime_and_cofactor(1), std::invalid_argument);
}

TEST_CASE("all abelian groups of a given order") {
    CHECK(all_abelian_groups(1) ==
          std::vector<std::vector<long>>{{1}});
    CHECK(all_abelian_groups(6) == std::vector<std::vector<long>>{{6}});
    CHECK(all_abelian_groups(8) ==
          std::vector<std::vector<long>>({{2, 2, 2}, {2, 4}, {8}}));
    CHECK(all_abelian_groups(12) ==
          std::vector<std::vector<long>>({{2, 6}, {12}}));
    CHECK(all_abelian_groups(36).size() == 4);
    // Every listed chain is canonical: d1 | d2 | ... with product = order.
    for (const auto& chain : all_abelian_groups(72)) {
        long prod = 1;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            prod *= chain[i];
            if (i) CHECK(chain[i] % chain[i - 1] == 0);
        }
        CHECK(prod == 72);
    }
}

TEST_CASE("case Ia witnesses") {
    CHECK(case_Ia_formal(4) == Exponents({2, 0, 2, 0}));

    auto w8 = witness_case_Ia(8);
    CHECK(w8.case_tag == "Ia");
    CHECK(w8.p == 2);
    CHECK(w8.q == 4);
    CHECK(w8.exps == sparse(8, {{0, 1}, {1, 2}, {6, 1}, {4, 4}}));

    auto w9 = witness_case_Ia(9);
    CHECK(w9.p == 3);
    CHECK(w9.q == 3);
    CHECK(w9.exps == sparse(9, {{0, 1}, {1, 1}, {8, 1}, {3, 6}}));

    auto w12 = witness_case_Ia(12);
    CHECK(w12.exps == sparse(12, {{0, 1}, {1, 4}, {8, 1}, {6, 6}}));

    CHECK_THROWS_AS(witness_case_Ia(4), std::invalid_argument);
    CHECK_THROWS_AS(witness_case_Ia(6), std::invalid_argument);  // 2 ∤ 3
    CHECK_THROWS_AS(witness_case_Ia(7), std::invalid_argument);
}

TEST_CASE("case Ib witnesses") {
    auto w6 = witness_case_Ib(6);
    CHECK(w6.case_tag == "Ib");
    CHECK(w6.p == 2);
    CHECK(w6.q == 3);
    CHECK(w6.exps == sparse(6, {{0, 1}, {1, 1}, {5, 1}, {2, 3}}));

    auto w10 = witness_case_Ib(10);
    CHECK(w10.exps == sparse(10, {{0, 3}, {3, 1}, {7, 1}, {2, 5}}));

    auto w15 = witness_case_Ib(15);
    CHECK(w15.p == 3);
    CHECK(w15.q == 5);
    CHECK(w15.exps == sparse(15, {{0, 3}, {2, 1}, {13, 1}, {3, 10}}));

    CHECK_THROWS_AS(witness_case_Ib(8), std::invalid_argument);  // gcd 2
    CHECK_THROWS_AS(witness_case_Ib(9), std::invalid_argument);
}

TEST_CASE("case II witnesses") {
    AbelianGroup g33({3, 3});
    auto w = witness_case_II(g33);
    CHECK(w.case_tag == "II");
    CHECK(w.exps == sparse(9, {{0, 1}, {1, 1}, {2, 1}, {4, 6}}));

    AbelianGroup g24({2, 4});
    auto u = witness_case_II(g24);
    CHECK(u.exps == sparse(8, {{0, 2}, {1, 1}, {3, 1}, {5, 4}}));

    AbelianGroup g26({2, 6});
    auto v = witness_case_II(g26);
    CHECK(v.exps == sparse(12, {{0, 4}, {1, 1}, {5, 1}, {7, 6}}));

    CHECK_THROWS_AS(witness_case_II(AbelianGroup({2, 2})),
                    std::invalid_argument);  // q_r = 2 < 3
    CHECK_THROWS_AS(witness_case_II(AbelianGroup({4, 2})),
                    std::invalid_argument);  // not a canonical chain
    CHECK_THROWS_AS(witness_case_II(AbelianGroup({6})),
                    std::invalid_argument);  // rank 1
}

TEST_CASE("case III witnesses") {
    AbelianGroup g(std::vector<long>{2, 2, 2});
    auto w = witness_case_III(g);
    CHECK(w.case_tag == "III");
    CHECK(w.exps ==
          sparse(8, {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {7, 4}}));
    CHECK_THROWS_AS(witness_case_III(AbelianGroup({2, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(witness_case_III(AbelianGroup({2, 4})),
                    std::invalid_argument);
}

TEST_CASE("witness dispatch by canonical form") {
    CHECK(select_witness(AbelianGroup({6})).case_tag == "Ib");
    CHECK(select_witness(AbelianGroup({8})).case_tag == "Ia");
    CHECK(select_witness(AbelianGroup({9})).case_tag == "Ia");
    CHECK(select_witness(AbelianGroup({10})).case_tag == "Ib");
    CHECK(select_witness(AbelianGroup({12})).case_tag == "Ia");
    CHECK(select_witness(AbelianGroup({2, 2, 2})).case_tag == "III");
    CHECK(select_witness(AbelianGroup({3, 3})).case_tag == "II");
    CHECK(select_witness(AbelianGroup({2, 4})).case_tag == "II");
    // Normalization happens first: Z/2 x Z/3 is cyclic of order 6.
    auto w = select_witness(AbelianGroup({2, 3}));
    CHECK(w.case_tag == "Ib");
    CHECK(w.exps == sparse(6, {{0, 1}, {1, 1}, {5, 1}, {2, 3}}));

    CHECK_THROWS_AS(select_witness(AbelianGroup({1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(select_witness(AbelianGroup({7})),
                    std::invalid_argument);
    CHECK_THROWS_AS(select_witness(AbelianGroup({4})),
                    std::invalid_argument);
    CHECK_THROWS_AS(select_witness(AbelianGroup({2, 2})),
                    std::invalid_argument);
}

TEST_CASE("constructed witnesses are invariant of full degree") {
    for (auto moduli : std::vector<std::vector<long>>{
             {6}, {8}, {9}, {10}, {12}, {2, 4}, {2, 6}, {3, 3}, {2, 2, 2}}) {
        AbelianGroup g(moduli);
        auto w = select_witness(g);
        AbelianGroup canon(g.normalized());
        CHECK(degree_of(w.exps) == canon.order());
        CHECK(weight_rank(canon, w.exps) == 0);
    }
}

TEST_CASE("constructed witness coefficients: frozen exact values") {
    // None of the constructed monomials has a vanishing coefficient;
    // the values below are the exact integers, triple-checked by
    // independent engines.
    const std::vector<std::pair<std::vector<long>, long>> table = {
        {{6}, 12},      {{8}, -24},  {{9}, 18},
        {{2, 4}, -24},  {{2, 2, 2}, -48}, {{3, 3}, 18},
        {{10}, 40},     {{12}, -60}, {{2, 6}, -60}};
    for (const auto& [moduli, value] : table) {
        AbelianGroup g(moduli);
        auto w = select_witness(g);
        AbelianGroup canon(g.normalized());
        CHECK_FALSE(verify_witness(canon, w.exps));
        CHECK(eigen_coefficient(canon, w.exps) ==
              CyclotomicInt::integer(canon.order(), value));
        CHECK(eigen_coefficient(canon, w.exps,
                                EigenEngine::RyserPermanent) ==
              CyclotomicInt::integer(canon.order(), value));
    }
    // A genuine vanishing monomial validates to true.
    AbelianGroup c6({6});
    CHECK(verify_witness(c6, {0, 1, 1, 2, 1, 1}));
    CHECK_THROWS_AS(verify_witness(c6, {1, 0, 0, 0, 0, 0}),
                    std::invalid_argument);  // degree 1, not 6
}

TEST_CASE("subgroup-invariant factorizations, order 8") {
    Exponents m8 = sparse(8, {{0, 1}, {1, 2}, {6, 1}, {4, 4}});
    auto fact = h_invariant_factorizations(8, m8);
    REQUIRE(fact.size() == 2);
    CHECK(fact[0] == std::vector<Exponents>(
                         {sparse(8, {{4, 4}}),
                          sparse(8, {{0, 1}, {1, 2}, {6, 1}})}));
    CHECK(fact[1] == std::vector<Exponents>(
                         {sparse(8, {{1, 2}, {4, 1}, {6, 1}}),
                          sparse(8, {{0, 1}, {4, 3}})}));
}

TEST_CASE("subgroup-invariant factorizations, order 9") {
    Exponents m9 = sparse(9, {{0, 1}, {1, 1}, {8, 1}, {3, 6}});
    auto fact = h_invariant_factorizations(9, m9);
    REQUIRE(fact.size() == 2);
    CHECK(fact[0] ==
          std::vector<Exponents>({sparse(9, {{3, 3}}), sparse(9, {{3, 3}}),
                                  sparse(9, {{0, 1}, {1, 1}, {8, 1}})}));
    CHECK(fact[1] ==
          std::vector<Exponents>({sparse(9, {{3, 3}}),
                                  sparse(9, {{1, 1}, {3, 1}, {8, 1}}),
                                  sparse(9, {{0, 1}, {3, 2}})}));
    // The p-th power of X_0 factors uniquely.
    auto triv = h_invariant_factorizations(9, sparse(9, {{0, 9}}));
    REQUIRE(triv.size() == 1);
    CHECK(triv[0] == std::vector<Exponents>(3, sparse(9, {{0, 3}})));
}

TEST_CASE("factorization components multiply back and stay invariant") {
    for (long n : {8, 9, 12}) {
        auto w = witness_case_Ia(n);
        long q = n / w.p;
        for (const auto& tuple : h_invariant_factorizations(n, w.exps)) {
            REQUIRE(static_cast<long>(tuple.size()) == w.p);
            Exponents prod(n, 0);
            for (const auto& part : tuple) {
                CHECK(degree_of(part) == q);
                long weighted = 0;
                for (long l = 0; l < n; ++l)
                    weighted = (weighted + l * part[l]) % q;
                CHECK(weighted == 0);
                for (long l = 0; l < n; ++l) prod[l] += part[l];
            }
            CHECK(prod == w.exps);
            CHECK(std::is_sorted(tuple.begin(), tuple.end()));
        }
    }
}

TEST_CASE("slot-blocked permutation counts") {
    CHECK(prime_S_counts(2, {0, 2}) == std::vector<Int>({0, 2}));
    CHECK(prime_S_counts(2, {2, 0}) == std::vector<Int>({2, 0}));
    CHECK(prime_S_counts(3, {1, 1, 1}) == std::vector<Int>({0, 3, 3}));
    CHECK(prime_S_counts(3, {3, 0, 0}) == std::vector<Int>({6, 0, 0}));
    CHECK_THROWS_AS(prime_S_counts(4, {1, 1, 1, 1}),
                    std::invalid_argument);  // not prime
    CHECK_THROWS_AS(prime_S_counts(3, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(prime_S_counts(3, {2, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(prime_S_counts(13, std::vector<long>(13, 1)),
                    std::invalid_argument);  // beyond the 11! guard
}

TEST_CASE("prime certificates hold for p = 2, 3, 5, 7") {
    for (long p : {2L, 3L, 5L, 7L}) {
        auto comps = prime_compositions(p);
        for (const auto& a : comps) {
            std::vector<long> al(a.begin(), a.end());
            auto cert = prime_certificate(p, al);
            CHECK(cert.all_ok());
            Int total = 0;
            for (const Int& c : cert.counts) total += c;
            CHECK(total == factorial(p));
        }
    }
}

TEST_CASE("certificate internals for p = 3, uniform composition") {
    auto cert = prime_certificate(3, {1, 1, 1});
    CHECK(cert.counts == std::vector<Int>({0, 3, 3}));
    CHECK(cert.sum_is_factorial);
    CHECK(cert.p_divides_counts);
    CHECK(cert.count0_ne_count1);
    CHECK(cert.unit_symmetry);
    CHECK(cert.reduced_nonzero);
    CHECK(cert.matches_eigen);
    // 3 zeta + 3 zeta^2 = -3.
    CHECK(cert.reduced == CyclotomicInt::integer(3, -3));
    CHECK_THROWS_AS(prime_certificate(3, {1, 2, 0}),
                    std::invalid_argument);  // weight 0*1+1*2 = 2 != 0 mod 3
}

TEST_CASE("even/odd subset counts and the pairing") {
    const std::vector<std::pair<long, long>> expect = {
        {1, 1}, {2, 2}, {3, 16}, {4, 2048}};
    for (auto [k, count] : expect) {
        auto res = lemma2_counts(k, 1);
        CHECK(res.count_even_zero == count);
        CHECK(res.count_odd_v1 == count);
        REQUIRE(static_cast<long>(res.pairing.size()) == count);
        std::set<unsigned long> lhs, rhs;
        for (auto [a, b] : res.pairing) {
            CHECK(b == (a ^ (1UL << res.v1)));
            // Source: even size, zero sum.  Image: odd size, sum v1.
            unsigned long sa = 0, sb = 0;
            int ca = 0, cb = 0;
            for (unsigned long v = 0; v < (1UL << k); ++v) {
                if (a & (1UL << v)) sa ^= v, ++ca;
                if (b & (1UL << v)) sb ^= v, ++cb;
            }
            CHECK(ca % 2 == 0);
            CHECK(sa == 0);
            CHECK(cb % 2 == 1);
            CHECK(sb == res.v1);
            lhs.insert(a);
            rhs.insert(b);
        }
        CHECK(static_cast<long>(lhs.size()) == count);
        CHECK(static_cast<long>(rhs.size()) == count);
    }
    CHECK_THROWS_AS(lemma2_counts(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(lemma2_counts(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(lemma2_counts(3, 8), std::invalid_argument);
}
