#include <doctest.h>

#include <stdexcept>

#include "core/matrixops.hpp"

using namespace normcert;

namespace {

// Naive cofactor expansion, an independent determinant oracle.
Int det_cofactor(const std::vector<std::vector<Int>>& m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Int>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Int> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Int term = m[0][j] * det_cofactor(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

TEST_CASE("coefficient matrix of the trivial group") {
    AbelianGroup g({1});
    auto cm = assemble_matrix(PermAction::regular(g));
    REQUIRE(cm.size() == 1);
    CHECK(cm.entries[0][0] == 1);
    CHECK(determinant_bareiss(cm.entries) == 1);
}

TEST_CASE("coefficient matrix of Z/2") {
    AbelianGroup g({2});
    auto cm = assemble_matrix(PermAction::regular(g));
    REQUIRE(cm.size() == 2);
    CHECK(cm.entries[0][0] == 0);
    CHECK(cm.entries[0][1] == 1);
    CHECK(cm.entries[1][0] == 1);
    CHECK(cm.entries[1][1] == 0);
    CHECK(determinant_bareiss(cm.entries) == -1);
}

TEST_CASE("coefficient matrix of Z/5 has unit determinant") {
    AbelianGroup g({5});
    auto cm = assemble_matrix(PermAction::regular(g));
    REQUIRE(cm.size() == 26);
    CHECK(determinant_bareiss(cm.entries) == -1);
    // Frozen multiset of the 676 entries.
    std::map<long, long> hist;
    for (const auto& row : cm.entries)
        for (const Int& v : row) ++hist[static_cast<long>(v.get_si())];
    std::map<long, long> expect = {{0, 591}, {1, 54}, {2, 10},
                                   {3, 8},   {5, 12}, {15, 1}};
    CHECK(hist == expect);
}

TEST_CASE("coefficient matrices of the order-4 groups are nonsingular") {
    AbelianGroup c4({4});
    CHECK(determinant_bareiss(
              assemble_matrix(PermAction::regular(c4)).entries) != 0);
    AbelianGroup v4({2, 2});
    CHECK(determinant_bareiss(
              assemble_matrix(PermAction::regular(v4)).entries) == 2);
}

TEST_CASE("coefficient matrix of Z/6 is singular") {
    AbelianGroup g({6});
    auto cm = assemble_matrix(PermAction::regular(g));
    REQUIRE(cm.size() == 80);
    CHECK(determinant_bareiss(cm.entries) == 0);
}

TEST_CASE("exact determinant agrees with cofactor expansion") {
    // Deterministic LCG so the matrices are reproducible.
    unsigned long state = 12345;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((state >> 33) % 19) - 9;
    };
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + trial % 6;
        std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
        for (auto& row : m)
            for (auto& v : row) v = next();
        CHECK(determinant_bareiss(m) == det_cofactor(m));
    }
}

TEST_CASE("singular inputs give exactly zero") {
    std::vector<std::vector<Int>> m = {
        {Int(1), Int(2), Int(3)},
        {Int(4), Int(5), Int(6)},
        {Int(5), Int(7), Int(9)}};
    CHECK(determinant_bareiss(m) == 0);
    std::vector<std::vector<Int>> z(4, std::vector<Int>(4, Int(0)));
    CHECK(determinant_bareiss(z) == 0);
    CHECK(determinant_bareiss({}) == 1);
}

TEST_CASE("determinant factorization") {
    CHECK(det_prime_factors(Int(-12)) == std::vector<Int>({2, 2, 3}));
    CHECK(det_prime_factors(Int(1)) == std::vector<Int>{});
    CHECK(det_prime_factors(Int(-1)) == std::vector<Int>{});
    CHECK(det_prime_factors(Int(97)) == std::vector<Int>{97});
    CHECK_THROWS_AS(det_prime_factors(Int(0)), std::invalid_argument);
    // Factors beyond the trial bound survive as one whole cofactor.
    Int big = Int(1000003) * Int(1000033) * 2;
    CHECK(det_prime_factors(big) ==
          std::vector<Int>({2, Int(1000003) * Int(1000033)}));
}
