// The orbit-basis coefficient matrix and exact integer linear algebra.
//
// For a permutation action of G on variables, the norm form expands as
// sum_{r,s} a_rs O_r(X) O_s(Y) over orbit sums; nonsingularity of
// ((a_rs)) is equivalent to nondegeneracy of the norm morphism.
#pragma once

#include <vector>

#include "bigint.hpp"
#include "monomial.hpp"

namespace normcert {

struct CoefficientMatrix {
    OrbitTable table;
    std::vector<std::vector<Int>> entries;  // entries[r][s]

    long size() const { return static_cast<long>(entries.size()); }
};

// Builds the degree-|G| orbit table and fills all N^2 entries with
// perm_coefficient on canonical representatives (parallel per entry).
CoefficientMatrix assemble_matrix(const PermAction& action);

// Exact determinant by fraction-free (Bareiss) elimination; pivoting is
// deterministic: first row with a nonzero entry, in row order.
Int determinant_bareiss(std::vector<std::vector<Int>> m);

// Nondecreasing prime factor list of |d| with multiplicity, by trial
// division (determinants here are small); an empty list certifies a
// unit, i.e. the verdict holds over every characteristic.
// d = 0 -> invalid-argument.
std::vector<Int> det_prime_factors(const Int& d);

}  // namespace normcert
