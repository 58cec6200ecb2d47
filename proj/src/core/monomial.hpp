// Monomials, group actions on variables, and orbit decompositions.
//
// A monomial in m variables is a dense exponent vector of length m.
// Two actions matter here:
//   - permutation action: the group permutes the variables themselves
//     (for the regular action, variables are indexed by group elements
//     and s sends X_v to X_{s+v});
//   - eigen action: variables are simultaneous eigenvectors indexed by
//     characters; s scales X_l by zeta^{<l,s>}, so a monomial's
//     "weight" is the group sum of its variable labels with
//     multiplicity, and weight zero means invariant.
#pragma once

#include <functional>
#include <map>
#include <vector>

#include "bigint.hpp"
#include "group.hpp"

namespace normcert {

// Dense exponent vector; index = variable, value = exponent.
using Exponents = std::vector<long>;

long degree_of(const Exponents& e);

// Visits every exponent vector of the given degree in ascending
// lexicographic order: (0,...,0,d) first, (d,0,...,0) last.
void for_each_exponent_vector(long num_vars, long degree,
                              const std::function<void(const Exponents&)>& fn);

std::vector<Exponents> exponent_vectors(long num_vars, long degree);

// A finite group permuting a variable set.
struct PermAction {
    const AbelianGroup* group;
    long num_vars;
    // perm[s][v] = image of variable v under group element of rank s.
    std::vector<std::vector<long>> perm;

    static PermAction regular(const AbelianGroup& g);

    // Image of a monomial: e'[perm[s][v]] = e[v].
    Exponents act(long s, const Exponents& e) const;
};

// The diagonalized action on eigen-variables.  multiplicities[l] is the
// number of independent variables of character l present in the
// representation (all 1 for the regular representation).
struct EigenAction {
    const AbelianGroup* group;
    std::vector<long> multiplicities;

    static EigenAction regular(const AbelianGroup& g);
    static EigenAction custom(const AbelianGroup& g,
                              std::vector<long> multiplicities);
    bool is_regular() const;
};

// Orbits of degree-d monomials under a permutation action.  The
// representative of an orbit is its lexicographically least member;
// orbits are listed with representatives ascending.
struct OrbitTable {
    long degree = 0;
    std::vector<Exponents> reps;
    std::vector<std::vector<Exponents>> orbits;  // members, each sorted
    std::map<Exponents, long> orbit_index;

    long size() const { return static_cast<long>(reps.size()); }
    long index_of(const Exponents& e) const;
};

OrbitTable orbit_decomposition(const PermAction& action, long degree);

// Group sum (as a rank) of the character labels of a monomial over
// eigen-variables, counted with exponents; rank 0 means invariant.
long weight_rank(const AbelianGroup& g, const Exponents& char_exps);

// All invariant (weight-zero) character multisets of the given degree,
// in ascending lexicographic order of exponent vectors.
std::vector<Exponents> invariant_multisets(const AbelianGroup& g, long degree);

// Compositions (a_0,...,a_{p-1}) with sum p and sum i*a_i = 0 mod p:
// exactly the invariant multisets of the cyclic group of order p at
// degree p.  These index the diagonal entries in the prime case.
std::vector<Exponents> prime_compositions(long p);

}  // namespace normcert
