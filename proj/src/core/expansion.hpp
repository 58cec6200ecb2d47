// Coefficient extraction for the norm form prod_{s in G} (sum_i X_{s.i} Y_i).
//
// Permutation basis: the coefficient of M_x(X) * M_y(Y) counts the maps
// g from group elements (the factors of the product) to variables whose
// Y-picks realize the multiset M_y while the shifted X-picks realize
// M_x.  Eigen basis: the product is diagonal, and the coefficient of a
// character multiset `a` is the exact cyclotomic sum
//     sum over arrangements h: G -> characters with multiset a of
//     zeta_n ^ ( sum_s <h(s), s> ).
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "cyclotomic.hpp"
#include "group.hpp"
#include "monomial.hpp"

namespace normcert {

// Coefficient of M_x(X)M_y(Y) in the expanded norm form.
Int perm_coefficient(const PermAction& action, const Exponents& x_monomial,
                     const Exponents& y_monomial);

enum class EigenEngine {
    // Dynamic program over arrangement prefixes keyed by remaining
    // multiset counts.  Default everywhere: measured faster than the
    // permanent route for regular representations at every order this
    // tool targets.
    Arrangement,
    // Ryser-style inclusion-exclusion permanent with exact division by
    // prod a_l!.  Kept as an independent engine; bit-identical to
    // Arrangement (both reduce to the canonical cyclotomic form).
    RyserPermanent,
};

// Diagonal coefficient of the character multiset `a` (dense exponent
// vector over all |G| characters, total degree |G|).
CyclotomicInt eigen_coefficient(const AbelianGroup& g, const Exponents& a,
                                EigenEngine engine = EigenEngine::Arrangement);

// Exhaustive expansions over all assignments; exact but exponential.
// Guarded by an order bound so misuse fails fast rather than hanging.
std::map<std::pair<Exponents, Exponents>, Int> brute_force_expand_perm(
    const PermAction& action, long max_order = 5);
std::map<Exponents, CyclotomicInt> brute_force_expand_eigen(
    const AbelianGroup& g, long max_order = 4);

// With repeated eigen-variables (multiplicity m_l per character), the
// coefficient of a concrete variable monomial with exponents e and
// character multiset a is arrangement_multiplicity(a, e) *
// eigen_coefficient(a): the factor prod a_l! / prod e_v! counts the
// ways slots split among the identically-weighted variables.
Int arrangement_multiplicity(const Exponents& char_multiset,
                             const std::vector<long>& var_exponents);

}  // namespace normcert
