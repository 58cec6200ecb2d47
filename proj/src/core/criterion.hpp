// Nondegeneracy decisions and constructive certificates.
//
// Permutation basis: the norm morphism is nondegenerate iff the orbit
// coefficient matrix has nonzero determinant.  Eigen basis: the matrix
// is diagonal, so nondegeneracy is equivalent to every invariant
// character multiset having a nonzero coefficient; the first vanishing
// entry (in canonical scan order) is a degeneracy witness.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "cyclotomic.hpp"
#include "matrixops.hpp"
#include "monomial.hpp"

namespace normcert {

// Raised when a deterministic search exhausts its budget without
// finding what must exist; carries no proof of absence.
class search_failure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Raised when a self-check that the underlying theory guarantees fails;
// signals an engine bug (or a false claim upstream), never bad input.
class certificate_failure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct DiagonalEntry {
    Exponents multiset;
    CyclotomicInt value;
};

struct Verdict {
    bool nondegenerate = false;
    std::string basis;  // "perm" | "eigen"
    bool custom_multiplicities = false;

    // Permutation-basis evidence.
    std::optional<Int> determinant;
    std::vector<Int> det_factors;  // empty list = unit determinant

    // Eigen-basis evidence: the full diagonal table when nondegenerate,
    // or the first vanishing multiset (re-verified) when degenerate.
    std::vector<DiagonalEntry> diagonal;
    std::optional<Exponents> witness;
    std::optional<CyclotomicInt> witness_value;

    long entries_checked = 0;
};

Verdict nondegenerate_perm(const PermAction& action);
Verdict nondegenerate_eigen(const EigenAction& action);

struct EvaluationCertificate {
    std::vector<std::vector<Int>> points;  // integer coordinates
    std::vector<std::vector<Int>> matrix;  // matrix[r][s] = poly_r(point_s)
    Int det;                               // nonzero by construction
    long pool_scanned = 0;                 // candidates examined
};

// Polynomial as exponent-vector -> coefficient (all vectors same arity).
using SparsePoly = std::map<Exponents, Int>;

// Greedily accumulates evaluation points from a fixed deterministic
// pool ({0,1}-points first, then geometric progressions (t, t^2, ...)
// with increasing t and their single-coordinate perturbations) until
// the N evaluation columns are linearly independent.  Throws
// search_failure when the budget is exhausted; that outcome carries no
// degeneracy information.
EvaluationCertificate evaluation_certificate(
    const std::vector<SparsePoly>& polys, long num_vars,
    long budget = 1000000);

}  // namespace normcert
