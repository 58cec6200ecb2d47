// Finite abelian groups presented as products Z/q1 x ... x Z/qr.
//
// Elements are coordinate vectors, enumerated in mixed-radix order with
// the last coordinate varying fastest; an element's *rank* is its index
// in that enumeration.  Characters are indexed by group elements via the
// standard pairing <l, s> = sum_i (n/q_i) * l_i * s_i  (mod n), n = |G|,
// so chi_l(s) = zeta_n ^ <l, s>.
#pragma once

#include <string>
#include <vector>

namespace normcert {

using Element = std::vector<long>;

// Parses "q1xq2x...": positive integers separated by 'x' (case
// insensitive).  Throws std::invalid_argument on malformed input.
std::vector<long> parse_group_spec(const std::string& spec);

// Elementary-divisor form d1 | d2 | ... | dk (ascending), trivial
// factors dropped; the trivial group normalizes to {1}.
std::vector<long> normalize_moduli(const std::vector<long>& moduli);

std::string format_moduli(const std::vector<long>& moduli);

class AbelianGroup {
  public:
    explicit AbelianGroup(std::vector<long> moduli);

    const std::vector<long>& moduli() const { return moduli_; }
    long order() const { return order_; }
    long rank() const { return static_cast<long>(moduli_.size()); }

    const std::vector<Element>& elements() const { return elements_; }
    const Element& element(long idx) const { return elements_[idx]; }
    long index_of(const Element& e) const;  // inverse of element()

    long add(long a, long b) const;  // ranks in, rank out
    long neg(long a) const;

    // Character pairing exponent <l, s> mod order(); arguments are ranks.
    long pairing(long lam, long sig) const;

    // Rank-indexed closure of the given generators (ranks in, sorted
    // ranks out); the empty generating set yields {identity}.
    std::vector<long> subgroup(const std::vector<long>& generators) const;

    bool is_cyclic() const { return moduli_.size() == 1; }

    // Element label used in reports: "3" for rank-1 groups, "(1,0)" else.
    std::string label(long idx) const;

    std::vector<long> normalized() const { return normalize_moduli(moduli_); }

  private:
    std::vector<long> moduli_;
    long order_;
    std::vector<Element> elements_;
    std::vector<long> radix_;  // mixed-radix place values
};

}  // namespace normcert
