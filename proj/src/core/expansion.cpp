#include "expansion.hpp"

#include <algorithm>
#include <stdexcept>

namespace normcert {

namespace {

// Depth-first count over factor slots: slot s picks a variable v (a Y
// choice still available) whose shifted image perm[s][v] must also be
// available on the X side.
struct PermCounter {
    const PermAction& action;
    std::vector<long> xcnt;
    std::vector<long> ycnt;
    long n;
    Int total = 0;

    PermCounter(const PermAction& a, const Exponents& mx, const Exponents& my)
        : action(a),
          xcnt(mx.begin(), mx.end()),
          ycnt(my.begin(), my.end()),
          n(a.group->order()) {}

    void run(long slot) {
        if (slot == n) {
            total += 1;
            return;
        }
        const std::vector<long>& shift = action.perm[slot];
        for (long v = 0; v < action.num_vars; ++v) {
            if (ycnt[v] == 0) continue;
            long xv = shift[v];
            if (xcnt[xv] == 0) continue;
            --ycnt[v];
            --xcnt[xv];
            run(slot + 1);
            ++ycnt[v];
            ++xcnt[xv];
        }
    }
};

}  // namespace

Int perm_coefficient(const PermAction& action, const Exponents& x_monomial,
                     const Exponents& y_monomial) {
    const long n = action.group->order();
    if (static_cast<long>(x_monomial.size()) != action.num_vars ||
        static_cast<long>(y_monomial.size()) != action.num_vars)
        throw std::invalid_argument("monomial arity must match variable count");
    if (degree_of(x_monomial) != n || degree_of(y_monomial) != n)
        throw std::invalid_argument("monomial degree must equal |G|");
    PermCounter counter(action, x_monomial, y_monomial);
    counter.run(0);
    return counter.total;
}

namespace {

// Arrangement-prefix DP.  Slots are the group elements in rank order;
// since slot index = (degree placed so far), the remaining-count vector
// alone identifies a state.  dp(rem)[x] = number of ways to fill the
// remaining slots so the remaining phase contribution is x mod n.
struct ArrangementDP {
    const AbelianGroup& g;
    long n;
    std::map<Exponents, std::vector<Int>> memo;

    explicit ArrangementDP(const AbelianGroup& g_) : g(g_), n(g_.order()) {}

    const std::vector<Int>& solve(Exponents& rem, long placed) {
        auto it = memo.find(rem);
        if (it != memo.end()) return it->second;
        std::vector<Int> out(n, Int(0));
        if (placed == n) {
            out[0] = 1;
        } else {
            for (long lam = 0; lam < n; ++lam) {
                if (rem[lam] == 0) continue;
                --rem[lam];
                const std::vector<Int>& sub = solve(rem, placed + 1);
                ++rem[lam];
                long ph = g.pairing(lam, placed);
                for (long x = 0; x < n; ++x) {
                    if (sub[x] == 0) continue;
                    long y = x + ph;
                    if (y >= n) y -= n;
                    out[y] += sub[x];
                }
            }
        }
        return memo.emplace(rem, std::move(out)).first->second;
    }
};

CyclotomicInt eigen_coefficient_arrangement(const AbelianGroup& g,
                                            const Exponents& a) {
    ArrangementDP dp(g);
    Exponents rem = a;
    const std::vector<Int>& counts = dp.solve(rem, 0);
    return CyclotomicInt::from_zeta_counts(g.order(), counts);
}

CyclotomicInt eigen_coefficient_ryser(const AbelianGroup& g,
                                      const Exponents& a) {
    const long n = g.order();
    if (n > 20)
        throw std::invalid_argument(
            "permanent engine limited to order <= 20 (2^n subsets)");
    // Rows: the character list with repetitions; columns: group elements.
    std::vector<long> rows;
    Int repeats = 1;
    for (long lam = 0; lam < n; ++lam) {
        repeats *= factorial(a[lam]);
        for (long k = 0; k < a[lam]; ++k) rows.push_back(lam);
    }
    // Inclusion-exclusion over column subsets with Gray-code updates of
    // the per-row sums sum_{k in S} zeta^{<row_j, k>}, kept as raw
    // zeta-power count vectors of length n.
    std::vector<std::vector<Int>> rowsum(n, std::vector<Int>(n, Int(0)));
    CyclotomicInt total = CyclotomicInt::zero(n);
    const unsigned long limit = 1ul << n;
    unsigned long gray = 0;
    for (unsigned long s = 1; s < limit; ++s) {
        unsigned long next_gray = s ^ (s >> 1);
        unsigned long flipped = gray ^ next_gray;
        int col = __builtin_ctzl(flipped);
        bool added = (next_gray & flipped) != 0;
        for (long j = 0; j < n; ++j) {
            long e = g.pairing(rows[j], col);
            rowsum[j][e] += added ? 1 : -1;
        }
        gray = next_gray;
        CyclotomicInt prod = CyclotomicInt::from_zeta_counts(n, rowsum[0]);
        for (long j = 1; j < n; ++j)
            prod = prod * CyclotomicInt::from_zeta_counts(n, rowsum[j]);
        int popcount = __builtin_popcountl(next_gray);
        // (-1)^n * (-1)^{|S|}
        bool negate = ((n - popcount) % 2) != 0;
        total = negate ? total - prod : total + prod;
    }
    // per(M) counts each arrangement prod a_l! times.
    return total.divided_by(repeats);
}

}  // namespace

CyclotomicInt eigen_coefficient(const AbelianGroup& g, const Exponents& a,
                                EigenEngine engine) {
    const long n = g.order();
    if (static_cast<long>(a.size()) != n)
        throw std::invalid_argument("character multiset arity must equal |G|");
    if (degree_of(a) != n)
        throw std::invalid_argument("character multiset degree must equal |G|");
    switch (engine) {
        case EigenEngine::Arrangement:
            return eigen_coefficient_arrangement(g, a);
        case EigenEngine::RyserPermanent:
            return eigen_coefficient_ryser(g, a);
    }
    throw std::logic_error("unknown eigen engine");
}

std::map<std::pair<Exponents, Exponents>, Int> brute_force_expand_perm(
    const PermAction& action, long max_order) {
    const long n = action.group->order();
    const long m = action.num_vars;
    if (n > max_order)
        throw std::invalid_argument(
            "brute-force expansion refused: order exceeds bound");
    std::map<std::pair<Exponents, Exponents>, Int> out;
    std::vector<long> pick(n, 0);  // pick[s] = chosen variable at slot s
    while (true) {
        Exponents mx(m, 0), my(m, 0);
        for (long s = 0; s < n; ++s) {
            ++my[pick[s]];
            ++mx[action.perm[s][pick[s]]];
        }
        out[{mx, my}] += 1;
        long s = n - 1;
        while (s >= 0 && ++pick[s] == m) pick[s--] = 0;
        if (s < 0) break;
    }
    return out;
}

std::map<Exponents, CyclotomicInt> brute_force_expand_eigen(
    const AbelianGroup& g, long max_order) {
    const long n = g.order();
    if (n > max_order)
        throw std::invalid_argument(
            "brute-force expansion refused: order exceeds bound");
    // Accumulate raw zeta-power counts per character multiset, then
    // reduce once at the end.
    std::map<Exponents, std::vector<Int>> counts;
    std::vector<long> pick(n, 0);  // pick[s] = character chosen at slot s
    while (true) {
        Exponents a(n, 0);
        long phase = 0;
        for (long s = 0; s < n; ++s) {
            ++a[pick[s]];
            phase = (phase + g.pairing(pick[s], s)) % n;
        }
        auto it = counts.find(a);
        if (it == counts.end())
            it = counts.emplace(a, std::vector<Int>(n, Int(0))).first;
        it->second[phase] += 1;
        long s = n - 1;
        while (s >= 0 && ++pick[s] == n) pick[s--] = 0;
        if (s < 0) break;
    }
    std::map<Exponents, CyclotomicInt> out;
    for (const auto& [a, vec] : counts)
        out.emplace(a, CyclotomicInt::from_zeta_counts(n, vec));
    return out;
}

Int arrangement_multiplicity(const Exponents& char_multiset,
                             const std::vector<long>& var_exponents) {
    Int num = 1;
    for (long a : char_multiset) num *= factorial(a);
    Int den = 1;
    for (long e : var_exponents) den *= factorial(e);
    if (num % den != 0)
        throw std::logic_error("variable exponents do not refine the multiset");
    return num / den;
}

}  // namespace normcert
