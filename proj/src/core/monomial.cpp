#include "monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace normcert {

long degree_of(const Exponents& e) {
    long d = 0;
    for (long v : e) d += v;
    return d;
}

namespace {

void walk_exponents(Exponents& cur, long pos, long remaining,
                    const std::function<void(const Exponents&)>& fn) {
    if (pos + 1 == static_cast<long>(cur.size())) {
        cur[pos] = remaining;
        fn(cur);
        cur[pos] = 0;
        return;
    }
    for (long e = 0; e <= remaining; ++e) {
        cur[pos] = e;
        walk_exponents(cur, pos + 1, remaining - e, fn);
    }
    cur[pos] = 0;
}

}  // namespace

void for_each_exponent_vector(long num_vars, long degree,
                              const std::function<void(const Exponents&)>& fn) {
    if (num_vars <= 0) throw std::invalid_argument("need at least one variable");
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    Exponents cur(num_vars, 0);
    walk_exponents(cur, 0, degree, fn);
}

std::vector<Exponents> exponent_vectors(long num_vars, long degree) {
    std::vector<Exponents> out;
    for_each_exponent_vector(num_vars, degree,
                             [&](const Exponents& e) { out.push_back(e); });
    return out;
}

PermAction PermAction::regular(const AbelianGroup& g) {
    PermAction a;
    a.group = &g;
    a.num_vars = g.order();
    a.perm.assign(g.order(), std::vector<long>(g.order(), 0));
    for (long s = 0; s < g.order(); ++s)
        for (long v = 0; v < g.order(); ++v) a.perm[s][v] = g.add(s, v);
    return a;
}

Exponents PermAction::act(long s, const Exponents& e) const {
    Exponents out(e.size(), 0);
    for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v]) out[perm[s][v]] = e[v];
    return out;
}

EigenAction EigenAction::regular(const AbelianGroup& g) {
    return EigenAction{&g, std::vector<long>(g.order(), 1)};
}

EigenAction EigenAction::custom(const AbelianGroup& g,
                                std::vector<long> multiplicities) {
    if (static_cast<long>(multiplicities.size()) != g.order())
        throw std::invalid_argument(
            "multiplicity list must have one entry per character");
    for (long m : multiplicities)
        if (m < 0)
            throw std::invalid_argument("multiplicities must be nonnegative");
    return EigenAction{&g, std::move(multiplicities)};
}

bool EigenAction::is_regular() const {
    for (long m : multiplicities)
        if (m != 1) return false;
    return true;
}

long OrbitTable::index_of(const Exponents& e) const {
    auto it = orbit_index.find(e);
    if (it == orbit_index.end())
        throw std::invalid_argument("monomial not in orbit table");
    return it->second;
}

OrbitTable orbit_decomposition(const PermAction& action, long degree) {
    OrbitTable table;
    table.degree = degree;
    const long n_elems = action.group->order();
    // Lex-ascending enumeration means the first member of an orbit we
    // meet is its lex-least member, i.e. the canonical representative;
    // orbits therefore come out with representatives ascending.
    for_each_exponent_vector(
        action.num_vars, degree, [&](const Exponents& e) {
            if (table.orbit_index.count(e)) return;
            std::vector<Exponents> members;
            for (long s = 0; s < n_elems; ++s) members.push_back(action.act(s, e));
            std::sort(members.begin(), members.end());
            members.erase(std::unique(members.begin(), members.end()),
                          members.end());
            long idx = table.size();
            for (const Exponents& m : members) table.orbit_index.emplace(m, idx);
            table.reps.push_back(members.front());
            table.orbits.push_back(std::move(members));
        });
    return table;
}

long weight_rank(const AbelianGroup& g, const Exponents& char_exps) {
    if (static_cast<long>(char_exps.size()) != g.order())
        throw std::invalid_argument("exponent vector arity must equal |G|");
    long w = 0;
    for (long lam = 0; lam < g.order(); ++lam)
        for (long k = 0; k < char_exps[lam]; ++k) w = g.add(w, lam);
    return w;
}

std::vector<Exponents> invariant_multisets(const AbelianGroup& g, long degree) {
    std::vector<Exponents> out;
    for_each_exponent_vector(g.order(), degree, [&](const Exponents& e) {
        if (weight_rank(g, e) == 0) out.push_back(e);
    });
    return out;
}

std::vector<Exponents> prime_compositions(long p) {
    if (p < 2) throw std::invalid_argument("prime must be >= 2");
    AbelianGroup zp({p});
    return invariant_multisets(zp, p);
}

}  // namespace normcert
