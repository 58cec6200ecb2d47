#include "group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace normcert {

std::vector<long> parse_group_spec(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("empty group spec");
    std::vector<long> moduli;
    std::string token;
    auto flush = [&]() {
        if (token.empty())
            throw std::invalid_argument("malformed group spec: '" + spec + "'");
        long q = 0;
        for (char c : token) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("malformed group spec: '" + spec +
                                            "'");
            q = q * 10 + (c - '0');
            if (q > 1000000)
                throw std::invalid_argument("group order too large in spec '" +
                                            spec + "'");
        }
        if (q <= 0)
            throw std::invalid_argument("group factors must be positive: '" +
                                        spec + "'");
        moduli.push_back(q);
        token.clear();
    };
    for (char c : spec) {
        if (c == 'x' || c == 'X') {
            flush();
        } else {
            token.push_back(c);
        }
    }
    flush();
    return moduli;
}

std::vector<long> normalize_moduli(const std::vector<long>& moduli) {
    // Split every factor into prime powers, then rebuild divisors by
    // repeatedly combining the largest remaining power of each prime.
    std::map<long, std::vector<long>> powers;  // prime -> prime-power list
    for (long q : moduli) {
        long m = q;
        for (long p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                long pk = 1;
                while (m % p == 0) {
                    m /= p;
                    pk *= p;
                }
                powers[p].push_back(pk);
            }
        }
        if (m > 1) powers[m].push_back(m);
    }
    std::size_t layers = 0;
    for (auto& [p, list] : powers) {
        std::sort(list.begin(), list.end(), std::greater<long>());
        layers = std::max(layers, list.size());
    }
    std::vector<long> divisors(layers, 1);
    for (auto& [p, list] : powers)
        for (std::size_t i = 0; i < list.size(); ++i) divisors[i] *= list[i];
    std::sort(divisors.begin(), divisors.end());
    if (divisors.empty()) divisors.push_back(1);
    return divisors;
}

std::string format_moduli(const std::vector<long>& moduli) {
    std::ostringstream out;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (i) out << 'x';
        out << moduli[i];
    }
    return out.str();
}

AbelianGroup::AbelianGroup(std::vector<long> moduli)
    : moduli_(std::move(moduli)) {
    if (moduli_.empty())
        throw std::invalid_argument("a group needs at least one factor");
    order_ = 1;
    for (long q : moduli_) {
        if (q <= 0) throw std::invalid_argument("group factors must be >= 1");
        if (order_ > 1000000 / q)
            throw std::invalid_argument("group order too large");
        order_ *= q;
    }
    radix_.assign(moduli_.size(), 1);
    for (std::size_t i = moduli_.size(); i-- > 1;)
        radix_[i - 1] = radix_[i] * moduli_[i];
    elements_.reserve(order_);
    Element cur(moduli_.size(), 0);
    for (long idx = 0; idx < order_; ++idx) {
        elements_.push_back(cur);
        for (std::size_t i = moduli_.size(); i-- > 0;) {
            if (++cur[i] < moduli_[i]) break;
            cur[i] = 0;
        }
    }
}

long AbelianGroup::index_of(const Element& e) const {
    if (e.size() != moduli_.size())
        throw std::invalid_argument("element arity mismatch");
    long idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        long c = e[i] % moduli_[i];
        if (c < 0) c += moduli_[i];
        idx += c * radix_[i];
    }
    return idx;
}

long AbelianGroup::add(long a, long b) const {
    const Element& ea = elements_[a];
    const Element& eb = elements_[b];
    long idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        long c = ea[i] + eb[i];
        if (c >= moduli_[i]) c -= moduli_[i];
        idx += c * radix_[i];
    }
    return idx;
}

long AbelianGroup::neg(long a) const {
    const Element& ea = elements_[a];
    long idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        long c = ea[i] == 0 ? 0 : moduli_[i] - ea[i];
        idx += c * radix_[i];
    }
    return idx;
}

long AbelianGroup::pairing(long lam, long sig) const {
    const Element& el = elements_[lam];
    const Element& es = elements_[sig];
    long acc = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        long term = ((order_ / moduli_[i]) % order_) *
                    ((el[i] * es[i]) % moduli_[i]);
        acc = (acc + term) % order_;
    }
    return acc;
}

std::vector<long> AbelianGroup::subgroup(
    const std::vector<long>& generators) const {
    std::set<long> closed = {0};
    std::vector<long> frontier = {0};
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long h : frontier) {
            for (long g : generators) {
                long s = add(h, g);
                if (closed.insert(s).second) next.push_back(s);
            }
        }
        frontier.swap(next);
    }
    return std::vector<long>(closed.begin(), closed.end());
}

std::string AbelianGroup::label(long idx) const {
    const Element& e = elements_[idx];
    if (e.size() == 1) return std::to_string(e[0]);
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out << ',';
        out << e[i];
    }
    out << ')';
    return out.str();
}

}  // namespace normcert
