#include "matrixops.hpp"

#include <stdexcept>

#include "expansion.hpp"
#include "parallel.hpp"

namespace normcert {

CoefficientMatrix assemble_matrix(const PermAction& action) {
    CoefficientMatrix cm;
    cm.table = orbit_decomposition(action, action.group->order());
    const long n_orbits = cm.table.size();
    cm.entries.assign(n_orbits, std::vector<Int>(n_orbits, Int(0)));
    parallel_for(static_cast<std::size_t>(n_orbits) * n_orbits,
                 [&](std::size_t flat) {
                     long r = static_cast<long>(flat) / n_orbits;
                     long s = static_cast<long>(flat) % n_orbits;
                     cm.entries[r][s] = perm_coefficient(
                         action, cm.table.reps[r], cm.table.reps[s]);
                 });
    return cm;
}

Int determinant_bareiss(std::vector<std::vector<Int>> m) {
    const long n = static_cast<long>(m.size());
    for (const auto& row : m)
        if (static_cast<long>(row.size()) != n)
            throw std::invalid_argument("determinant needs a square matrix");
    if (n == 0) return 1;
    Int prev_pivot = 1;
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            long swap_row = -1;
            for (long i = k + 1; i < n; ++i) {
                if (m[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                // Bareiss: division by the previous pivot is exact.
                m[i][j] = num / prev_pivot;
            }
            m[i][k] = 0;
        }
        prev_pivot = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::vector<Int> det_prime_factors(const Int& d) {
    if (d == 0)
        throw std::invalid_argument(
            "zero determinant has no prime factorization");
    Int v = d < 0 ? Int(-d) : d;
    std::vector<Int> out;
    // Trial division capped at 10^6; any cofactor surviving the cap is
    // appended whole (it is prime whenever |d| < 10^12, which covers
    // every determinant this tool is expected to report).
    for (Int p = 2; p * p <= v && p <= 1000000; ++p) {
        while (v % p == 0) {
            out.push_back(p);
            v /= p;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

}  // namespace normcert
