#include "commands.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "expansion.hpp"
#include "parallel.hpp"

namespace normcert {

namespace {

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long ms() const {
        return static_cast<long>(
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start_)
                .count());
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

std::string join_longs(const std::vector<long>& v, char sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << sep;
        out << v[i];
    }
    return out.str();
}

}  // namespace

CommandResult cmd_matrix(const std::string& group_spec) {
    Stopwatch watch;
    AbelianGroup g(parse_group_spec(group_spec));
    PermAction action = PermAction::regular(g);
    CoefficientMatrix cm = assemble_matrix(action);
    Int det = determinant_bareiss(cm.entries);
    std::vector<Int> factors;
    if (det != 0) factors = det_prime_factors(det);
    CommandResult res;
    res.report = envelope("matrix --group " + group_spec,
                          group_json(group_spec, g),
                          ordered_json("regular-perm"),
                          result_matrix(g, cm, det, factors));
    res.report["duration_ms"] = watch.ms();
    return res;
}

CommandResult cmd_check(
    const std::string& group_spec, const std::string& basis,
    const std::optional<std::vector<long>>& multiplicities) {
    Stopwatch watch;
    if (basis != "perm" && basis != "eigen")
        throw std::invalid_argument("basis must be 'perm' or 'eigen'");
    if (multiplicities && basis != "eigen")
        throw std::invalid_argument(
            "multiplicities are only meaningful in the eigen basis");
    AbelianGroup g(parse_group_spec(group_spec));

    std::ostringstream cmd;
    cmd << "check --group " << group_spec << " --basis " << basis;
    ordered_json representation;
    Verdict verdict;
    if (basis == "perm") {
        representation = "regular-perm";
        verdict = nondegenerate_perm(PermAction::regular(g));
    } else if (!multiplicities) {
        representation = "regular-eigen";
        verdict = nondegenerate_eigen(EigenAction::regular(g));
    } else {
        cmd << " --multiplicities " << join_longs(*multiplicities, ',');
        representation = ordered_json();
        representation["kind"] = "custom-eigen";
        representation["multiplicities"] = *multiplicities;
        verdict = nondegenerate_eigen(EigenAction::custom(g, *multiplicities));
    }
    CommandResult res;
    res.report = envelope(cmd.str(), group_json(group_spec, g),
                          representation, result_verdict(g, verdict));
    res.report["duration_ms"] = watch.ms();
    res.verdict = verdict.nondegenerate ? 1 : 0;
    return res;
}

CommandResult cmd_witness(const std::string& group_spec) {
    Stopwatch watch;
    AbelianGroup g(parse_group_spec(group_spec));
    WitnessMonomial w = select_witness(g);
    // The witness lives over the canonical form of the group.
    AbelianGroup canon(g.normalized());
    CyclotomicInt coefficient = eigen_coefficient(canon, w.exps);
    bool verified = coefficient.is_zero();
    CommandResult res;
    res.report = envelope("witness --group " + group_spec,
                          group_json(group_spec, g),
                          ordered_json("regular-eigen"),
                          result_witness(canon, w, coefficient, verified));
    res.report["duration_ms"] = watch.ms();
    res.certificate_ok = verified;
    return res;
}

CommandResult cmd_certify_prime(long p,
                                const std::optional<std::vector<long>>& a) {
    Stopwatch watch;
    std::vector<std::vector<long>> compositions;
    std::string cmd = "certify-prime --p " + std::to_string(p);
    if (a) {
        cmd += " --a " + join_longs(*a, ',');
        compositions.push_back(*a);
    } else {
        for (const Exponents& c : prime_compositions(p))
            compositions.push_back(std::vector<long>(c.begin(), c.end()));
    }
    std::vector<PrimeCertificate> certs(compositions.size());
    parallel_for(compositions.size(), [&](std::size_t i) {
        certs[i] = prime_certificate(p, compositions[i]);
    });
    bool all_ok = true;
    for (const PrimeCertificate& c : certs) all_ok = all_ok && c.all_ok();
    CommandResult res;
    res.report = envelope(cmd, std::nullopt, std::nullopt,
                          result_prime_certificates(p, certs));
    res.report["duration_ms"] = watch.ms();
    res.certificate_ok = all_ok;
    return res;
}

CommandResult cmd_lemma2(long k, const std::string& v1_bits) {
    Stopwatch watch;
    if (static_cast<long>(v1_bits.size()) != k)
        throw std::invalid_argument("--v1 must have exactly k bits");
    unsigned long v1 = 0;
    for (char c : v1_bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("--v1 must be a bit string");
        v1 = (v1 << 1) | static_cast<unsigned long>(c - '0');
    }
    Lemma2Result lr = lemma2_counts(k, v1);
    CommandResult res;
    res.report = envelope(
        "lemma2 --dim " + std::to_string(k) + " --v1 " + v1_bits,
        std::nullopt, std::nullopt, result_lemma2(lr));
    res.report["duration_ms"] = watch.ms();
    return res;
}

CommandResult cmd_sweep(long max_order) {
    Stopwatch watch;
    if (max_order < 1)
        throw std::invalid_argument("--max-order must be at least 1");
    std::vector<SweepRow> rows;
    for (long order = 1; order <= max_order; ++order) {
        bool expected =
            order == 1 || order == 4 || is_prime(order);
        for (const std::vector<long>& chain : all_abelian_groups(order)) {
            AbelianGroup g(chain);
            Verdict v = nondegenerate_eigen(EigenAction::regular(g));
            SweepRow row;
            row.order = order;
            row.spec = format_moduli(chain);
            row.nondegenerate = v.nondegenerate;
            row.expected_nondegenerate = expected;
            if (!v.nondegenerate) {
                row.witness = v.witness;
                row.moduli = chain;
            }
            rows.push_back(std::move(row));
        }
    }
    CommandResult res;
    res.report = envelope("sweep --max-order " + std::to_string(max_order),
                          std::nullopt, std::nullopt,
                          result_sweep(max_order, rows));
    res.report["duration_ms"] = watch.ms();
    return res;
}

}  // namespace normcert
