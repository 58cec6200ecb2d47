// Report assembly and rendering.
//
// Every command produces one envelope: tool identity, the canonical
// command string, group information, representation kind, a result
// payload, and the wall-clock duration.  JSON key order is fixed, so
// identical command lines render byte-identical JSON apart from
// duration_ms.  CSV is defined for integer matrices only; cyclotomic
// payloads are JSON-only.
#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "criterion.hpp"
#include "cyclotomic.hpp"
#include "group.hpp"
#include "matrixops.hpp"
#include "monomial.hpp"
#include "witness.hpp"

namespace normcert {

enum class Format { Json, Csv, Pretty };

// "json" | "csv" | "pretty"; anything else -> invalid-argument.
Format parse_format(const std::string& name);

using ordered_json = nlohmann::ordered_json;

// Integers render as JSON numbers when they fit in int64, otherwise as
// decimal strings (exactness beats convenience at these sizes).
ordered_json json_int(const Int& v);

// Monomial as [{"var": label, "exp": e}, ...] over variables with
// positive exponent, ascending rank.
ordered_json monomial_json(const AbelianGroup& g, const Exponents& exps);
std::string monomial_pretty(const AbelianGroup& g, const Exponents& exps);

// {"n": conductor, "coeffs": [c_0, ..., c_{phi(n)-1}]}
ordered_json cyclotomic_json(const CyclotomicInt& v);

ordered_json group_json(const std::string& spec, const AbelianGroup& g);

ordered_json envelope(const std::string& command,
                      const std::optional<ordered_json>& group,
                      const std::optional<ordered_json>& representation,
                      ordered_json result);

// Result payload builders.
ordered_json result_matrix(const AbelianGroup& g, const CoefficientMatrix& cm,
                           const Int& det, const std::vector<Int>& factors);
ordered_json result_verdict(const AbelianGroup& g, const Verdict& v);
ordered_json result_witness(const AbelianGroup& g, const WitnessMonomial& w,
                            const CyclotomicInt& coefficient,
                            bool verified_zero);
ordered_json result_prime_certificates(
    long p, const std::vector<PrimeCertificate>& certs);
ordered_json result_lemma2(const Lemma2Result& res);

struct SweepRow {
    long order = 0;
    std::string spec;
    bool nondegenerate = false;
    bool expected_nondegenerate = false;  // prime-or-4 rule (and order 1)
    std::optional<Exponents> witness;
    std::optional<std::vector<long>> moduli;
};
ordered_json result_sweep(long max_order, const std::vector<SweepRow>& rows);

std::string render(const ordered_json& env, Format format);

}  // namespace normcert
