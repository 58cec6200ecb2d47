#include "report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "version.hpp"

namespace normcert {

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "pretty") return Format::Pretty;
    throw std::invalid_argument("unknown format '" + name +
                                "' (expected json, csv, or pretty)");
}

ordered_json json_int(const Int& v) {
    if (fits_int64(v)) return ordered_json(to_int64(v));
    return ordered_json(to_decimal(v));
}

ordered_json monomial_json(const AbelianGroup& g, const Exponents& exps) {
    ordered_json arr = ordered_json::array();
    for (long v = 0; v < static_cast<long>(exps.size()); ++v) {
        if (exps[v] == 0) continue;
        ordered_json term;
        term["var"] = g.label(v);
        term["exp"] = exps[v];
        arr.push_back(std::move(term));
    }
    return arr;
}

std::string monomial_pretty(const AbelianGroup& g, const Exponents& exps) {
    std::ostringstream out;
    bool first = true;
    for (long v = 0; v < static_cast<long>(exps.size()); ++v) {
        if (exps[v] == 0) continue;
        if (!first) out << "·";
        out << "X[" << g.label(v) << "]^" << exps[v];
        first = false;
    }
    if (first) out << "1";
    return out.str();
}

ordered_json cyclotomic_json(const CyclotomicInt& v) {
    ordered_json j;
    j["n"] = v.conductor();
    ordered_json coeffs = ordered_json::array();
    for (const Int& c : v.coeffs()) coeffs.push_back(json_int(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

namespace {

std::string cyclotomic_pretty(const CyclotomicInt& v) {
    std::ostringstream out;
    out << "[";
    const auto& c = v.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out << ", ";
        out << c[i].get_str(10);
    }
    out << "] in basis 1..ζ^" << (c.size() - 1) << " (conductor "
        << v.conductor() << ")";
    return out.str();
}

}  // namespace

ordered_json group_json(const std::string& spec, const AbelianGroup& g) {
    ordered_json j;
    j["spec"] = spec;
    j["moduli"] = g.moduli();
    j["normalized"] = g.normalized();
    j["order"] = g.order();
    return j;
}

ordered_json envelope(const std::string& command,
                      const std::optional<ordered_json>& group,
                      const std::optional<ordered_json>& representation,
                      ordered_json result) {
    ordered_json env;
    env["tool"] = "normcert";
    env["version"] = NORMCERT_VERSION;
    env["command"] = command;
    env["group"] = group ? *group : ordered_json(nullptr);
    env["representation"] =
        representation ? *representation : ordered_json(nullptr);
    env["result"] = std::move(result);
    env["duration_ms"] = 0;
    return env;
}

ordered_json result_matrix(const AbelianGroup& g, const CoefficientMatrix& cm,
                           const Int& det, const std::vector<Int>& factors) {
    ordered_json r;
    r["kind"] = "matrix";
    r["orbit_count"] = cm.size();
    ordered_json reps = ordered_json::array();
    ordered_json sizes = ordered_json::array();
    for (long i = 0; i < cm.size(); ++i) {
        reps.push_back(monomial_json(g, cm.table.reps[i]));
        sizes.push_back(cm.table.orbits[i].size());
    }
    r["orbit_reps"] = std::move(reps);
    r["orbit_sizes"] = std::move(sizes);
    ordered_json entries = ordered_json::array();
    for (const auto& row : cm.entries) {
        ordered_json jrow = ordered_json::array();
        for (const Int& e : row) jrow.push_back(json_int(e));
        entries.push_back(std::move(jrow));
    }
    r["entries"] = std::move(entries);
    r["determinant"] = json_int(det);
    if (det == 0) {
        r["det_prime_factors"] = ordered_json(nullptr);
    } else {
        ordered_json f = ordered_json::array();
        for (const Int& p : factors) f.push_back(json_int(p));
        r["det_prime_factors"] = std::move(f);
    }
    return r;
}

ordered_json result_verdict(const AbelianGroup& g, const Verdict& v) {
    ordered_json r;
    r["kind"] = "verdict";
    r["basis"] = v.basis;
    r["verdict"] = v.nondegenerate ? "nondegenerate" : "degenerate";
    r["entries_checked"] = v.entries_checked;
    if (v.basis == "perm") {
        r["determinant"] =
            v.determinant ? json_int(*v.determinant) : ordered_json(nullptr);
        if (v.nondegenerate) {
            ordered_json f = ordered_json::array();
            for (const Int& p : v.det_factors) f.push_back(json_int(p));
            r["det_prime_factors"] = std::move(f);
        } else {
            r["det_prime_factors"] = ordered_json(nullptr);
        }
    } else {
        if (v.nondegenerate) {
            ordered_json diag = ordered_json::array();
            for (const DiagonalEntry& d : v.diagonal) {
                ordered_json e;
                e["multiset"] = monomial_json(g, d.multiset);
                e["value"] = cyclotomic_json(d.value);
                diag.push_back(std::move(e));
            }
            r["diagonal"] = std::move(diag);
            r["witness"] = ordered_json(nullptr);
            r["witness_value"] = ordered_json(nullptr);
        } else {
            r["diagonal"] = ordered_json(nullptr);
            r["witness"] = monomial_json(g, *v.witness);
            r["witness_value"] = cyclotomic_json(*v.witness_value);
        }
    }
    return r;
}

ordered_json result_witness(const AbelianGroup& g, const WitnessMonomial& w,
                            const CyclotomicInt& coefficient,
                            bool verified_zero) {
    ordered_json r;
    r["kind"] = "witness";
    r["case"] = w.case_tag;
    r["p"] = w.p;
    r["q"] = w.q;
    r["subgroup"] = w.subgroup;
    r["monomial"] = monomial_json(g, w.exps);
    r["degree"] = degree_of(w.exps);
    r["weight"] = g.label(weight_rank(g, w.exps));
    r["coefficient"] = cyclotomic_json(coefficient);
    r["verified_zero"] = verified_zero;
    return r;
}

ordered_json result_prime_certificates(
    long p, const std::vector<PrimeCertificate>& certs) {
    ordered_json r;
    r["kind"] = "prime-certificates";
    r["p"] = p;
    ordered_json list = ordered_json::array();
    bool all_ok = true;
    for (const PrimeCertificate& c : certs) {
        ordered_json j;
        j["p"] = c.p;
        j["a"] = c.a;
        ordered_json counts;
        for (long x = 0; x < c.p; ++x)
            counts[std::to_string(x)] = json_int(c.counts[x]);
        j["counts"] = std::move(counts);
        ordered_json poly = ordered_json::array();
        for (const Int& co : c.reduced.coeffs()) poly.push_back(json_int(co));
        j["reduced_poly"] = std::move(poly);
        ordered_json checks;
        checks["sum_is_factorial"] = c.sum_is_factorial;
        checks["p_divides_counts"] = c.p_divides_counts;
        checks["count0_ne_count1"] = c.count0_ne_count1;
        checks["unit_symmetry"] = c.unit_symmetry;
        checks["reduced_nonzero"] = c.reduced_nonzero;
        checks["matches_eigen"] = c.matches_eigen;
        j["checks"] = std::move(checks);
        j["all_ok"] = c.all_ok();
        all_ok = all_ok && c.all_ok();
        list.push_back(std::move(j));
    }
    r["certificates"] = std::move(list);
    r["all_ok"] = all_ok;
    return r;
}

namespace {

std::string f2_label(unsigned long e, long k) {
    std::string s;
    for (long b = k - 1; b >= 0; --b) s += ((e >> b) & 1ul) ? '1' : '0';
    return s;
}

ordered_json subset_json(unsigned long mask, long k) {
    ordered_json arr = ordered_json::array();
    for (unsigned long e = 0; e < (1ul << k); ++e)
        if ((mask >> e) & 1ul) arr.push_back(f2_label(e, k));
    return arr;
}

std::string subset_pretty(unsigned long mask, long k) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (unsigned long e = 0; e < (1ul << k); ++e) {
        if (!((mask >> e) & 1ul)) continue;
        if (!first) out << ",";
        out << f2_label(e, k);
        first = false;
    }
    out << "}";
    return out.str();
}

}  // namespace

ordered_json result_lemma2(const Lemma2Result& res) {
    ordered_json r;
    r["kind"] = "lemma2";
    r["k"] = res.k;
    r["v1"] = f2_label(res.v1, res.k);
    r["count_even_zero"] = res.count_even_zero;
    r["count_odd_v1"] = res.count_odd_v1;
    ordered_json pairs = ordered_json::array();
    for (const auto& [a, b] : res.pairing) {
        ordered_json pj;
        pj["a"] = subset_json(a, res.k);
        pj["b"] = subset_json(b, res.k);
        pairs.push_back(std::move(pj));
    }
    r["pairing"] = std::move(pairs);
    return r;
}

ordered_json result_sweep(long max_order, const std::vector<SweepRow>& rows) {
    ordered_json r;
    r["kind"] = "sweep";
    r["max_order"] = max_order;
    ordered_json list = ordered_json::array();
    bool all_conform = true;
    for (const SweepRow& row : rows) {
        ordered_json j;
        j["order"] = row.order;
        j["group"] = row.spec;
        j["verdict"] = row.nondegenerate ? "nondegenerate" : "degenerate";
        j["expected"] =
            row.expected_nondegenerate ? "nondegenerate" : "degenerate";
        bool conforms = row.nondegenerate == row.expected_nondegenerate;
        j["conforms"] = conforms;
        all_conform = all_conform && conforms;
        if (row.witness && row.moduli) {
            AbelianGroup g(*row.moduli);
            j["witness"] = monomial_json(g, *row.witness);
        } else {
            j["witness"] = ordered_json(nullptr);
        }
        list.push_back(std::move(j));
    }
    r["rows"] = std::move(list);
    r["all_conform"] = all_conform;
    return r;
}

namespace {

std::string render_csv(const ordered_json& env) {
    const ordered_json& result = env.at("result");
    if (result.at("kind") != "matrix")
        throw std::invalid_argument(
            "CSV output is only defined for integer matrix reports");
    std::ostringstream out;
    for (const auto& row : result.at("entries")) {
        bool first = true;
        for (const auto& e : row) {
            if (!first) out << ",";
            out << e.dump();
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

std::string group_pretty_line(const ordered_json& env) {
    if (env.at("group").is_null()) return "";
    const ordered_json& g = env.at("group");
    std::ostringstream out;
    out << "group: " << g.at("spec").get<std::string>() << " (order "
        << g.at("order").get<long>() << ", canonical ";
    const auto& norm = g.at("normalized");
    for (std::size_t i = 0; i < norm.size(); ++i) {
        if (i) out << "x";
        out << norm[i].get<long>();
    }
    out << ")\n";
    return out.str();
}

std::string monomial_terms_pretty(const ordered_json& m) {
    if (m.is_null()) return "(none)";
    std::ostringstream out;
    bool first = true;
    for (const auto& term : m) {
        if (!first) out << "·";
        out << "X[" << term.at("var").get<std::string>() << "]^"
            << term.at("exp").get<long>();
        first = false;
    }
    if (first) out << "1";
    return out.str();
}

std::string int_field(const ordered_json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string render_pretty(const ordered_json& env) {
    std::ostringstream out;
    out << "normcert " << env.at("version").get<std::string>() << " — "
        << env.at("command").get<std::string>() << "\n";
    out << group_pretty_line(env);
    const ordered_json& result = env.at("result");
    const std::string kind = result.at("kind").get<std::string>();
    if (kind == "matrix") {
        long n = result.at("orbit_count").get<long>();
        out << "orbits: " << n << "\n";
        for (long i = 0; i < n; ++i)
            out << "  O[" << i
                << "] = " << monomial_terms_pretty(result.at("orbit_reps")[i])
                << "  (orbit size " << result.at("orbit_sizes")[i].get<long>()
                << ")\n";
        // Aligned matrix body.
        std::size_t width = 1;
        for (const auto& row : result.at("entries"))
            for (const auto& e : row)
                width = std::max(width, int_field(e).size());
        out << "matrix:\n";
        for (const auto& row : result.at("entries")) {
            out << " ";
            for (const auto& e : row) {
                std::string s = int_field(e);
                out << " " << std::string(width - s.size(), ' ') << s;
            }
            out << "\n";
        }
        out << "determinant: " << int_field(result.at("determinant")) << "\n";
        if (result.at("det_prime_factors").is_null()) {
            out << "prime factors of |det|: (degenerate, determinant 0)\n";
        } else if (result.at("det_prime_factors").empty()) {
            out << "prime factors of |det|: (unit — nondegenerate in every "
                   "characteristic)\n";
        } else {
            out << "prime factors of |det|:";
            for (const auto& p : result.at("det_prime_factors"))
                out << " " << int_field(p);
            out << "\n";
        }
    } else if (kind == "verdict") {
        out << "basis: " << result.at("basis").get<std::string>() << "\n";
        out << "verdict: " << result.at("verdict").get<std::string>() << "\n";
        out << "entries checked: " << result.at("entries_checked").get<long>()
            << "\n";
        if (result.at("basis") == "perm") {
            out << "determinant: " << int_field(result.at("determinant"))
                << "\n";
        } else if (result.at("verdict") == "degenerate") {
            out << "witness: " << monomial_terms_pretty(result.at("witness"))
                << "\n";
            out << "witness coefficient: verified exact zero\n";
        } else {
            out << "diagonal coefficients: all nonzero ("
                << result.at("diagonal").size()
                << " invariant multisets; values in the JSON report)\n";
        }
    } else if (kind == "witness") {
        out << "case: " << result.at("case").get<std::string>()
            << "  (p = " << result.at("p").get<long>()
            << ", q = " << result.at("q").get<long>() << ", "
            << result.at("subgroup").get<std::string>() << ")\n";
        out << "monomial: " << monomial_terms_pretty(result.at("monomial"))
            << "\n";
        out << "degree: " << result.at("degree").get<long>()
            << "  weight: " << result.at("weight").get<std::string>() << "\n";
        const ordered_json& c = result.at("coefficient");
        out << "coefficient coeffs (conductor " << c.at("n").get<long>()
            << "): [";
        for (std::size_t i = 0; i < c.at("coeffs").size(); ++i) {
            if (i) out << ", ";
            out << int_field(c.at("coeffs")[i]);
        }
        out << "]\n";
        out << "verified zero: "
            << (result.at("verified_zero").get<bool>() ? "yes" : "NO")
            << "\n";
    } else if (kind == "prime-certificates") {
        out << "p = " << result.at("p").get<long>() << ", "
            << result.at("certificates").size() << " composition(s)\n";
        for (const auto& c : result.at("certificates")) {
            out << "  a = (";
            for (std::size_t i = 0; i < c.at("a").size(); ++i) {
                if (i) out << ",";
                out << c.at("a")[i].get<long>();
            }
            out << ")  counts = [";
            bool first = true;
            for (const auto& [key, val] : c.at("counts").items()) {
                if (!first) out << ", ";
                out << key << ":" << int_field(val);
                first = false;
            }
            out << "]  checks: " << (c.at("all_ok").get<bool>() ? "pass" : "FAIL")
                << "\n";
        }
        out << "all certificates: "
            << (result.at("all_ok").get<bool>() ? "pass" : "FAIL") << "\n";
    } else if (kind == "lemma2") {
        out << "k = " << result.at("k").get<long>() << ", v1 = "
            << result.at("v1").get<std::string>() << "\n";
        out << "|{A : |A| even, sum A = 0}|  = "
            << result.at("count_even_zero").get<long>() << "\n";
        out << "|{A : |A| odd,  sum A = v1}| = "
            << result.at("count_odd_v1").get<long>() << "\n";
        out << "pairing A -> A △ {v1}:\n";
        for (const auto& pr : result.at("pairing")) {
            auto fmt = [](const ordered_json& subset) {
                std::ostringstream s;
                s << "{";
                for (std::size_t i = 0; i < subset.size(); ++i) {
                    if (i) s << ",";
                    s << subset[i].get<std::string>();
                }
                s << "}";
                return s.str();
            };
            out << "  " << fmt(pr.at("a")) << " -> " << fmt(pr.at("b"))
                << "\n";
        }
    } else if (kind == "sweep") {
        out << "conformance against the prime-or-4 rule, orders 1.."
            << result.at("max_order").get<long>() << "\n";
        out << "order  group        verdict        expected       conforms\n";
        for (const auto& row : result.at("rows")) {
            std::ostringstream o1;
            o1 << row.at("order").get<long>();
            std::string group = row.at("group").get<std::string>();
            std::string verdict = row.at("verdict").get<std::string>();
            std::string expected = row.at("expected").get<std::string>();
            out << o1.str() << std::string(7 - std::min<std::size_t>(6, o1.str().size()), ' ')
                << group << std::string(group.size() < 12 ? 13 - group.size() : 1, ' ')
                << verdict << std::string(verdict.size() < 14 ? 15 - verdict.size() : 1, ' ')
                << expected << std::string(expected.size() < 14 ? 15 - expected.size() : 1, ' ')
                << (row.at("conforms").get<bool>() ? "yes" : "NO") << "\n";
        }
        out << "all rows conform: "
            << (result.at("all_conform").get<bool>() ? "yes" : "NO") << "\n";
    } else {
        out << result.dump(2) << "\n";
    }
    out << "duration: " << env.at("duration_ms").get<long>() << " ms\n";
    return out.str();
}

}  // namespace

std::string render(const ordered_json& env, Format format) {
    switch (format) {
        case Format::Json:
            return env.dump(2) + "\n";
        case Format::Csv:
            return render_csv(env);
        case Format::Pretty:
            return render_pretty(env);
    }
    throw std::logic_error("unknown format");
}

}  // namespace normcert
