/*
 * normcert — exact nondegeneracy certification for norm morphisms of
 * finite abelian group representations.
 *
 * C interface over the C++ engine: opaque handles, integer status
 * codes, and reports rendered to caller-owned strings.  All functions
 * are thread-safe; the last-error message is thread-local.
 */
#ifndef NORMCERT_H
#define NORMCERT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nc_group nc_group;
typedef struct nc_report nc_report;

typedef enum nc_status {
    NC_OK = 0,
    /* Bad input: unparsable group spec, invalid parameters, or an
     * output format a payload does not support. */
    NC_ERR_INVALID = 1,
    /* Engine failure: out of memory, internal inconsistency. */
    NC_ERR_INTERNAL = 2,
    /* A self-check the underlying theory guarantees did not hold, or a
     * bounded search gave up; the report (when produced) has details. */
    NC_ERR_CERTIFICATE = 3,
} nc_status;

/* Version string of the library ("1.0.0"). Static storage; do not free. */
const char* nc_version(void);

/* Thread-local message describing the most recent failure in this
 * thread. Static storage; valid until the next failing call. */
const char* nc_last_error(void);

/* ---- groups ---------------------------------------------------- */

/* Parses "q1xq2x..." (case-insensitive separator, positive factors). */
nc_status nc_group_parse(const char* spec, nc_group** out);
void nc_group_free(nc_group* g);

long nc_group_order(const nc_group* g);

/* Canonical elementary-divisor spec ("2x12"); caller frees with
 * nc_string_free. */
nc_status nc_group_normalized_spec(const nc_group* g, char** out);

/* ---- reports ---------------------------------------------------- */

/* Orbit coefficient matrix of the regular permutation action, with
 * exact determinant and its prime factors. */
nc_status nc_matrix_report(const nc_group* g, nc_report** out);

/* Nondegeneracy verdict. basis is "perm" or "eigen"; multiplicities
 * (eigen only; length must equal the group order) selects a custom
 * eigen representation, pass NULL/0 for the regular one. */
nc_status nc_check_report(const nc_group* g, const char* basis,
                          const long* multiplicities,
                          size_t multiplicities_len, nc_report** out);

/* Case-dispatched degeneracy witness monomial with its verified
 * coefficient.  NC_ERR_CERTIFICATE when the coefficient is not zero
 * (the report is still produced). */
nc_status nc_witness_report(const nc_group* g, nc_report** out);

/* Prime-case counting certificates. a/a_len select one composition;
 * pass NULL/0 for all of them.  NC_ERR_CERTIFICATE when any check
 * fails (the report is still produced). */
nc_status nc_certify_prime_report(long p, const long* a, size_t a_len,
                                  nc_report** out);

/* Even/odd subset counts in dimension k with the explicit pairing;
 * v1_bits is a k-character 0/1 string. */
nc_status nc_lemma2_report(long k, const char* v1_bits, nc_report** out);

/* Verdicts for every abelian group of order <= max_order, with
 * conformance against the prime-or-4 rule. */
nc_status nc_sweep_report(long max_order, nc_report** out);

/* 1 = nondegenerate, 0 = degenerate, -1 = not a verdict report. */
int nc_report_verdict(const nc_report* r);

/* Renders to "json", "csv", or "pretty"; caller frees *out with
 * nc_string_free. */
nc_status nc_report_render(const nc_report* r, const char* format,
                           char** out);

void nc_report_free(nc_report* r);
void nc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* NORMCERT_H */
