// C ABI shell over the command runners: exception-to-status mapping,
// opaque handle lifetime, and thread-local error text.
#include "normcert.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "core/commands.hpp"
#include "core/version.hpp"

struct nc_group {
    normcert::AbelianGroup group;
    std::string spec;
};

struct nc_report {
    normcert::ordered_json report;
    int verdict = -1;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn() (which must return nc_status) translating exceptions into
// status codes and recording their messages.
template <typename F>
nc_status guarded(F&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return NC_ERR_INVALID;
    } catch (const normcert::certificate_failure& e) {
        set_error(e.what());
        return NC_ERR_CERTIFICATE;
    } catch (const normcert::search_failure& e) {
        set_error(e.what());
        return NC_ERR_CERTIFICATE;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return NC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return NC_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown internal error");
        return NC_ERR_INTERNAL;
    }
}

nc_status finish_command(normcert::CommandResult&& res, nc_report** out) {
    auto* r = new nc_report{std::move(res.report), res.verdict};
    *out = r;
    if (!res.certificate_ok) {
        set_error(
            "a certificate self-check failed; see the report for details");
        return NC_ERR_CERTIFICATE;
    }
    return NC_OK;
}

}  // namespace

extern "C" {

const char* nc_version(void) { return NORMCERT_VERSION; }

const char* nc_last_error(void) { return g_last_error.c_str(); }

nc_status nc_group_parse(const char* spec, nc_group** out) {
    if (!spec || !out) {
        set_error("spec and out must be non-null");
        return NC_ERR_INVALID;
    }
    *out = nullptr;
    return guarded([&]() -> nc_status {
        std::string s(spec);
        *out = new nc_group{
            normcert::AbelianGroup(normcert::parse_group_spec(s)), s};
        return NC_OK;
    });
}

void nc_group_free(nc_group* g) { delete g; }

long nc_group_order(const nc_group* g) { return g ? g->group.order() : 0; }

nc_status nc_group_normalized_spec(const nc_group* g, char** out) {
    if (!g || !out) {
        set_error("group and out must be non-null");
        return NC_ERR_INVALID;
    }
    *out = nullptr;
    return guarded([&]() -> nc_status {
        std::string spec = normcert::format_moduli(g->group.normalized());
        *out = dup_string(spec);
        if (!*out) {
            set_error("out of memory");
            return NC_ERR_INTERNAL;
        }
        return NC_OK;
    });
}

nc_status nc_matrix_report(const nc_group* g, nc_report** out) {
    if (!g || !out) {
        set_error("group and out must be non-null");
        return NC_ERR_INVALID;
    }
    *out = nullptr;
    return guarded([&]() -> nc_status {
        return finish_command(normcert::cmd_matrix(g->spec), out);
    });
}

nc_status nc_check_report(const nc_group* g, const char* basis,
                          const long* multiplicities,
                          size_t multiplicities_len, nc_report** out) {
    if (!g || !basis || !out) {
        set_error("group, basis and out must be non-null");
        return NC_ERR_INVALID;
    }
    *out = nullptr;
    return guarded([&]() -> nc_status {
        std::optional<std::vector<long>> mult;
        if (multiplicities && multiplicities_len > 0)
            mult = std::vector<long>(multiplicities,
                                     multiplicities + multiplicities_len);
        return finish_command(normcert::cmd_check(g->spec, basis, mult), out);
    });
}

nc_status nc_witness_report(const nc_group* g, nc_report** out) {
    if (!g || !out) {
        set_error("group and out must be non-null");
        return NC_ERR_INVALID;
    }
    *out = nullptr;
    return guarded([&]() -> nc_status {
        return finish_command(normcert::cmd_witness(g->spec), out);
    });
}

nc_status nc_certify_prime_report(long p, const long* a, size_t a_len,
                                  nc_report** out) {
    if (!out) {
        set_error("out must be non-null");
        return NC_ERR_INVALID;
    }
    *out = nullptr;
    return guarded([&]() -> nc_status {
        std::optional<std::vector<long>> comp;
        if (a && a_len > 0) comp = std::vector<long>(a, a + a_len);
        return finish_command(normcert::cmd_certify_prime(p, comp), out);
    });
}

nc_status nc_lemma2_report(long k, const char* v1_bits, nc_report** out) {
    if (!v1_bits || !out) {
        set_error("v1_bits and out must be non-null");
        return NC_ERR_INVALID;
    }
    *out = nullptr;
    return guarded([&]() -> nc_status {
        return finish_command(normcert::cmd_lemma2(k, v1_bits), out);
    });
}

nc_status nc_sweep_report(long max_order, nc_report** out) {
    if (!out) {
        set_error("out must be non-null");
        return NC_ERR_INVALID;
    }
    *out = nullptr;
    return guarded([&]() -> nc_status {
        return finish_command(normcert::cmd_sweep(max_order), out);
    });
}

int nc_report_verdict(const nc_report* r) { return r ? r->verdict : -1; }

nc_status nc_report_render(const nc_report* r, const char* format,
                           char** out) {
    if (!r || !format || !out) {
        set_error("report, format and out must be non-null");
        return NC_ERR_INVALID;
    }
    *out = nullptr;
    return guarded([&]() -> nc_status {
        std::string rendered =
            normcert::render(r->report, normcert::parse_format(format));
        *out = dup_string(rendered);
        if (!*out) {
            set_error("out of memory");
            return NC_ERR_INTERNAL;
        }
        return NC_OK;
    });
}

void nc_report_free(nc_report* r) { delete r; }

void nc_string_free(char* s) { std::free(s); }

}  // extern "C"
