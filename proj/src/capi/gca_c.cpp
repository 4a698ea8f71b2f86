#include "gca/gca.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "core/diagram.hpp"
#include "core/error.hpp"
#include "core/serialize.hpp"
#include "core/verify.hpp"

using namespace gca;

extern "C" struct gca_ctx {
    ScalarContext scalars;
    long n = 0;
    std::string last_error;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int status_of(const Error& e) { return static_cast<int>(e.kind()); }

template <typename Fn>
int guarded(gca_ctx* ctx, Fn&& fn) {
    std::string* sink = ctx ? &ctx->last_error : &g_last_error;
    try {
        sink->clear();
        return fn();
    } catch (const Error& e) {
        *sink = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        *sink = e.what();
        return GCA_INTERNAL_ERROR;
    }
}

int write_out(char** out, const std::string& text) {
    if (!out) return GCA_USAGE_ERROR;
    *out = dup_string(text);
    return *out ? GCA_OK : GCA_INTERNAL_ERROR;
}

} // namespace

extern "C" {

const char* gca_version(void) { return "1.0.0"; }

int gca_ctx_new(int N, int n, const char* backend, gca_ctx** out) {
    return guarded(nullptr, [&]() -> int {
        if (!out) throw UsageError("null output pointer");
        if (n < 1) throw UsageError("qudit count n must be at least 1");
        EqBackend b = backend ? backend_from_string(backend) : EqBackend::exact;
        auto ctx = new gca_ctx{ScalarContext::create(N, b), n, {}};
        *out = ctx;
        return GCA_OK;
    });
}

void gca_ctx_free(gca_ctx* ctx) { delete ctx; }

const char* gca_ctx_last_error(const gca_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : g_last_error.c_str();
}

const char* gca_global_last_error(void) { return g_last_error.c_str(); }

int gca_ctx_root_identified(const gca_ctx* ctx) {
    return ctx && ctx->scalars.root_identified() ? 1 : 0;
}

int gca_normal_form(gca_ctx* ctx, const char* expr, int as_json, char** out) {
    return guarded(ctx, [&]() -> int {
        if (!ctx || !expr) throw UsageError("null argument");
        Element x = eval_element(parse_expression(expr), ctx->scalars, ctx->n);
        return write_out(out, as_json ? element_to_json(x).dump()
                                      : print_element(ctx->scalars, x));
    });
}

int gca_state(gca_ctx* ctx, const char* expr, int as_json, char** out) {
    return guarded(ctx, [&]() -> int {
        if (!ctx || !expr) throw UsageError("null argument");
        State s = eval_state(parse_expression(expr), ctx->scalars, ctx->n);
        return write_out(out, as_json ? state_to_json(s).dump() : print_state(ctx->scalars, s));
    });
}

int gca_vev(gca_ctx* ctx, const char* expr, int as_json, char** out) {
    return guarded(ctx, [&]() -> int {
        if (!ctx || !expr) throw UsageError("null argument");
        Element x = eval_element(parse_expression(expr), ctx->scalars, ctx->n);
        Cyclo v = vev(ctx->scalars, x, ctx->n);
        return write_out(out, as_json ? cyclo_to_json(v).dump() : print_scalar(ctx->scalars, v));
    });
}

int gca_verify(gca_ctx* ctx, const char* suite, int as_json, char** out) {
    return guarded(ctx, [&]() -> int {
        if (!ctx) throw UsageError("null context");
        VerifyReport rep = run_suite(ctx->scalars, ctx->n, suite ? suite : "all");
        int rc = write_out(out, as_json ? report_to_json(rep) : report_to_text(rep));
        if (rc != GCA_OK) return rc;
        return rep.failed == 0 ? GCA_OK : GCA_CHECK_FAILED;
    });
}

int gca_gauss(int N, int as_json, char** out) {
    return guarded(nullptr, [&]() -> int {
        GaussReport rep = gauss_diagnostics(N);
        if (as_json) {
            nlohmann::json j{{"N", rep.N},
                             {"sum_a", cyclo_to_json(rep.sum_a)},
                             {"sum_b", cyclo_to_json(rep.sum_b)},
                             {"vanishes_a", rep.vanishes_a},
                             {"vanishes_b", rep.vanishes_b},
                             {"hansen_residuals", {rep.hansen_residual_re, rep.hansen_residual_im}}};
            return write_out(out, j.dump());
        }
        char buf[160];
        std::snprintf(buf, sizeof buf, "%.3e %.3e", rep.hansen_residual_re, rep.hansen_residual_im);
        std::string text = "N = " + std::to_string(rep.N) + "\n";
        text += "sum_a = " + std::string(rep.vanishes_a ? "0" : "nonzero") +
                " (sum of q^-i^2)\n";
        text += "sum_b = " + std::string(rep.vanishes_b ? "0" : "nonzero") +
                " (sum of q^(i-i^2))\n";
        text += "hansen_residuals = " + std::string(buf) + "\n";
        return write_out(out, text);
    });
}

int gca_render(int n, const char* expr, const char* format, double strand_pitch,
               double row_height, char** out) {
    return guarded(nullptr, [&]() -> int {
        if (!expr) throw UsageError("null expression");
        if (n < 1) throw UsageError("qudit count n must be at least 1");
        Layout layout = layout_expr(parse_expression(expr), n);
        DiagramGeometry geo;
        if (strand_pitch > 0) geo.strand_pitch = strand_pitch;
        if (row_height > 0) geo.row_height = row_height;
        std::string fmt_name = format ? format : "svg";
        if (fmt_name == "svg") return write_out(out, emit_svg(layout, geo));
        if (fmt_name == "tikz") return write_out(out, emit_tikz(layout, geo));
        throw UsageError("unknown render format '" + fmt_name + "' (expected svg|tikz)");
    });
}

int gca_eval_json(gca_ctx* ctx, const char* expr, char** out) {
    return guarded(ctx, [&]() -> int {
        if (!ctx || !expr) throw UsageError("null argument");
        Value v = eval(parse_expression(expr), ctx->scalars, ctx->n);
        return write_out(out, serialize(v));
    });
}

int gca_roundtrip_json(gca_ctx* ctx, const char* value_json, char** out) {
    return guarded(ctx, [&]() -> int {
        if (!ctx || !value_json) throw UsageError("null argument");
        return write_out(out, serialize(deserialize(value_json)));
    });
}

void gca_string_free(char* s) { std::free(s); }

} // extern "C"
