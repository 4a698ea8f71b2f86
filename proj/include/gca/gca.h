/*
 * C API for the generalized Clifford algebra workbench.
 *
 * All functions return a gca_status code; 0 is success.  Functions that
 * produce text allocate a NUL-terminated buffer into *out which the caller
 * releases with gca_string_free.  Error details are retrievable per context
 * via gca_ctx_last_error, or via gca_global_last_error for calls that have
 * no context (constructors, gca_gauss, gca_render).
 *
 * Contexts are immutable after creation and may be shared across threads for
 * concurrent read-only use.
 */
#ifndef GCA_H
#define GCA_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GCA_API __declspec(dllexport)
#else
#define GCA_API __attribute__((visibility("default")))
#endif

typedef struct gca_ctx gca_ctx;

typedef enum gca_status {
    GCA_OK = 0,
    GCA_CHECK_FAILED = 1, /* a requested verification found failures */
    GCA_USAGE_ERROR = 2,  /* bad arguments, parse error, schema violation */
    GCA_INTERNAL_ERROR = 3
} gca_status;

GCA_API const char* gca_version(void);

/* backend is "exact" or "float"; n is the qudit count (2n generators). */
GCA_API int gca_ctx_new(int N, int n, const char* backend, gca_ctx** out);
GCA_API void gca_ctx_free(gca_ctx* ctx);
GCA_API const char* gca_ctx_last_error(const gca_ctx* ctx);
GCA_API const char* gca_global_last_error(void);

/* 1 if omega was identified exactly as a root of unity (always, unless the
 * float fallback engaged). */
GCA_API int gca_ctx_root_identified(const gca_ctx* ctx);

/* Normal form of an algebra expression; as_json selects the serialized JSON
 * schema over the human-readable exact form. */
GCA_API int gca_normal_form(gca_ctx* ctx, const char* expr, int as_json, char** out);

/* Evaluates expr (a braid word or state expression); if it is not already a
 * state it is applied to the ground state. */
GCA_API int gca_state(gca_ctx* ctx, const char* expr, int as_json, char** out);

/* Vacuum expectation value of an algebra expression. */
GCA_API int gca_vev(gca_ctx* ctx, const char* expr, int as_json, char** out);

/* Runs a verification family: relations | intertwiners | unitarity | ybe |
 * moves | states | all.  Writes the report either way; returns
 * GCA_CHECK_FAILED when any individual check failed. */
GCA_API int gca_verify(gca_ctx* ctx, const char* suite, int as_json, char** out);

/* Gauss-sum diagnostics for dimension N (context-free). */
GCA_API int gca_gauss(int N, int as_json, char** out);

/* Renders a braid word / state expression on 2n strands; format is "svg" or
 * "tikz".  strand_pitch/row_height <= 0 select the defaults. */
GCA_API int gca_render(int n, const char* expr, const char* format, double strand_pitch,
                       double row_height, char** out);

/* Serialized JSON of the evaluated expression (scalar, element, or state). */
GCA_API int gca_eval_json(gca_ctx* ctx, const char* expr, char** out);

/* Deserializes a JSON value and re-serializes it canonically (round-trip
 * surface for the file schema). */
GCA_API int gca_roundtrip_json(gca_ctx* ctx, const char* value_json, char** out);

GCA_API void gca_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* GCA_H */
