// Command-line front end.  Everything goes through the shared-library C API;
// this translation unit deliberately includes no core headers.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "gca/gca.h"

namespace {

struct CtxDeleter {
    void operator()(gca_ctx* c) const { gca_ctx_free(c); }
};
using CtxPtr = std::unique_ptr<gca_ctx, CtxDeleter>;

struct StrDeleter {
    void operator()(char* s) const { gca_string_free(s); }
};
using StrPtr = std::unique_ptr<char, StrDeleter>;

int emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty() || output_path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return 0;
    }
    std::ofstream f(output_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output path " << output_path << "\n";
        return 3;
    }
    f << text;
    return f.good() ? 0 : 3;
}

int fail(int rc, const char* msg) {
    std::cerr << "{\"error\":\"" << (msg && *msg ? msg : "unknown error") << "\",\"code\":" << rc
              << "}\n";
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for generalized Clifford algebra braid identities"};
    app.require_subcommand(1);

    int N = 3, n = 3;
    std::string backend = "exact";
    std::string format = "text";
    std::string output_path;
    app.add_option("--N", N, "qudit dimension (>= 2)")->capture_default_str();
    app.add_option("--n", n, "qudit count; the algebra has 2n generators")->capture_default_str();
    app.add_option("--backend", backend, "equality backend: exact|float")->capture_default_str();
    app.add_option("--format", format, "output format: text|json")->capture_default_str();
    app.add_option("-o,--output", output_path, "output path (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    verify_cmd->add_option("--suite", suite,
                           "relations|intertwiners|unitarity|ybe|moves|states|all")
        ->capture_default_str();

    auto* nf_cmd = app.add_subcommand("nf", "normal form of an algebra expression");
    std::string nf_expr;
    nf_cmd->add_option("--expr", nf_expr, "expression, e.g. \"c[2]*c[1]\"")->required();

    auto* state_cmd = app.add_subcommand("state", "apply a braid word to the ground state");
    std::string word_expr;
    state_cmd->add_option("--word", word_expr, "braid word, e.g. \"b[3,4]*b[2,3]\"")->required();

    auto* vev_cmd = app.add_subcommand("vev", "vacuum expectation value");
    std::string vev_expr;
    vev_cmd->add_option("--expr", vev_expr, "algebra expression")->required();

    auto* gauss_cmd = app.add_subcommand("gauss", "Gauss-sum diagnostics for dimension N");

    auto* render_cmd = app.add_subcommand("render", "draw a braid word as svg or tikz");
    std::string render_word, render_format = "svg";
    double pitch = 0, row_height = 0;
    render_cmd->add_option("--word", render_word, "braid word or state expression")->required();
    render_cmd->add_option("--render-format", render_format, "svg|tikz")->capture_default_str();
    render_cmd->add_option("--pitch", pitch, "strand pitch in px");
    render_cmd->add_option("--row-height", row_height, "row height in px");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    if (const char* env = std::getenv("GCA_BACKEND")) backend = env; // env overrides flag
    const int as_json = format == "json" ? 1 : 0;
    if (format != "json" && format != "text") return fail(2, "unknown --format (text|json)");

    if (gauss_cmd->parsed()) {
        StrPtr out;
        char* raw = nullptr;
        int rc = gca_gauss(N, as_json, &raw);
        out.reset(raw);
        if (rc != GCA_OK) return fail(rc, gca_global_last_error());
        return emit(out.get(), output_path);
    }

    if (render_cmd->parsed()) {
        StrPtr out;
        char* raw = nullptr;
        int rc = gca_render(n, render_word.c_str(), render_format.c_str(), pitch, row_height, &raw);
        out.reset(raw);
        if (rc != GCA_OK) return fail(rc, gca_global_last_error());
        return emit(out.get(), output_path);
    }

    gca_ctx* raw_ctx = nullptr;
    int rc = gca_ctx_new(N, n, backend.c_str(), &raw_ctx);
    if (rc != GCA_OK) return fail(rc, gca_global_last_error());
    CtxPtr ctx(raw_ctx);

    char* raw = nullptr;
    if (verify_cmd->parsed()) {
        rc = gca_verify(ctx.get(), suite.c_str(), as_json, &raw);
        StrPtr out(raw);
        if (rc != GCA_OK && rc != GCA_CHECK_FAILED) return fail(rc, gca_ctx_last_error(ctx.get()));
        int erc = emit(out.get(), output_path);
        return erc != 0 ? erc : rc;
    }
    if (nf_cmd->parsed()) {
        rc = gca_normal_form(ctx.get(), nf_expr.c_str(), as_json, &raw);
    } else if (state_cmd->parsed()) {
        rc = gca_state(ctx.get(), word_expr.c_str(), as_json, &raw);
    } else if (vev_cmd->parsed()) {
        rc = gca_vev(ctx.get(), vev_expr.c_str(), as_json, &raw);
    } else {
        return fail(2, "no subcommand");
    }
    StrPtr out(raw);
    if (rc != GCA_OK) return fail(rc, gca_ctx_last_error(ctx.get()));
    return emit(out.get(), output_path);
}
