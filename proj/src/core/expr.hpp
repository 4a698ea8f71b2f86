#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "core/state.hpp"

namespace gca {

struct Token {
    enum class Kind {
        ident,    // c, E, b, q, zeta, omega, omegaSqrt, sqrtN
        integer,  // possibly signed when following '^'
        rational, // p/r
        lbracket,
        rbracket,
        caret,
        star,
        plus,
        minus,
        tick, // adjoint postfix '
        lparen,
        rparen,
        vac, // |vac>
        end
    };
    Kind kind;
    std::string text;
    long int_value = 0;
    mpq_class rat_value;
    std::size_t offset = 0;
};

// Commas separate bracket indices and are consumed like whitespace; they are
// not tokens.  Throws ParseError with the offending offset.
std::vector<Token> tokenize(const std::string& input);

struct ExprAst;
using AstPtr = std::shared_ptr<const ExprAst>;

struct ExprAst {
    enum class Kind {
        rational,  // scalar literal
        symbol,    // q | zeta | omega | omegaSqrt | sqrtN
        generator, // c[i]
        projector, // E[k]
        braid,     // b[k,l]
        power,     // child ^ int
        adjoint,   // child '
        mul,       // binary, left-associated
        add,
        sub,
        vac // child applied to the ground state
    };
    Kind kind;
    mpq_class rat;
    std::string symbol;
    long index = 0;
    long index2 = 0;
    long exponent = 0;
    std::vector<AstPtr> children;
};

AstPtr parse(const std::vector<Token>& tokens);
AstPtr parse_expression(const std::string& input);

// Canonical printer; parse(print(ast)) reproduces the tree.
std::string print_ast(const AstPtr& ast);
bool ast_equal(const AstPtr& a, const AstPtr& b);

// Evaluation result: scalar, normal-form element, unapplied state-operator
// pipeline (contains projectors), or a state.
using Value = std::variant<Cyclo, Element, StateOp, State>;

// Exact-by-default evaluation against a scalar context and algebra size n.
// A pipeline that never reaches |vac> is a context-misuse error.
Value eval(const AstPtr& ast, const ScalarContext& ctx, long n);

// Convenience: evaluation that must produce an algebra element (scalars are
// promoted to multiples of the identity).
Element eval_element(const AstPtr& ast, const ScalarContext& ctx, long n);
// Evaluation that must produce a state; elements/pipelines/scalars are
// applied to the ground state.
State eval_state(const AstPtr& ast, const ScalarContext& ctx, long n);

} // namespace gca
