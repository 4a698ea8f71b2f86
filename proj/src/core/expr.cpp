#include "core/expr.hpp"

#include <cctype>

#include "core/error.hpp"

namespace gca {

std::vector<Token> tokenize(const std::string& input) {
    std::vector<Token> out;
    std::size_t i = 0;
    long bracket_depth = 0;
    std::size_t bracket_open = 0;
    auto push = [&](Token::Kind k, std::size_t at, std::string text) {
        Token t;
        t.kind = k;
        t.text = std::move(text);
        t.offset = at;
        out.push_back(std::move(t));
    };
    while (i < input.size()) {
        char c = input[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < input.size() && std::isalnum(static_cast<unsigned char>(input[i]))) ++i;
            std::string word = input.substr(start, i - start);
            static const char* names[] = {"c", "E", "b", "q", "zeta", "omega", "omegaSqrt", "sqrtN"};
            bool known = false;
            for (const char* n : names) known = known || word == n;
            if (!known) throw ParseError("unknown identifier '" + word + "'", start);
            push(Token::Kind::ident, start, word);
            continue;
        }
        bool signed_int = c == '-' && !out.empty() && out.back().kind == Token::Kind::caret &&
                          i + 1 < input.size() && std::isdigit(static_cast<unsigned char>(input[i + 1]));
        if (std::isdigit(static_cast<unsigned char>(c)) || signed_int) {
            std::size_t start = i;
            if (signed_int) ++i;
            while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
            // rational literal p/r
            if (i + 1 < input.size() && input[i] == '/' &&
                std::isdigit(static_cast<unsigned char>(input[i + 1]))) {
                ++i;
                while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
                std::string text = input.substr(start, i - start);
                Token t;
                t.kind = Token::Kind::rational;
                t.text = text;
                t.rat_value = mpq_class(text);
                t.rat_value.canonicalize();
                t.offset = start;
                out.push_back(std::move(t));
            } else {
                std::string text = input.substr(start, i - start);
                Token t;
                t.kind = Token::Kind::integer;
                t.text = text;
                t.int_value = std::stol(text);
                t.offset = start;
                out.push_back(std::move(t));
            }
            continue;
        }
        if (c == '|') {
            if (input.compare(i, 5, "|vac>") == 0) {
                push(Token::Kind::vac, i, "|vac>");
                i += 5;
                continue;
            }
            throw ParseError("unknown character '|' (expected |vac>)", i);
        }
        switch (c) {
        case '[':
            ++bracket_depth;
            bracket_open = i;
            push(Token::Kind::lbracket, i, "[");
            break;
        case ']':
            if (bracket_depth == 0) throw ParseError("unmatched ']'", i);
            --bracket_depth;
            push(Token::Kind::rbracket, i, "]");
            break;
        case '^':
            push(Token::Kind::caret, i, "^");
            break;
        case '*':
            push(Token::Kind::star, i, "*");
            break;
        case '+':
            push(Token::Kind::plus, i, "+");
            break;
        case '-':
            push(Token::Kind::minus, i, "-");
            break;
        case '\'':
            push(Token::Kind::tick, i, "'");
            break;
        case '(':
            push(Token::Kind::lparen, i, "(");
            break;
        case ')':
            push(Token::Kind::rparen, i, ")");
            break;
        default:
            throw ParseError(std::string("unknown character '") + c + "'", i);
        }
        ++i;
    }
    if (bracket_depth != 0) {
        (void)bracket_open;
        throw ParseError("unclosed bracket", input.size());
    }
    Token end;
    end.kind = Token::Kind::end;
    end.offset = input.size();
    out.push_back(end);
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

    AstPtr run() {
        AstPtr e = expr();
        expect(Token::Kind::end, "trailing input");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(Token::Kind k, const std::string& what) {
        if (!accept(k)) throw ParseError("syntax error: expected " + what, peek().offset);
    }

    static AstPtr node(ExprAst a) { return std::make_shared<const ExprAst>(std::move(a)); }

    AstPtr expr() {
        bool lead_neg = accept(Token::Kind::minus);
        AstPtr acc = term();
        if (lead_neg) {
            ExprAst neg;
            neg.kind = ExprAst::Kind::sub;
            ExprAst z;
            z.kind = ExprAst::Kind::rational;
            z.rat = 0;
            neg.children = {node(std::move(z)), acc};
            acc = node(std::move(neg));
        }
        while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
            bool plus = advance().kind == Token::Kind::plus;
            ExprAst b;
            b.kind = plus ? ExprAst::Kind::add : ExprAst::Kind::sub;
            b.children = {acc, term()};
            acc = node(std::move(b));
        }
        return acc;
    }

    AstPtr term() {
        AstPtr acc = factor();
        while (accept(Token::Kind::star)) {
            ExprAst b;
            b.kind = ExprAst::Kind::mul;
            b.children = {acc, factor()};
            acc = node(std::move(b));
        }
        return acc;
    }

    AstPtr factor() {
        AstPtr a = atom();
        while (true) {
            if (peek().kind == Token::Kind::caret) {
                advance();
                if (peek().kind != Token::Kind::integer)
                    throw ParseError("syntax error: expected integer exponent", peek().offset);
                ExprAst p;
                p.kind = ExprAst::Kind::power;
                p.exponent = advance().int_value;
                p.children = {a};
                a = node(std::move(p));
            } else if (peek().kind == Token::Kind::tick) {
                advance();
                ExprAst adj;
                adj.kind = ExprAst::Kind::adjoint;
                adj.children = {a};
                a = node(std::move(adj));
            } else if (peek().kind == Token::Kind::vac) {
                advance();
                ExprAst v;
                v.kind = ExprAst::Kind::vac;
                v.children = {a};
                a = node(std::move(v));
            } else {
                break;
            }
        }
        return a;
    }

    long bracket_int() {
        if (peek().kind != Token::Kind::integer)
            throw ParseError("syntax error: expected index", peek().offset);
        long v = advance().int_value;
        if (v < 1) throw ParseError("indices must be positive", toks_[pos_ - 1].offset);
        return v;
    }

    AstPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
        case Token::Kind::integer: {
            advance();
            ExprAst a;
            a.kind = ExprAst::Kind::rational;
            a.rat = t.int_value;
            return node(std::move(a));
        }
        case Token::Kind::rational: {
            advance();
            ExprAst a;
            a.kind = ExprAst::Kind::rational;
            a.rat = t.rat_value;
            return node(std::move(a));
        }
        case Token::Kind::lparen: {
            advance();
            AstPtr e = expr();
            expect(Token::Kind::rparen, "')'");
            return e;
        }
        case Token::Kind::ident: {
            advance();
            if (t.text == "c" || t.text == "E" || t.text == "b") {
                expect(Token::Kind::lbracket, "'['");
                ExprAst a;
                a.index = bracket_int();
                if (t.text == "b") {
                    a.kind = ExprAst::Kind::braid;
                    a.index2 = bracket_int();
                } else {
                    a.kind = t.text == "c" ? ExprAst::Kind::generator : ExprAst::Kind::projector;
                }
                expect(Token::Kind::rbracket, "']'");
                return node(std::move(a));
            }
            ExprAst a;
            a.kind = ExprAst::Kind::symbol;
            a.symbol = t.text;
            return node(std::move(a));
        }
        default:
            throw ParseError("syntax error: unexpected token '" + t.text + "'", t.offset);
        }
    }

    const std::vector<Token>& toks_;
    std::size_t pos_ = 0;
};

} // namespace

AstPtr parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

AstPtr parse_expression(const std::string& input) { return parse(tokenize(input)); }

namespace {

bool needs_parens_in_product(const AstPtr& a) {
    return a->kind == ExprAst::Kind::add || a->kind == ExprAst::Kind::sub;
}

bool is_postfix_safe(const AstPtr& a) {
    switch (a->kind) {
    case ExprAst::Kind::rational:
        return a->rat >= 0 && a->rat.get_den() == 1;
    case ExprAst::Kind::symbol:
    case ExprAst::Kind::generator:
    case ExprAst::Kind::projector:
    case ExprAst::Kind::braid:
        return true;
    default:
        return false;
    }
}

} // namespace

std::string print_ast(const AstPtr& ast) {
    switch (ast->kind) {
    case ExprAst::Kind::rational: {
        mpq_class r = ast->rat;
        if (r < 0) return "(0-" + mpq_class(-r).get_str() + ")";
        return r.get_str();
    }
    case ExprAst::Kind::symbol:
        return ast->symbol;
    case ExprAst::Kind::generator:
        return "c[" + std::to_string(ast->index) + "]";
    case ExprAst::Kind::projector:
        return "E[" + std::to_string(ast->index) + "]";
    case ExprAst::Kind::braid:
        return "b[" + std::to_string(ast->index) + "," + std::to_string(ast->index2) + "]";
    case ExprAst::Kind::power: {
        std::string inner = print_ast(ast->children[0]);
        if (!is_postfix_safe(ast->children[0])) inner = "(" + inner + ")";
        return inner + "^" + std::to_string(ast->exponent);
    }
    case ExprAst::Kind::adjoint: {
        std::string inner = print_ast(ast->children[0]);
        if (!is_postfix_safe(ast->children[0])) inner = "(" + inner + ")";
        return inner + "'";
    }
    case ExprAst::Kind::mul: {
        std::string l = print_ast(ast->children[0]);
        std::string r = print_ast(ast->children[1]);
        if (needs_parens_in_product(ast->children[0])) l = "(" + l + ")";
        if (needs_parens_in_product(ast->children[1]) ||
            ast->children[1]->kind == ExprAst::Kind::mul)
            r = "(" + r + ")";
        return l + "*" + r;
    }
    case ExprAst::Kind::add:
    case ExprAst::Kind::sub: {
        std::string l = print_ast(ast->children[0]);
        std::string r = print_ast(ast->children[1]);
        if (ast->children[1]->kind == ExprAst::Kind::add ||
            ast->children[1]->kind == ExprAst::Kind::sub)
            r = "(" + r + ")";
        return l + (ast->kind == ExprAst::Kind::add ? "+" : "-") + r;
    }
    case ExprAst::Kind::vac: {
        std::string inner = print_ast(ast->children[0]);
        return "(" + inner + ")|vac>";
    }
    }
    throw InternalError("unhandled AST node in printer");
}

bool ast_equal(const AstPtr& a, const AstPtr& b) {
    if (a->kind != b->kind) return false;
    if (a->rat != b->rat || a->symbol != b->symbol || a->index != b->index ||
        a->index2 != b->index2 || a->exponent != b->exponent)
        return false;
    if (a->children.size() != b->children.size()) return false;
    for (std::size_t i = 0; i < a->children.size(); ++i)
        if (!ast_equal(a->children[i], b->children[i])) return false;
    return true;
}

namespace {

struct Evaluator {
    const ScalarContext& ctx;
    long n;

    Value run(const AstPtr& ast) {
        switch (ast->kind) {
        case ExprAst::Kind::rational:
            return Cyclo::rational(ctx.M(), ast->rat);
        case ExprAst::Kind::symbol: {
            if (ast->symbol == "q") return ctx.q();
            if (ast->symbol == "zeta") return ctx.zeta();
            if (ast->symbol == "omega") return ctx.omega();
            if (ast->symbol == "omegaSqrt") return ctx.omega_sqrt();
            if (ast->symbol == "sqrtN") return ctx.sqrt_n();
            throw UsageError("unknown symbol " + ast->symbol);
        }
        case ExprAst::Kind::generator:
            return Element::generator_power(ctx.N(), n, ast->index, 1);
        case ExprAst::Kind::projector: {
            if (ast->index < 1 || ast->index > n)
                throw UsageError("projector index E[" + std::to_string(ast->index) +
                                 "] out of range 1.." + std::to_string(n));
            StateOpAtom atom;
            atom.kind = StateOpAtom::Kind::projector;
            atom.index = ast->index;
            return StateOp{atom};
        }
        case ExprAst::Kind::braid:
            return braid_element(ctx, n, static_cast<int>(ast->index),
                                 static_cast<int>(ast->index2));
        case ExprAst::Kind::power:
            return power(ast->children[0], ast->exponent);
        case ExprAst::Kind::adjoint:
            return adjoint(run(ast->children[0]));
        case ExprAst::Kind::mul:
            return mul(run(ast->children[0]), run(ast->children[1]));
        case ExprAst::Kind::add:
            return add(run(ast->children[0]), run(ast->children[1]), false);
        case ExprAst::Kind::sub:
            return add(run(ast->children[0]), run(ast->children[1]), true);
        case ExprAst::Kind::vac:
            return vac(run(ast->children[0]));
        }
        throw InternalError("unhandled AST node in evaluator");
    }

    Value power(const AstPtr& base, long e) {
        // generator powers accept any integer exponent (normalized mod N)
        if (base->kind == ExprAst::Kind::generator)
            return Element::generator_power(ctx.N(), n, base->index, e);
        Value v = run(base);
        if (auto* c = std::get_if<Cyclo>(&v)) return c->pow(e);
        if (auto* x = std::get_if<Element>(&v)) {
            if (e < 0)
                throw UsageError("negative powers of algebra elements are not supported; "
                                 "use the adjoint orientation instead");
            Element acc = Element::identity(ctx.N(), n);
            for (long i = 0; i < e; ++i) acc = acc * (*x);
            return acc;
        }
        if (auto* op = std::get_if<StateOp>(&v)) {
            if (e < 0) throw UsageError("negative powers of projector pipelines are not supported");
            StateOp acc;
            for (long i = 0; i < e; ++i) acc.insert(acc.end(), op->begin(), op->end());
            return acc;
        }
        throw UsageError("cannot exponentiate a state");
    }

    Value adjoint(Value v) {
        if (auto* c = std::get_if<Cyclo>(&v)) return c->conj();
        if (auto* x = std::get_if<Element>(&v)) return x->adjoint();
        if (auto* op = std::get_if<StateOp>(&v)) return state_op_adjoint(*op);
        throw UsageError("adjoint of a ket is not representable here");
    }

    static StateOp as_op(const Element& x) {
        StateOpAtom atom;
        atom.kind = StateOpAtom::Kind::element;
        atom.elem = x;
        return {atom};
    }

    Value mul(Value l, Value r) {
        if (auto* sr = std::get_if<State>(&r)) {
            if (auto* c = std::get_if<Cyclo>(&l)) return sr->scaled(*c);
            if (auto* x = std::get_if<Element>(&l)) return apply_element(ctx, *x, *sr);
            if (auto* op = std::get_if<StateOp>(&l)) return apply_state_op(ctx, *op, *sr);
            throw UsageError("cannot multiply two states");
        }
        if (std::holds_alternative<State>(l))
            throw UsageError("states may only be scaled or appear rightmost in a product");
        if (auto* cl = std::get_if<Cyclo>(&l)) {
            if (auto* cr = std::get_if<Cyclo>(&r)) return (*cl) * (*cr);
            if (auto* xr = std::get_if<Element>(&r)) return xr->scaled(*cl);
            StateOp out = as_op(Element::identity(ctx.N(), n).scaled(*cl));
            const auto& opr = std::get<StateOp>(r);
            out.insert(out.end(), opr.begin(), opr.end());
            return out;
        }
        if (auto* xl = std::get_if<Element>(&l)) {
            if (auto* cr = std::get_if<Cyclo>(&r)) return xl->scaled(*cr);
            if (auto* xr = std::get_if<Element>(&r)) return (*xl) * (*xr);
            StateOp out = as_op(*xl);
            const auto& opr = std::get<StateOp>(r);
            out.insert(out.end(), opr.begin(), opr.end());
            return out;
        }
        StateOp out = std::get<StateOp>(l);
        if (auto* cr = std::get_if<Cyclo>(&r)) {
            StateOp tail = as_op(Element::identity(ctx.N(), n).scaled(*cr));
            out.insert(out.end(), tail.begin(), tail.end());
            return out;
        }
        if (auto* xr = std::get_if<Element>(&r)) {
            StateOp tail = as_op(*xr);
            out.insert(out.end(), tail.begin(), tail.end());
            return out;
        }
        const auto& opr = std::get<StateOp>(r);
        out.insert(out.end(), opr.begin(), opr.end());
        return out;
    }

    Value add(Value l, Value r, bool negate) {
        if (auto* sl = std::get_if<State>(&l)) {
            auto* sr = std::get_if<State>(&r);
            if (!sr) throw UsageError("cannot add a state to a non-state");
            return negate ? (*sl) - (*sr) : (*sl) + (*sr);
        }
        if (std::holds_alternative<StateOp>(l) || std::holds_alternative<StateOp>(r))
            throw UsageError("projector pipelines cannot be added; apply them to |vac> first");
        auto promote = [&](Value& v) -> Element {
            if (auto* c = std::get_if<Cyclo>(&v)) return Element::identity(ctx.N(), n).scaled(*c);
            return std::get<Element>(v);
        };
        if (std::holds_alternative<Cyclo>(l) && std::holds_alternative<Cyclo>(r)) {
            const Cyclo& a = std::get<Cyclo>(l);
            const Cyclo& b = std::get<Cyclo>(r);
            return negate ? a - b : a + b;
        }
        if (std::holds_alternative<State>(r)) throw UsageError("cannot add a state to a non-state");
        Element a = promote(l), b = promote(r);
        return negate ? a - b : a + b;
    }

    Value vac(Value v) {
        State g = ground(ctx, n);
        if (auto* c = std::get_if<Cyclo>(&v)) return g.scaled(*c);
        if (auto* x = std::get_if<Element>(&v)) return apply_element(ctx, *x, g);
        if (auto* op = std::get_if<StateOp>(&v)) return apply_state_op(ctx, *op, g);
        throw UsageError("|vac> applied to something that is already a state");
    }
};

} // namespace

Value eval(const AstPtr& ast, const ScalarContext& ctx, long n) {
    if (n < 1) throw UsageError("algebra size n must be at least 1");
    Evaluator ev{ctx, n};
    return ev.run(ast);
}

Element eval_element(const AstPtr& ast, const ScalarContext& ctx, long n) {
    Value v = eval(ast, ctx, n);
    if (auto* c = std::get_if<Cyclo>(&v)) return Element::identity(ctx.N(), n).scaled(*c);
    if (auto* x = std::get_if<Element>(&v)) return *x;
    if (std::holds_alternative<StateOp>(v))
        throw UsageError("projectors act on states, not on algebra elements; apply to |vac>");
    throw UsageError("expected an algebra expression, got a state");
}

State eval_state(const AstPtr& ast, const ScalarContext& ctx, long n) {
    Value v = eval(ast, ctx, n);
    if (auto* s = std::get_if<State>(&v)) return *s;
    Evaluator ev{ctx, n};
    return std::get<State>(ev.vac(std::move(v)));
}

} // namespace gca
