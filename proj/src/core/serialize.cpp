#include "core/serialize.hpp"

#include "core/error.hpp"

namespace gca {

using nlohmann::json;

namespace {

long to_long_checked(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p())
        throw InternalError(std::string("serialization overflow: ") + what +
                            " does not fit a 64-bit integer");
    return z.get_si();
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw UsageError("schema violation: " + msg);
}

} // namespace

json cyclo_to_json(const Cyclo& c) {
    json coeffs = json::array();
    for (const auto& [k, v] : c.coeffs())
        coeffs.push_back({k, to_long_checked(v.get_num(), "numerator"),
                          to_long_checked(v.get_den(), "denominator")});
    return json{{"M", c.modulus()}, {"coeffs", coeffs}};
}

json element_to_json(const Element& x) {
    json terms = json::array();
    for (const auto& [m, c] : x.terms()) {
        json exps = json::array();
        for (auto v : m) exps.push_back(v);
        terms.push_back({{"exps", exps}, {"scalar", cyclo_to_json(c)}});
    }
    return json{{"N", x.N()}, {"n", x.n()}, {"terms", terms}};
}

json state_to_json(const State& s) {
    json terms = json::array();
    for (const auto& [a, c] : s.coeffs()) {
        json av = json::array();
        for (auto v : a) av.push_back(v);
        terms.push_back({{"a", av}, {"scalar", cyclo_to_json(c)}});
    }
    return json{{"N", s.N()}, {"n", s.n()}, {"terms", terms}};
}

json value_to_json(const Value& v) {
    if (const auto* c = std::get_if<Cyclo>(&v)) return cyclo_to_json(*c);
    if (const auto* x = std::get_if<Element>(&v)) return element_to_json(*x);
    if (const auto* s = std::get_if<State>(&v)) return state_to_json(*s);
    throw UsageError("projector pipelines have no serialized form; apply to |vac> first");
}

Cyclo cyclo_from_json(const json& j) {
    require(j.is_object() && j.contains("M") && j.contains("coeffs"), "Cyclo needs M and coeffs");
    require(j["M"].is_number_integer() && j["M"].get<long>() >= 1, "M must be a positive integer");
    const long M = j["M"].get<long>();
    Cyclo out = Cyclo::zero(M);
    require(j["coeffs"].is_array(), "coeffs must be an array");
    long prev = -1;
    for (const auto& e : j["coeffs"]) {
        require(e.is_array() && e.size() == 3, "coeff entries are [index, num, den]");
        long k = e[0].get<long>(), num = e[1].get<long>(), den = e[2].get<long>();
        require(k >= 0 && k < M, "coefficient index out of range");
        require(k > prev, "coefficient indices must be strictly ascending");
        require(den != 0, "zero denominator");
        prev = k;
        mpq_class v(num, den);
        v.canonicalize();
        if (v != 0) out += Cyclo::root(M, k, v);
    }
    return out;
}

Element element_from_json(const json& j) {
    require(j.is_object() && j.contains("N") && j.contains("n") && j.contains("terms"),
            "Element needs N, n and terms");
    const long N = j["N"].get<long>(), n = j["n"].get<long>();
    require(N >= 2 && n >= 1, "Element needs N >= 2 and n >= 1");
    Element out = Element::zero(N, n);
    for (const auto& t : j["terms"]) {
        require(t.is_object() && t.contains("exps") && t.contains("scalar"),
                "terms need exps and scalar");
        require(t["exps"].is_array() && t["exps"].size() == static_cast<std::size_t>(2 * n),
                "exps must have length 2n");
        Monomial m;
        for (const auto& e : t["exps"]) {
            long v = e.get<long>();
            require(v >= 0 && v < N, "exponent out of range");
            m.push_back(static_cast<std::uint16_t>(v));
        }
        Cyclo c = cyclo_from_json(t["scalar"]);
        require(c.modulus() == 16 * N * N, "scalar modulus mismatch (expected 16*N^2)");
        out = out + Element::monomial(N, n, m, c);
    }
    return out;
}

State state_from_json(const json& j) {
    require(j.is_object() && j.contains("N") && j.contains("n") && j.contains("terms"),
            "State needs N, n and terms");
    const long N = j["N"].get<long>(), n = j["n"].get<long>();
    require(N >= 2 && n >= 1, "State needs N >= 2 and n >= 1");
    State out = State::zero(N, n);
    for (const auto& t : j["terms"]) {
        require(t.is_object() && t.contains("a") && t.contains("scalar"),
                "terms need a and scalar");
        require(t["a"].is_array() && t["a"].size() == static_cast<std::size_t>(n),
                "a must have length n");
        std::vector<std::uint16_t> a;
        for (const auto& e : t["a"]) {
            long v = e.get<long>();
            require(v >= 0 && v < N, "charge entry out of range");
            a.push_back(static_cast<std::uint16_t>(v));
        }
        Cyclo c = cyclo_from_json(t["scalar"]);
        require(c.modulus() == 16 * N * N, "scalar modulus mismatch (expected 16*N^2)");
        out = out + State::basis_ket(N, n, a, c);
    }
    return out;
}

Value value_from_json(const json& j) {
    require(j.is_object(), "value must be a JSON object");
    if (j.contains("coeffs")) return cyclo_from_json(j);
    if (j.contains("terms")) {
        require(j["terms"].is_array(), "terms must be an array");
        for (const auto& t : j["terms"])
            if (t.contains("a")) return state_from_json(j);
        if (!j["terms"].empty()) return element_from_json(j);
        // empty terms: disambiguate as element
        return element_from_json(j);
    }
    throw UsageError("schema violation: unrecognized value payload");
}

std::string serialize(const Value& v) { return value_to_json(v).dump(); }

Value deserialize(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw UsageError("malformed JSON");
    return value_from_json(j);
}

namespace {

std::string rational_str(const mpq_class& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

// Renders w * zeta_M^k over the named constants when possible.
std::string print_single_term(const ScalarContext& ctx, long k, const mpq_class& w) {
    const long M = ctx.M();
    const long N = ctx.N();
    std::string head;
    mpq_class aw = w < 0 ? mpq_class(-w) : w;
    std::string sign = w < 0 ? "-" : "";
    // search w * omegaSqrt^cw * zeta^b * q^a
    long omega_sqrt_index = -1;
    if (ctx.root_identified() && ctx.omega_sqrt().coeffs().size() == 1)
        omega_sqrt_index = ctx.omega_sqrt().coeffs().begin()->first;
    const long zeta_index = 8 * N * (N + 1) % M;
    for (long cw = 0; cw <= (omega_sqrt_index >= 0 ? 1 : 0); ++cw) {
        for (long b = 0; b < 2 * N; ++b) {
            for (long a = 0; a < N; ++a) {
                long idx = (cw * (omega_sqrt_index >= 0 ? omega_sqrt_index : 0) + b * zeta_index +
                            a * (M / N)) %
                           M;
                if (idx != k) continue;
                std::vector<std::string> parts;
                if (cw == 1) parts.push_back("omegaSqrt");
                if (b == 1)
                    parts.push_back("zeta");
                else if (b > 1)
                    parts.push_back("zeta^" + std::to_string(b));
                if (a == 1)
                    parts.push_back("q");
                else if (a > 1)
                    parts.push_back("q^" + std::to_string(a));
                std::string body;
                for (const auto& p : parts) body += (body.empty() ? "" : "*") + p;
                if (body.empty()) return sign + rational_str(aw);
                if (aw == 1) return sign + body;
                return sign + rational_str(aw) + "*" + body;
            }
        }
    }
    return sign + rational_str(aw) + "*zeta_M^" + std::to_string(k);
}

} // namespace

std::string print_scalar(const ScalarContext& ctx, const Cyclo& c) {
    mpq_class r;
    if (c.is_rational_representative(r)) return rational_str(r);
    Cyclo v = c;
    if (v.coeffs().size() > 1) v = v.reduced();
    if (v.is_rational_representative(r)) return rational_str(r);
    if (v.coeffs().size() == 1) {
        const auto& [k, w] = *v.coeffs().begin();
        return print_single_term(ctx, k, w);
    }
    // try a single term over sqrt(N)
    Cyclo scaled = (v * ctx.sqrt_n()).reduced();
    if (scaled.is_rational_representative(r))
        return rational_str(r) + "*sqrtN^-1";
    if (scaled.coeffs().size() == 1) {
        const auto& [k, w] = *scaled.coeffs().begin();
        return print_single_term(ctx, k, w) + "*sqrtN^-1";
    }
    std::string out;
    for (const auto& [k, w] : v.coeffs()) {
        std::string term = print_single_term(ctx, k, w);
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

std::string print_element(const ScalarContext& ctx, const Element& x) {
    if (x.terms().empty()) return "0";
    std::string out;
    for (const auto& [m, c] : x.terms()) {
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "c[" + std::to_string(i + 1) + "]";
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        std::string coeff = print_scalar(ctx, c);
        bool coeff_is_sum = coeff.find(" + ") != std::string::npos ||
                            coeff.find(" - ") != std::string::npos;
        std::string term;
        if (mono.empty())
            term = coeff_is_sum ? "(" + coeff + ")" : coeff;
        else if (coeff == "1")
            term = mono;
        else if (coeff_is_sum)
            term = "(" + coeff + ")*" + mono;
        else
            term = coeff + "*" + mono;
        out += (out.empty() ? "" : " + ") + term;
    }
    return out;
}

std::string print_state(const ScalarContext& ctx, const State& s) {
    if (s.coeffs().empty()) return "0";
    std::string out;
    for (const auto& [a, c] : s.coeffs()) {
        std::string ket = "|";
        for (std::size_t i = 0; i < a.size(); ++i)
            ket += (i ? "," : "") + std::to_string(a[i]);
        ket += ">";
        std::string coeff = print_scalar(ctx, c);
        bool coeff_is_sum = coeff.find(" + ") != std::string::npos ||
                            coeff.find(" - ") != std::string::npos;
        if (coeff_is_sum) coeff = "(" + coeff + ")";
        out += (out.empty() ? "" : " + ") + (coeff == "1" ? ket : coeff + "*" + ket);
    }
    return out;
}

std::string print_value(const ScalarContext& ctx, const Value& v) {
    if (const auto* c = std::get_if<Cyclo>(&v)) return print_scalar(ctx, *c);
    if (const auto* x = std::get_if<Element>(&v)) return print_element(ctx, *x);
    if (const auto* s = std::get_if<State>(&v)) return print_state(ctx, *s);
    throw UsageError("projector pipelines have no printed form; apply to |vac> first");
}

} // namespace gca
