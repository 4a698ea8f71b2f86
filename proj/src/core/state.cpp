#include "core/state.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace gca {

namespace {
long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}
} // namespace

State State::zero(long N, long n) {
    if (N < 2 || n < 1) throw UsageError("state sizes require N >= 2 and n >= 1");
    State s;
    s.N_ = N;
    s.n_ = n;
    return s;
}

State State::basis_ket(long N, long n, const std::vector<std::uint16_t>& a, const Cyclo& coeff) {
    State s = zero(N, n);
    if (a.size() != static_cast<std::size_t>(n)) throw UsageError("charge vector length mismatch");
    for (auto v : a)
        if (v >= N) throw UsageError("charge entry out of range");
    if (!coeff.trivially_zero()) s.coeffs_[a] = coeff;
    return s;
}

void State::add_term(const std::vector<std::uint16_t>& a, const Cyclo& c) {
    auto it = coeffs_.find(a);
    if (it == coeffs_.end()) {
        if (!c.trivially_zero()) coeffs_.emplace(a, c);
    } else {
        it->second += c;
        if (it->second.trivially_zero()) coeffs_.erase(it);
    }
}

static void check_sizes(const State& a, const State& b) {
    if (a.N() != b.N() || a.n() != b.n()) throw UsageError("state size mismatch");
}

State State::operator+(const State& rhs) const {
    check_sizes(*this, rhs);
    State out = *this;
    for (const auto& [a, c] : rhs.coeffs_) out.add_term(a, c);
    return out;
}

State State::operator-(const State& rhs) const {
    check_sizes(*this, rhs);
    State out = *this;
    for (const auto& [a, c] : rhs.coeffs_) out.add_term(a, -c);
    return out;
}

State State::scaled(const Cyclo& alpha) const {
    State out = zero(N_, n_);
    for (const auto& [a, c] : coeffs_) {
        Cyclo v = c * alpha;
        if (!v.trivially_zero()) out.coeffs_.emplace(a, std::move(v));
    }
    return out;
}

bool State::eq(const ScalarContext& ctx, const State& rhs) const {
    check_sizes(*this, rhs);
    auto ia = coeffs_.begin(), ib = rhs.coeffs_.begin();
    while (ia != coeffs_.end() || ib != rhs.coeffs_.end()) {
        if (ib == rhs.coeffs_.end() || (ia != coeffs_.end() && ia->first < ib->first)) {
            if (!ctx.is_zero(ia->second)) return false;
            ++ia;
        } else if (ia == coeffs_.end() || ib->first < ia->first) {
            if (!ctx.is_zero(ib->second)) return false;
            ++ib;
        } else {
            if (!ctx.eq(ia->second, ib->second)) return false;
            ++ia;
            ++ib;
        }
    }
    return true;
}

State ground(const ScalarContext& ctx, long n) {
    return State::basis_ket(ctx.N(), n, std::vector<std::uint16_t>(n, 0),
                            Cyclo::one(16 * ctx.N() * ctx.N()));
}

State apply_generator(const ScalarContext& ctx, long j, const State& s) {
    if (j < 1 || j > 2 * s.n())
        throw UsageError("generator index " + std::to_string(j) + " out of range 1.." +
                         std::to_string(2 * s.n()));
    const long N = s.N();
    const long k = (j + 1) / 2; // acting qudit, 1-based
    const bool odd = (j % 2 == 1);
    State out = State::zero(N, s.n());
    for (const auto& [a, c] : s.coeffs()) {
        long prefix = 0;
        for (long i = 0; i < k - 1; ++i) prefix += a[i];
        long qexp = odd ? static_cast<long>(a[k - 1]) - prefix : -prefix;
        Cyclo phase = ctx.q_power(qexp);
        if (odd) phase = phase * ctx.zeta();
        std::vector<std::uint16_t> b = a;
        b[k - 1] = static_cast<std::uint16_t>((b[k - 1] + 1) % N);
        out.add_term(b, c * phase);
    }
    return out;
}

State apply_projector(long k, const State& s) {
    if (k < 1 || k > s.n())
        throw UsageError("projector index " + std::to_string(k) + " out of range 1.." +
                         std::to_string(s.n()));
    State out = State::zero(s.N(), s.n());
    for (const auto& [a, c] : s.coeffs())
        if (a[k - 1] == 0) out.coeffs_[a] = c;
    return out;
}

State apply_element(const ScalarContext& ctx, const Element& x, const State& s) {
    if (x.N() != s.N() || x.n() != s.n()) throw UsageError("element/state size mismatch");
    State out = State::zero(s.N(), s.n());
    for (const auto& [m, c] : x.terms()) {
        State acc = s;
        for (long idx = 2 * s.n(); idx >= 1; --idx)
            for (long rep = 0; rep < m[idx - 1]; ++rep) acc = apply_generator(ctx, idx, acc);
        out = out + acc.scaled(c);
    }
    return out;
}

State apply_word(const ScalarContext& ctx, const BraidWord& w, const State& s) {
    State acc = s;
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
        acc = apply_element(ctx, braid_element(ctx, s.n(), it->first, it->second), acc);
    return acc;
}

Cyclo inner(const State& s1, const State& s2) {
    check_sizes(s1, s2);
    Cyclo out = Cyclo::zero(s1.M());
    for (const auto& [a, c] : s1.coeffs()) {
        auto it = s2.coeffs().find(a);
        if (it != s2.coeffs().end()) out += c.conj() * it->second;
    }
    return out;
}

Cyclo vev(const ScalarContext& ctx, const Element& x, long n) {
    return inner(ground(ctx, n), apply_element(ctx, x, ground(ctx, n)));
}

StateOp state_op_adjoint(const StateOp& op) {
    StateOp out;
    for (auto it = op.rbegin(); it != op.rend(); ++it) {
        StateOpAtom atom = *it;
        switch (atom.kind) {
        case StateOpAtom::Kind::generator_power:
            atom.exp = -atom.exp;
            break;
        case StateOpAtom::Kind::projector:
            break; // self-adjoint
        case StateOpAtom::Kind::element:
            atom.elem = atom.elem.adjoint();
            break;
        case StateOpAtom::Kind::word:
            atom.word = word_adjoint(atom.word);
            break;
        }
        out.push_back(std::move(atom));
    }
    return out;
}

State apply_state_op(const ScalarContext& ctx, const StateOp& op, const State& s) {
    State acc = s;
    for (auto it = op.rbegin(); it != op.rend(); ++it) {
        switch (it->kind) {
        case StateOpAtom::Kind::generator_power: {
            long e = mod_pos(it->exp, ctx.N());
            for (long rep = 0; rep < e; ++rep) acc = apply_generator(ctx, it->index, acc);
            break;
        }
        case StateOpAtom::Kind::projector:
            acc = apply_projector(it->index, acc);
            break;
        case StateOpAtom::Kind::element:
            acc = apply_element(ctx, it->elem, acc);
            break;
        case StateOpAtom::Kind::word:
            acc = apply_word(ctx, it->word, acc);
            break;
        }
    }
    return acc;
}

bool check_twist(const ScalarContext& ctx, long n, long k) {
    if (k < 1 || k > n) throw UsageError("twist move requires 1 <= k <= n");
    const long N = ctx.N();
    Element braid = braid_element(ctx, n, 2 * k - 1, 2 * k);
    Element braid_adj = braid_element(ctx, n, 2 * k, 2 * k - 1);
    std::vector<std::uint16_t> a(n, 0);
    // operator identity checked on all N^n basis kets
    while (true) {
        State ket = State::basis_ket(N, n, a, Cyclo::one(16 * N * N));
        State projected = apply_projector(k, ket);
        if (!apply_element(ctx, braid, projected).eq(ctx, projected.scaled(ctx.omega_sqrt_inv())))
            return false;
        if (!apply_element(ctx, braid_adj, projected).eq(ctx, projected.scaled(ctx.omega_sqrt())))
            return false;
        long pos = n - 1;
        while (pos >= 0 && a[pos] == N - 1) a[pos--] = 0;
        if (pos < 0) break;
        ++a[pos];
    }
    return true;
}

bool check_slide(const ScalarContext& ctx, long n, long k, long l) {
    if (!(1 <= k && k < l && l <= n)) throw UsageError("slide move requires 1 <= k < l <= n");
    BraidWord w{{{static_cast<int>(2 * k), static_cast<int>(2 * l - 1)},
                 {static_cast<int>(2 * l - 1), static_cast<int>(2 * l)},
                 {static_cast<int>(2 * k - 1), static_cast<int>(2 * k)},
                 {static_cast<int>(2 * k), static_cast<int>(2 * l - 1)}}};
    State g = ground(ctx, n);
    if (!apply_word(ctx, w, g).eq(ctx, g)) return false;
    if (k == 1 && l == 2) {
        // corollary: b12 b23 |ground> = b43 b32 |ground>
        State lhs = apply_word(ctx, BraidWord{{{1, 2}, {2, 3}}}, g);
        State rhs = apply_word(ctx, BraidWord{{{4, 3}, {3, 2}}}, g);
        if (!lhs.eq(ctx, rhs)) return false;
    }
    return true;
}

bool check_slip(const ScalarContext& ctx, long n, long k, long l) {
    if (!(1 <= k && k < l && l <= n)) throw UsageError("slip move requires 1 <= k < l <= n");
    BraidWord w{{{static_cast<int>(2 * k), static_cast<int>(2 * l - 1)},
                 {static_cast<int>(2 * l - 1), static_cast<int>(2 * l)},
                 {static_cast<int>(2 * k), static_cast<int>(2 * k - 1)},
                 {static_cast<int>(2 * l - 1), static_cast<int>(2 * k)}}};
    State g = ground(ctx, n);
    if (!apply_word(ctx, w, g).eq(ctx, g)) return false;
    if (k == 1 && l == 2) {
        // corollary: b21 b32 |ground> = b43 b32 |ground>
        State lhs = apply_word(ctx, BraidWord{{{2, 1}, {3, 2}}}, g);
        State rhs = apply_word(ctx, BraidWord{{{4, 3}, {3, 2}}}, g);
        if (!lhs.eq(ctx, rhs)) return false;
    }
    return true;
}

ChainReport check_chain_identities(const ScalarContext& ctx, long n) {
    if (n < 2) throw UsageError("chain identities require n >= 2");
    ChainReport rep;
    State g = ground(ctx, n);
    rep.two_braid = apply_word(ctx, BraidWord{{{3, 4}, {2, 3}}}, g)
                        .eq(ctx, apply_word(ctx, BraidWord{{{4, 3}, {3, 2}}}, g));
    if (n >= 3) {
        State lhs = apply_word(ctx, BraidWord{{{5, 6}, {4, 5}, {3, 4}, {2, 3}}}, g);
        State rhs = apply_word(ctx, BraidWord{{{6, 5}, {5, 4}, {4, 3}, {3, 2}}}, g);
        rep.four_braid = lhs.eq(ctx, rhs);
    }
    return rep;
}

State closed_form_chain(const ScalarContext& ctx, long n, long k) {
    if (k < 1 || k > n) throw UsageError("closed-form chain requires 1 <= k <= n");
    const long N = ctx.N();
    State out = State::zero(N, n);
    Cyclo norm = ctx.inv_sqrt_n().pow(k - 1);
    std::vector<std::uint16_t> a(k, 0);
    while (true) {
        long total = 0, squares = 0;
        for (auto v : a) {
            total += v;
            squares += static_cast<long>(v) * v;
        }
        if (total % N == 0) {
            std::vector<std::uint16_t> full(n, 0);
            std::copy(a.begin(), a.end(), full.begin());
            out = out + State::basis_ket(N, n, full, norm * ctx.zeta_power(squares));
        }
        long pos = k - 1;
        while (pos >= 0 && a[pos] == N - 1) a[pos--] = 0;
        if (pos < 0) break;
        ++a[pos];
    }
    return out;
}

bool check_closed_form_chain(const ScalarContext& ctx, long n, long k) {
    BraidWord chain;
    for (long j = 2 * k - 1; j >= 2; --j)
        chain.factors.emplace_back(static_cast<int>(j), static_cast<int>(j + 1));
    return apply_word(ctx, chain, ground(ctx, n)).eq(ctx, closed_form_chain(ctx, n, k));
}

bool check_nonlocal_entangler(const ScalarContext& ctx, long n) {
    if (n < 2) throw UsageError("nonlocal entangler requires n >= 2");
    State g = ground(ctx, n);
    State lhs = apply_word(ctx, BraidWord{{{4, 2}}}, g);
    State two = apply_word(ctx, BraidWord{{{3, 4}, {2, 3}}}, g);
    if (!lhs.eq(ctx, two.scaled(ctx.omega_sqrt_inv()))) return false;
    State three = apply_word(ctx, BraidWord{{{3, 4}, {2, 3}, {3, 4}}}, g);
    return lhs.eq(ctx, three);
}

} // namespace gca
