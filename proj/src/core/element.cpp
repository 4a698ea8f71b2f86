#include "core/element.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace gca {

namespace {
long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}
} // namespace

MonoProd mono_mul(const Monomial& r, const Monomial& s, long N) {
    if (r.size() != s.size()) throw UsageError("monomial length mismatch");
    MonoProd out;
    out.mono.resize(r.size());
    long phase = 0;
    long suffix = 0; // sum of r_k for k > j while scanning j downward
    for (long j = static_cast<long>(r.size()) - 1; j >= 0; --j) {
        phase -= static_cast<long>(s[j]) * suffix;
        suffix += r[j];
        out.mono[j] = static_cast<std::uint16_t>((r[j] + s[j]) % N);
    }
    out.phase_exp = mod_pos(phase, N);
    return out;
}

Element Element::zero(long N, long n) {
    if (N < 2 || n < 1) throw UsageError("element sizes require N >= 2 and n >= 1");
    Element e;
    e.N_ = N;
    e.n_ = n;
    return e;
}

Element Element::identity(long N, long n) {
    Element e = zero(N, n);
    e.terms_[Monomial(2 * n, 0)] = Cyclo::one(e.M());
    return e;
}

Element Element::monomial(long N, long n, const Monomial& m, const Cyclo& coeff) {
    Element e = zero(N, n);
    if (m.size() != static_cast<std::size_t>(2 * n)) throw UsageError("monomial length mismatch");
    for (auto v : m)
        if (v >= N) throw UsageError("monomial exponent out of range");
    if (!coeff.trivially_zero()) e.terms_[m] = coeff;
    return e;
}

Element Element::generator_power(long N, long n, long index, long exp) {
    if (index < 1 || index > 2 * n)
        throw UsageError("generator index " + std::to_string(index) + " out of range 1.." +
                         std::to_string(2 * n));
    Element e = zero(N, n);
    Monomial m(2 * n, 0);
    m[index - 1] = static_cast<std::uint16_t>(mod_pos(exp, N));
    e.terms_[m] = Cyclo::one(e.M());
    return e;
}

void Element::add_term(const Monomial& m, const Cyclo& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.trivially_zero()) terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.trivially_zero()) terms_.erase(it);
    }
}

static void check_sizes(const Element& a, const Element& b) {
    if (a.N() != b.N() || a.n() != b.n()) throw UsageError("element algebra size mismatch");
}

Element Element::operator+(const Element& rhs) const {
    check_sizes(*this, rhs);
    Element out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

Element Element::operator-() const {
    Element out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Element Element::operator-(const Element& rhs) const { return *this + (-rhs); }

Element Element::operator*(const Element& rhs) const {
    check_sizes(*this, rhs);
    Element out = zero(N_, n_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) {
            MonoProd p = mono_mul(ma, mb, N_);
            Cyclo phase = Cyclo::root(M(), p.phase_exp * (M() / N_));
            out.add_term(p.mono, ca * cb * phase);
        }
    return out;
}

Element Element::scaled(const Cyclo& alpha) const {
    Element out = zero(N_, n_);
    for (const auto& [m, c] : terms_) {
        Cyclo v = c * alpha;
        if (!v.trivially_zero()) out.terms_.emplace(m, std::move(v));
    }
    return out;
}

Element Element::adjoint() const {
    Element out = zero(N_, n_);
    for (const auto& [m, c] : terms_) {
        // (c_1^{r_1}...c_{2n}^{r_{2n}})^dagger = c_{2n}^{-r_{2n}}...c_1^{-r_1},
        // re-normal-ordered by folding single-generator factors via mono_mul.
        Monomial acc(m.size(), 0);
        long phase = 0;
        for (long i = static_cast<long>(m.size()) - 1; i >= 0; --i) {
            if (m[i] == 0) continue;
            Monomial gen(m.size(), 0);
            gen[i] = static_cast<std::uint16_t>(mod_pos(-static_cast<long>(m[i]), N_));
            MonoProd p = mono_mul(acc, gen, N_);
            phase = mod_pos(phase + p.phase_exp, N_);
            acc = std::move(p.mono);
        }
        out.add_term(acc, c.conj() * Cyclo::root(M(), phase * (M() / N_)));
    }
    return out;
}

Cyclo Element::constant_term() const {
    auto it = terms_.find(Monomial(2 * n_, 0));
    return it == terms_.end() ? Cyclo::zero(M()) : it->second;
}

std::vector<Element> Element::charge_decompose() const {
    std::vector<Element> sectors(N_, zero(N_, n_));
    for (const auto& [m, c] : terms_) {
        long charge = 0;
        for (auto v : m) charge += v;
        sectors[charge % N_].terms_.emplace(m, c);
    }
    return sectors;
}

Element Element::charge_apply(const ScalarContext& ctx) const {
    Element out = zero(N_, n_);
    for (const auto& [m, c] : terms_) {
        long charge = 0;
        for (auto v : m) charge += v;
        out.terms_.emplace(m, c * ctx.q_power(charge));
    }
    return out;
}

bool Element::is_zero(const ScalarContext& ctx) const {
    for (const auto& [m, c] : terms_) {
        (void)m;
        if (!ctx.is_zero(c)) return false;
    }
    return true;
}

bool Element::eq(const ScalarContext& ctx, const Element& rhs) const {
    check_sizes(*this, rhs);
    auto ia = terms_.begin(), ib = rhs.terms_.begin();
    while (ia != terms_.end() || ib != rhs.terms_.end()) {
        if (ib == rhs.terms_.end() || (ia != terms_.end() && ia->first < ib->first)) {
            if (!ctx.is_zero(ia->second)) return false;
            ++ia;
        } else if (ia == terms_.end() || ib->first < ia->first) {
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

Element Element::pruned(const ScalarContext& ctx) const {
    Element out = zero(N_, n_);
    for (const auto& [m, c] : terms_)
        if (!ctx.is_zero(c)) out.terms_.emplace(m, c);
    return out;
}

bool is_central(const ScalarContext& ctx, const Element& x) {
    for (long i = 1; i <= 2 * x.n(); ++i) {
        Element ci = Element::generator_power(x.N(), x.n(), i, 1);
        if (!(x * ci).eq(ctx, ci * x)) return false;
    }
    return true;
}

std::vector<Monomial> center_basis(long N, long n) {
    if (N < 2 || n < 1) throw UsageError("center_basis requires N >= 2 and n >= 1");
    std::vector<Monomial> out;
    Monomial m(2 * n, 0);
    // Enumerate all N^{2n} exponent vectors; keep those commuting with every
    // generator.  Moving c_k to its slot from the right costs q^{-sum_{i>k} r_i}
    // and from the left q^{-sum_{i<k} r_i}, so the condition for each k is
    // sum_{i<k} r_i = sum_{i>k} r_i (mod N); only the identity solves all 2n.
    while (true) {
        bool central = true;
        long total = 0;
        for (auto v : m) total += v;
        long prefix = 0;
        for (long k = 0; k < 2 * n && central; ++k) {
            long suffix = total - prefix - m[k];
            if ((prefix - suffix) % N != 0) central = false;
            prefix += m[k];
        }
        if (central) out.push_back(m);
        long pos = 2 * n - 1;
        while (pos >= 0 && m[pos] == N - 1) m[pos--] = 0;
        if (pos < 0) break;
        ++m[pos];
    }
    return out;
}

Certificate certify_equal(const ScalarContext& ctx, const Element& x, const Element& y,
                          const Element& y_inv) {
    check_sizes(x, y);
    check_sizes(x, y_inv);
    if (!(y * y_inv).eq(ctx, Element::identity(x.N(), x.n())))
        throw PreconditionError("certify_equal: supplied y_inv is not an inverse of y");
    if (ctx.is_zero(x.constant_term()))
        throw PreconditionError("certify_equal: zero constant term in x");
    if (ctx.is_zero(y.constant_term()))
        throw PreconditionError("certify_equal: zero constant term in y");
    Certificate cert;
    cert.central = is_central(ctx, (y_inv * x).pruned(ctx));
    cert.constant_match = ctx.eq(x.constant_term(), y.constant_term());
    return cert;
}

Element subalgebra_map(const Element& x, const std::map<long, long>& index_map, long target_n) {
    // Collect the generators actually appearing and check the map is defined
    // and strictly order-preserving on them.
    std::vector<long> support;
    for (const auto& [m, c] : x.terms()) {
        (void)c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) support.push_back(static_cast<long>(i) + 1);
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    long prev_target = 0;
    for (std::size_t i = 0; i < support.size(); ++i) {
        auto it = index_map.find(support[i]);
        if (it == index_map.end())
            throw PreconditionError("subalgebra_map: index " + std::to_string(support[i]) +
                                    " not mapped");
        if (it->second < 1 || it->second > 2 * target_n)
            throw PreconditionError("subalgebra_map: target index out of range");
        if (i > 0 && it->second <= prev_target)
            throw PreconditionError("subalgebra_map: index map is not strictly order-preserving");
        prev_target = it->second;
    }
    Element out = Element::zero(x.N(), target_n);
    for (const auto& [m, c] : x.terms()) {
        Monomial t(2 * target_n, 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) t[index_map.at(static_cast<long>(i) + 1) - 1] = m[i];
        out = out + Element::monomial(x.N(), target_n, t, c);
    }
    return out;
}

} // namespace gca
