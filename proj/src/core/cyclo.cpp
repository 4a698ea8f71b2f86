#include "core/cyclo.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include <mpfr.h>

#include "core/error.hpp"

namespace gca {

namespace {

long mod_index(long k, long M) {
    long r = k % M;
    return r < 0 ? r + M : r;
}

std::vector<long> distinct_prime_factors(long m) {
    std::vector<long> ps;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            ps.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) ps.push_back(m);
    return ps;
}

// p *= (x^k - 1)
void mul_by_xk_minus_1(std::vector<mpz_class>& p, long k) {
    std::vector<mpz_class> out(p.size() + k);
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i + k] += p[i];
        out[i] -= p[i];
    }
    p.swap(out);
}

// p /= (x^k - 1), exact.  From p_j = q_{j-k} - q_j, fill q top-down.
void div_by_xk_minus_1(std::vector<mpz_class>& p, long k) {
    long dq = static_cast<long>(p.size()) - 1 - k;
    std::vector<mpz_class> q(dq + 1);
    for (long j = static_cast<long>(p.size()) - 1; j >= k; --j) {
        mpz_class add = p[j];
        if (j <= dq) add += q[j];
        q[j - k] = add;
    }
    p.swap(q);
}

} // namespace

long euler_phi(long M) {
    long r = M;
    for (long p : distinct_prime_factors(M)) r -= r / p;
    return r;
}

const std::vector<mpz_class>& cyclotomic_polynomial(long M) {
    static std::map<long, std::vector<mpz_class>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;
    if (M < 1) throw UsageError("cyclotomic modulus must be positive");

    std::vector<mpz_class> poly{1};
    if (M == 1) {
        poly = {-1, 1}; // x - 1
    } else {
        // Moebius product over square-free divisors d of rad(M):
        // Phi_M = prod (x^{M/d} - 1)^{mu(d)}
        auto primes = distinct_prime_factors(M);
        std::vector<long> muls, divs;
        const std::size_t np = primes.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << np); ++mask) {
            long d = 1;
            int bits = 0;
            for (std::size_t i = 0; i < np; ++i)
                if (mask & (std::size_t(1) << i)) {
                    d *= primes[i];
                    ++bits;
                }
            (bits % 2 == 0 ? muls : divs).push_back(M / d);
        }
        for (long k : muls) mul_by_xk_minus_1(poly, k);
        for (long k : divs) div_by_xk_minus_1(poly, k);
    }
    auto [pos, inserted] = cache.emplace(M, std::move(poly));
    (void)inserted;
    return pos->second;
}

Cyclo Cyclo::zero(long modulus) {
    Cyclo c;
    c.modulus_ = modulus;
    return c;
}

Cyclo Cyclo::root(long modulus, long k, const mpq_class& w) {
    if (modulus < 1) throw UsageError("cyclotomic modulus must be positive");
    Cyclo c;
    c.modulus_ = modulus;
    if (w != 0) c.coeffs_[mod_index(k, modulus)] = w;
    return c;
}

Cyclo Cyclo::rational(long modulus, const mpq_class& value) { return root(modulus, 0, value); }

bool Cyclo::is_rational_representative(mpq_class& out) const {
    if (coeffs_.empty()) {
        out = 0;
        return true;
    }
    if (coeffs_.size() == 1 && coeffs_.begin()->first == 0) {
        out = coeffs_.begin()->second;
        return true;
    }
    return false;
}

void Cyclo::set(long k, const mpq_class& v) {
    if (v == 0)
        coeffs_.erase(k);
    else
        coeffs_[k] = v;
}

static void check_moduli(const Cyclo& a, const Cyclo& b) {
    if (a.modulus() != b.modulus())
        throw UsageError("cyclotomic modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                         std::to_string(b.modulus()));
}

Cyclo Cyclo::operator+(const Cyclo& rhs) const {
    check_moduli(*this, rhs);
    Cyclo out = *this;
    for (const auto& [k, v] : rhs.coeffs_) {
        auto it = out.coeffs_.find(k);
        if (it == out.coeffs_.end()) {
            out.coeffs_[k] = v;
        } else {
            it->second += v;
            if (it->second == 0) out.coeffs_.erase(it);
        }
    }
    return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& rhs) {
    check_moduli(*this, rhs);
    for (const auto& [k, v] : rhs.coeffs_) {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            coeffs_[k] = v;
        } else {
            it->second += v;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

Cyclo Cyclo::operator-() const {
    Cyclo out = *this;
    for (auto& [k, v] : out.coeffs_) v = -v;
    return out;
}

Cyclo Cyclo::operator-(const Cyclo& rhs) const { return *this + (-rhs); }

Cyclo Cyclo::operator*(const Cyclo& rhs) const {
    check_moduli(*this, rhs);
    Cyclo out = zero(modulus_);
    for (const auto& [ka, va] : coeffs_)
        for (const auto& [kb, vb] : rhs.coeffs_) {
            long k = ka + kb >= modulus_ ? ka + kb - modulus_ : ka + kb;
            auto it = out.coeffs_.find(k);
            if (it == out.coeffs_.end()) {
                mpq_class prod = va * vb;
                if (prod != 0) out.coeffs_.emplace(k, std::move(prod));
            } else {
                it->second += va * vb;
                if (it->second == 0) out.coeffs_.erase(it);
            }
        }
    return out;
}

Cyclo Cyclo::operator*(const mpq_class& rhs) const {
    if (rhs == 0) return zero(modulus_);
    Cyclo out = *this;
    for (auto& [k, v] : out.coeffs_) v *= rhs;
    return out;
}

Cyclo Cyclo::conj() const {
    Cyclo out = zero(modulus_);
    for (const auto& [k, v] : coeffs_) out.coeffs_[k == 0 ? 0 : modulus_ - k] = v;
    return out;
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo acc = one(modulus_);
    Cyclo base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

namespace {

// Dense remainder of an integer polynomial modulo the monic Phi_M; the input
// vector is consumed.  Returns true iff the remainder is identically zero.
bool reduces_to_zero(std::vector<mpz_class>& dense, long M) {
    const auto& phi = cyclotomic_polynomial(M);
    const long deg = static_cast<long>(phi.size()) - 1;
    for (long j = static_cast<long>(dense.size()) - 1; j >= deg; --j) {
        if (dense[j] == 0) continue;
        mpz_class c = dense[j];
        for (long i = 0; i < deg; ++i) dense[j - deg + i] -= c * phi[i];
        dense[j] = 0;
    }
    long upto = std::min<long>(deg, static_cast<long>(dense.size()));
    for (long i = 0; i < upto; ++i)
        if (dense[i] != 0) return false;
    return true;
}

} // namespace

bool Cyclo::is_zero_exact() const {
    if (coeffs_.empty()) return true;
    if (coeffs_.size() == 1) return false; // a single scaled root of unity is nonzero
    // Compress the support: if all indices share a factor g with M, the value
    // lives in the subfield Q(zeta_{M/g}) and can be reduced there.
    long g = modulus_;
    for (const auto& [k, v] : coeffs_) {
        (void)v;
        g = std::gcd(g, k);
        if (g == 1) break;
    }
    const long Mp = modulus_ / g;
    if (Mp == 1) {
        mpq_class sum = 0;
        for (const auto& [k, v] : coeffs_) {
            (void)k;
            sum += v;
        }
        return sum == 0;
    }
    // Clear denominators and reduce an integer polynomial mod Phi_{Mp}.
    mpz_class den_lcm = 1;
    for (const auto& [k, v] : coeffs_) {
        (void)k;
        mpz_class d = v.get_den();
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    std::vector<mpz_class> dense(Mp);
    for (const auto& [k, v] : coeffs_)
        dense[k / g] = v.get_num() * (den_lcm / v.get_den());
    return reduces_to_zero(dense, Mp);
}

bool Cyclo::eq_exact(const Cyclo& rhs) const {
    check_moduli(*this, rhs);
    if (coeffs_ == rhs.coeffs_) return true;
    return (*this - rhs).is_zero_exact();
}

Cyclo Cyclo::reduced() const {
    if (coeffs_.empty()) return *this;
    const auto& phi = cyclotomic_polynomial(modulus_);
    const long deg = static_cast<long>(phi.size()) - 1;
    std::vector<mpq_class> dense(modulus_);
    for (const auto& [k, v] : coeffs_) dense[k] = v;
    for (long j = modulus_ - 1; j >= deg; --j) {
        if (dense[j] == 0) continue;
        mpq_class c = dense[j];
        for (long i = 0; i < deg; ++i) dense[j - deg + i] -= c * phi[i];
        dense[j] = 0;
    }
    Cyclo out = zero(modulus_);
    for (long i = 0; i < deg && i < modulus_; ++i)
        if (dense[i] != 0) out.coeffs_[i] = dense[i];
    return out;
}

Cyclo Cyclo::inverse() const {
    if (coeffs_.size() == 1) {
        const auto& [k, v] = *coeffs_.begin();
        return root(modulus_, k == 0 ? 0 : modulus_ - k, mpq_class(1) / v);
    }
    Cyclo r = reduced();
    if (r.coeffs_.empty()) throw UsageError("division by zero in Q(zeta_M)");
    // Extended Euclid in Q[x] against Phi_M (irreducible over Q), tracking
    // only the Bezout coefficient of the input polynomial.
    using Poly = std::vector<mpq_class>;
    auto degree = [](const Poly& p) {
        long d = static_cast<long>(p.size()) - 1;
        while (d >= 0 && p[d] == 0) --d;
        return d;
    };
    const auto& phi_z = cyclotomic_polynomial(modulus_);
    Poly r0(phi_z.begin(), phi_z.end());
    Poly r1(r.modulus_, 0);
    for (const auto& [k, v] : r.coeffs_) r1[k] = v;
    r1.resize(degree(r1) + 1);
    Poly s0{0}, s1{1}; // coefficients of the input in the running combination
    while (true) {
        long d1 = degree(r1);
        if (d1 < 0) throw UsageError("division by zero in Q(zeta_M)");
        if (d1 == 0) break;
        long d0 = degree(r0);
        Poly q(d0 - d1 + 1, 0);
        Poly rem = r0;
        for (long j = d0; j >= d1; --j) {
            if (rem[j] == 0) continue;
            mpq_class c = rem[j] / r1[d1];
            q[j - d1] = c;
            for (long i = 0; i <= d1; ++i) rem[j - d1 + i] -= c * r1[i];
        }
        // s_next = s0 - q*s1
        Poly s_next(std::max(s0.size(), q.size() + s1.size()), 0);
        for (std::size_t i = 0; i < s0.size(); ++i) s_next[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j) s_next[i + j] -= q[i] * s1[j];
        r0.swap(r1);
        r1.swap(rem);
        r1.resize(std::max<long>(degree(r1) + 1, 1));
        s0.swap(s1);
        s1.swap(s_next);
    }
    mpq_class unit = r1[0]; // gcd is a nonzero constant
    Cyclo out = zero(modulus_);
    for (std::size_t i = 0; i < s1.size(); ++i)
        if (s1[i] != 0) out.coeffs_[static_cast<long>(i)] = s1[i] / unit;
    return out;
}

std::complex<double> Cyclo::embed(int precision_bits) const {
    const mpfr_prec_t prec = std::max(64, precision_bits + 16);
    mpfr_t re, im, angle, t, pi, c;
    mpfr_inits2(prec, re, im, angle, t, pi, c, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    mpfr_const_pi(pi, MPFR_RNDN);
    for (const auto& [k, v] : coeffs_) {
        mpfr_mul_si(angle, pi, 2 * k, MPFR_RNDN);
        mpfr_div_si(angle, angle, modulus_, MPFR_RNDN);
        mpfr_set_q(c, v.get_mpq_t(), MPFR_RNDN);
        mpfr_cos(t, angle, MPFR_RNDN);
        mpfr_mul(t, t, c, MPFR_RNDN);
        mpfr_add(re, re, t, MPFR_RNDN);
        mpfr_sin(t, angle, MPFR_RNDN);
        mpfr_mul(t, t, c, MPFR_RNDN);
        mpfr_add(im, im, t, MPFR_RNDN);
    }
    std::complex<double> out(mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN));
    mpfr_clears(re, im, angle, t, pi, c, static_cast<mpfr_ptr>(nullptr));
    return out;
}

} // namespace gca
