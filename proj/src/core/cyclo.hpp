#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace gca {

// Exact element of the cyclotomic field Q(zeta_M), zeta_M = exp(2*pi*i/M).
//
// Values are stored as rational combinations of the M powers zeta_M^k,
// 0 <= k < M.  The stored representative is not canonical: two values are
// equal iff their difference reduces to zero modulo the M-th cyclotomic
// polynomial, which is what is_zero_exact/eq_exact decide.  All arithmetic
// is exact; no rounding happens anywhere in this type.
class Cyclo {
public:
    Cyclo() : modulus_(0) {}

    static Cyclo zero(long modulus);
    static Cyclo one(long modulus) { return root(modulus, 0); }
    // zeta_M^k times an optional rational weight
    static Cyclo root(long modulus, long k, const mpq_class& w = mpq_class(1));
    static Cyclo rational(long modulus, const mpq_class& value);

    long modulus() const { return modulus_; }
    const std::map<long, mpq_class>& coeffs() const { return coeffs_; }
    bool trivially_zero() const { return coeffs_.empty(); }
    // exact value if the representative is supported on zeta^0 only
    bool is_rational_representative(mpq_class& out) const;

    Cyclo operator+(const Cyclo& rhs) const;
    Cyclo operator-(const Cyclo& rhs) const;
    Cyclo operator-() const;
    Cyclo operator*(const Cyclo& rhs) const;
    Cyclo operator*(const mpq_class& rhs) const;
    Cyclo& operator+=(const Cyclo& rhs);

    // ring automorphism zeta_M -> zeta_M^{-1} (complex conjugation)
    Cyclo conj() const;
    Cyclo pow(long e) const;
    // multiplicative inverse; throws on zero
    Cyclo inverse() const;

    // Authoritative zero/equality tests (reduction modulo Phi_M).
    bool is_zero_exact() const;
    bool eq_exact(const Cyclo& rhs) const;

    // Canonical representative with support below deg Phi_M.
    Cyclo reduced() const;

    // Numeric embedding at zeta_M = exp(2*pi*i/M).  Absolute error is below
    // 2^-min(precision_bits, 52) for the coefficient sizes used here.
    std::complex<double> embed(int precision_bits = 53) const;

private:
    void set(long k, const mpq_class& v);
    long modulus_;
    std::map<long, mpq_class> coeffs_; // index -> nonzero rational
};

// M-th cyclotomic polynomial, ascending coefficients, monic.  Cached.
const std::vector<mpz_class>& cyclotomic_polynomial(long M);

// Euler totient, used for degrees of the cached polynomials.
long euler_phi(long M);

} // namespace gca
