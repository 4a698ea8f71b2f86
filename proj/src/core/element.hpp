#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "core/scalar.hpp"

namespace gca {

// Exponent vector (r_1, ..., r_2n) of a normal-order word c_1^{r_1}...c_2n^{r_2n},
// entries reduced mod N.  Lexicographic order gives the deterministic term order.
using Monomial = std::vector<std::uint16_t>;

struct MonoProd {
    long phase_exp = 0; // power of q picked up by normal ordering, mod N
    Monomial mono;
};

// (c^r)(c^s) = q^{phase} c^{(r+s) mod N}; each right-factor generator moves
// left past the higher-index left factors, so phase = -sum_{j<k} s_j r_k.
MonoProd mono_mul(const Monomial& r, const Monomial& s, long N);

// Element of the generalized Clifford algebra C_{2n}^{(N)} kept in normal form:
// a sparse scalar-weighted sum of normal-order monomials.  Stored coefficients
// are nonzero as representatives; exact zero tests happen in eq/prune.
class Element {
public:
    Element() = default;
    static Element zero(long N, long n);
    static Element identity(long N, long n);
    static Element monomial(long N, long n, const Monomial& m, const Cyclo& coeff);
    // c_index^exp with 1-based index; exp may be any integer (reduced mod N)
    static Element generator_power(long N, long n, long index, long exp);

    long N() const { return N_; }
    long n() const { return n_; }
    long M() const { return 16 * N_ * N_; }
    const std::map<Monomial, Cyclo>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Element operator+(const Element& rhs) const;
    Element operator-(const Element& rhs) const;
    Element operator*(const Element& rhs) const;
    Element scaled(const Cyclo& alpha) const;
    Element operator-() const;

    // Antilinear antihomomorphism with c_i^dagger = c_i^{N-1}.
    Element adjoint() const;

    // Coefficient of the identity monomial (zero if absent).
    Cyclo constant_term() const;

    // Charge sector j collects monomials with sum of exponents = j (mod N).
    std::vector<Element> charge_decompose() const;
    // C(c^r) = q^{sum r_i} c^r, extended linearly.
    Element charge_apply(const ScalarContext& ctx) const;

    bool is_zero(const ScalarContext& ctx) const;
    bool eq(const ScalarContext& ctx, const Element& rhs) const;
    // Drop coefficients that are cyclotomically zero.
    Element pruned(const ScalarContext& ctx) const;

private:
    void add_term(const Monomial& m, const Cyclo& c);
    long N_ = 0, n_ = 0;
    std::map<Monomial, Cyclo> terms_;
};

// True iff x commutes with every generator (sufficient for centrality).
bool is_central(const ScalarContext& ctx, const Element& x);

// Monomials solving the center conditions q^{sum_{i<k} r_i} = q^{-sum_{i>k} r_i}
// for every k; the trivial-center theorem says only the identity survives.
std::vector<Monomial> center_basis(long N, long n);

struct Certificate {
    bool central = false;
    bool constant_match = false;
    bool pass() const { return central && constant_match; }
};

// Equality certificate: x = y iff y_inv*x is central and the constant terms
// of x and y agree.  Preconditions (y*y_inv = 1, both constant terms nonzero)
// are verified and raise PreconditionError, distinct from a failed certificate.
Certificate certify_equal(const ScalarContext& ctx, const Element& x, const Element& y,
                          const Element& y_inv);

// phi(c_{i1}^{a1} c_{i2}^{a2} ...) = c_{m(i1)}^{a1} c_{m(i2)}^{a2} ... for a
// strictly order-preserving index map; multiplicative by the subalgebra
// isomorphism argument.  target_n sizes the target algebra.
Element subalgebra_map(const Element& x, const std::map<long, long>& index_map, long target_n);

} // namespace gca
