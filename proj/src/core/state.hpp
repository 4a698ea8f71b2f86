#pragma once

#include "core/braid.hpp"

namespace gca {

// Vector in the span of the orthonormal basis
// { c_2^{a_1} c_4^{a_2} ... c_{2n}^{a_n} |ground>, a in (Z_N)^n },
// stored as a sparse map from charge vectors a to exact scalars.
class State {
public:
    State() = default;
    static State zero(long N, long n);
    static State basis_ket(long N, long n, const std::vector<std::uint16_t>& a,
                           const Cyclo& coeff);

    long N() const { return N_; }
    long n() const { return n_; }
    long M() const { return 16 * N_ * N_; }
    const std::map<std::vector<std::uint16_t>, Cyclo>& coeffs() const { return coeffs_; }

    State operator+(const State& rhs) const;
    State operator-(const State& rhs) const;
    State scaled(const Cyclo& alpha) const;

    bool eq(const ScalarContext& ctx, const State& rhs) const;

private:
    friend State apply_generator(const ScalarContext&, long, const State&);
    friend State apply_projector(long, const State&);
    void add_term(const std::vector<std::uint16_t>& a, const Cyclo& c);
    long N_ = 0, n_ = 0;
    std::map<std::vector<std::uint16_t>, Cyclo> coeffs_;
};

// |ground><ground| ... the distinguished a = 0 ket with coefficient 1.
State ground(const ScalarContext& ctx, long n);

// Single-generator action on the basis, 1-based index j in 1..2n:
//   c_{2k}   |a> = q^{-sum_{i<k} a_i}              |a + e_k>
//   c_{2k-1} |a> = zeta q^{a_k - sum_{i<k} a_i}    |a + e_k>
// derived once from the commutation relations and the ground-state axiom.
State apply_generator(const ScalarContext& ctx, long j, const State& s);

// E_k zeroes every coefficient with a_k != 0 (diagonal in this basis).
State apply_projector(long k, const State& s);

State apply_element(const ScalarContext& ctx, const Element& x, const State& s);
State apply_word(const ScalarContext& ctx, const BraidWord& w, const State& s);

// Hermitian inner product, conjugate-linear in the first argument.
Cyclo inner(const State& s1, const State& s2);
// <ground| x |ground>
Cyclo vev(const ScalarContext& ctx, const Element& x, long n);

// One atom of a state-space pipeline: E_k is an operator on states, not an
// algebra element, so mixed products are applied through this form.
struct StateOpAtom {
    enum class Kind { generator_power, projector, element, word } kind;
    long index = 0; // generator index or projector qudit
    long exp = 0;
    Element elem;
    BraidWord word;
};
using StateOp = std::vector<StateOpAtom>;

StateOp state_op_adjoint(const StateOp& op);
State apply_state_op(const ScalarContext& ctx, const StateOp& op, const State& s);

// b_{2k-1,2k} E_k = omega^{-1/2} E_k on every basis ket, plus the adjoint
// form b_{2k,2k-1} E_k = omega^{1/2} E_k.
bool check_twist(const ScalarContext& ctx, long n, long k);

// General slide move b_{2k,2l-1} b_{2l-1,2l} b_{2k-1,2k} b_{2k,2l-1} |ground> =
// |ground>, with the corollary b12 b23 |ground> = b43 b32 |ground> at (1,2).
bool check_slide(const ScalarContext& ctx, long n, long k, long l);

// General slip move b_{2k,2l-1} b_{2l-1,2l} b_{2k,2k-1} b_{2l-1,2k} |ground> =
// |ground>, with the corollary b21 b32 |ground> = b43 b32 |ground> at (1,2).
bool check_slip(const ScalarContext& ctx, long n, long k, long l);

struct ChainReport {
    bool two_braid = false;  // b34 b23 |g> = b43 b32 |g>
    bool four_braid = false; // b56 b45 b34 b23 |g> = b65 b54 b43 b32 |g>
    bool all() const { return two_braid && four_braid; }
};
ChainReport check_chain_identities(const ScalarContext& ctx, long n);

// N^{-(k-1)/2} sum_{sum a_i = 0} zeta^{sum a_i^2} c_2^{a_1}...c_{2k}^{a_k}|ground>.
State closed_form_chain(const ScalarContext& ctx, long n, long k);

// The braid chain b_{2k-1,2k} ... b_34 b_23 applied to the ground state must
// reproduce closed_form_chain(k) exactly.
bool check_closed_form_chain(const ScalarContext& ctx, long n, long k);

// b42 |g> = omega^{-1/2} b34 b23 |g> and b42 |g> = b34 b23 b34 |g>.
bool check_nonlocal_entangler(const ScalarContext& ctx, long n);

} // namespace gca
