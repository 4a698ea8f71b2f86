#pragma once

#include <complex>

#include <Eigen/Dense>

#include "core/state.hpp"

namespace gca {

// Explicit N^n-dimensional clock/shift representation, used as a float oracle
// that is independent of the exact symbolic path.  All matrices are dense
// complex doubles; exactness lives in the symbolic modules.
struct RepContext {
    long N = 0, n = 0, dim = 0;
    std::vector<Eigen::MatrixXcd> generators; // g_1 ... g_2n
    std::vector<Eigen::MatrixXcd> projectors; // P_1 ... P_n
    Eigen::VectorXcd ground_vec;              // first standard basis vector
    Eigen::MatrixXcd basis;                   // columns g_2^{a_1}...g_{2n}^{a_n} ground
    std::complex<double> q, zeta, omega, omega_sqrt, sqrt_n;
};

// Clock/shift construction with the Z-string on sites after the acting site:
//   g_{2j-1} = X_j (x) Z_{>j},   g_{2j} = zeta^{-1} (X Z^{-1})_j (x) Z_{>j}.
// Build-time checks enforce the defining relations, unitarity, the ground and
// projector identities, and basis orthonormality, all within `tol`.
RepContext build_rep(long N, long n, long dim_budget = 4096, double tol = 1e-12);

Eigen::MatrixXcd elem_to_matrix(const Element& x, const RepContext& rc);
Eigen::MatrixXcd word_to_matrix(const BraidWord& w, const RepContext& rc);

// Embeds a symbolic state into the representation space (basis columns carry
// the representation's own phases).
Eigen::VectorXcd state_to_vector(const State& s, const RepContext& rc);

struct CrossValidation {
    double max_deviation = 0;
    double tol = 0;
    bool pass = false;
};

// Compares apply_element(x, s) embedded numerically against
// elem_to_matrix(x) * state_to_vector(s).
CrossValidation cross_validate(const ScalarContext& ctx, const Element& x, const State& s,
                               const RepContext& rc, double tol);

// Gram-matrix rank of the N^{2n} normal-order monomial matrices; full rank
// supports the basis property behind the trivial-center theorem.
long monomial_matrix_rank(const RepContext& rc);

} // namespace gca
