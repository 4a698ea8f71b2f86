#pragma once

#include <memory>
#include <string>

#include "core/cyclo.hpp"

namespace gca {

enum class EqBackend { exact, approx };

EqBackend backend_from_string(const std::string& name); // "exact" | "float"
std::string backend_name(EqBackend b);

// Exact scalar workspace for qudit dimension N.  All values live in the one
// ambient field Q(zeta_M) with M = 16*N^2, which is large enough for q, zeta,
// sqrt(N), omega and the chosen square root of omega.
//
// Immutable after construction; safe to share across threads.
class ScalarContext {
public:
    // Throws UsageError for N < 2.  With the exact backend, throws
    // InternalError if omega cannot be identified as a power of zeta_M
    // (never observed for N <= 64); with the float backend that failure
    // downgrades omega/omega^{1/2}/sqrtN to rational approximations that are
    // valid under the 1e-9 numeric equality policy.
    static ScalarContext create(long N, EqBackend backend = EqBackend::exact);

    long N() const { return N_; }
    long M() const { return M_; }
    EqBackend backend() const { return backend_; }
    bool root_identified() const { return identified_; }

    const Cyclo& q() const { return q_; }
    const Cyclo& zeta() const { return zeta_; }
    const Cyclo& omega() const { return omega_; }
    const Cyclo& omega_sqrt() const { return omega_sqrt_; }
    const Cyclo& sqrt_n() const { return sqrt_n_; }
    Cyclo inv_sqrt_n() const { return sqrt_n_ * mpq_class(1, N_); }
    Cyclo omega_sqrt_inv() const { return omega_sqrt_.conj(); }

    Cyclo q_power(long e) const;    // q^e with e taken mod N
    Cyclo zeta_power(long e) const; // zeta^e

    // Equality dispatch: exact reduction mod Phi_M is authoritative; the
    // float backend compares numeric embeddings within 1e-9.
    bool is_zero(const Cyclo& x) const;
    bool eq(const Cyclo& x, const Cyclo& y) const;

    static constexpr double approx_tolerance = 1e-9;

private:
    ScalarContext() = default;
    long N_ = 0, M_ = 0;
    EqBackend backend_ = EqBackend::exact;
    bool identified_ = false;
    long omega_index_ = -1; // t with omega = zeta_M^t when identified
    Cyclo q_, zeta_, omega_, omega_sqrt_, sqrt_n_;
};

struct GaussReport {
    long N = 0;
    Cyclo sum_a;               // sum over i of q^{-i^2}
    Cyclo sum_b;               // sum over i of q^{i-i^2}
    bool vanishes_a = false;   // exact zero test
    bool vanishes_b = false;
    double hansen_residual_re = 0; // |Re(sum q^{k^2}) - closed form|
    double hansen_residual_im = 0; // |Im(sum q^{k^2}) - closed form|
};

// Quadratic Gauss-sum diagnostics for the Yang-Baxter constant-term analysis.
GaussReport gauss_diagnostics(long N);

} // namespace gca
