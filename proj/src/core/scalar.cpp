#include "core/scalar.hpp"

#include <cmath>
#include <numbers>

#include "core/error.hpp"

namespace gca {

EqBackend backend_from_string(const std::string& name) {
    if (name == "exact") return EqBackend::exact;
    if (name == "float") return EqBackend::approx;
    throw UsageError("unknown backend '" + name + "' (expected exact|float)");
}

std::string backend_name(EqBackend b) { return b == EqBackend::exact ? "exact" : "float"; }

namespace {

long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Nearest rational with denominator 2^40; exact in double, plenty below the
// 1e-9 float-backend tolerance.
mpq_class rational_approx(double x) {
    const double scale = 1099511627776.0; // 2^40
    mpq_class r(static_cast<long>(std::llround(x * scale)), 1099511627776L);
    r.canonicalize();
    return r;
}

} // namespace

ScalarContext ScalarContext::create(long N, EqBackend backend) {
    if (N < 2) throw UsageError("qudit dimension N must be at least 2");
    ScalarContext ctx;
    ctx.N_ = N;
    ctx.M_ = 16 * N * N;
    ctx.backend_ = backend;
    const long M = ctx.M_;
    ctx.q_ = Cyclo::root(M, M / N);
    ctx.zeta_ = Cyclo::root(M, mod_pos(8 * N * (N + 1), M)); // zeta_{2N}^{N+1}

    // omega' = sum_i zeta^{i^2}; omega = omega'/sqrt(N) has modulus one and
    // is identified exactly as the power zeta_M^t with zeta_M^{2t} = omega'^2/N
    // whose embedding matches omega'/|omega'|.
    Cyclo omega_prime = Cyclo::zero(M);
    for (long i = 0; i < N; ++i)
        omega_prime += Cyclo::root(M, mod_pos(8 * N * (N + 1) * ((i * i) % (2 * N)), M));
    const Cyclo omega_sq = omega_prime * omega_prime * mpq_class(1, N);

    const std::complex<double> w_num = omega_prime.embed() / std::sqrt(static_cast<double>(N));
    const double theta = std::arg(w_num); // (-pi, pi]
    const double t_real = theta * static_cast<double>(M) / (2 * std::numbers::pi);
    long t = -1;
    long t0 = std::lround(t_real);
    for (long d : {0L, 1L, -1L, 2L, -2L}) {
        long cand = mod_pos(t0 + d, M);
        if (!Cyclo::root(M, mod_pos(2 * cand, M)).eq_exact(omega_sq)) continue;
        std::complex<double> c = Cyclo::root(M, cand).embed();
        if (std::abs(c - w_num) < 1e-6) {
            t = cand;
            break;
        }
    }
    if (t < 0) {
        // fall back to a full scan before declaring failure
        for (long cand = 0; cand < M && t < 0; ++cand) {
            if (!Cyclo::root(M, mod_pos(2 * cand, M)).eq_exact(omega_sq)) continue;
            if (std::abs(Cyclo::root(M, cand).embed() - w_num) < 1e-6) t = cand;
        }
    }

    long t_principal = 0;
    if (t >= 0) {
        t_principal = t <= M / 2 ? t : t - M; // angle in (-pi, pi]
        if (t_principal % 2 != 0) t = -1;     // no square root inside mu_M
    }

    if (t >= 0) {
        ctx.identified_ = true;
        ctx.omega_index_ = t;
        ctx.omega_ = Cyclo::root(M, t);
        ctx.omega_sqrt_ = Cyclo::root(M, mod_pos(t_principal / 2, M));
        ctx.sqrt_n_ = omega_prime * ctx.omega_.conj();
        if (!(ctx.sqrt_n_ * ctx.sqrt_n_).eq_exact(Cyclo::rational(M, N)))
            throw InternalError("sqrt(N) construction failed the exact square check");
        const std::complex<double> s = ctx.sqrt_n_.embed();
        if (!(s.real() > 0 && std::abs(s.imag()) < 1e-9))
            throw InternalError("sqrt(N) construction is not the positive real root");
        return ctx;
    }

    if (backend == EqBackend::exact)
        throw InternalError("root-of-unity identification failed for omega (N=" + std::to_string(N) +
                            "); rerun with the float backend");

    // Float-backend fallback: rational-coefficient stand-ins accurate far
    // below the 1e-9 comparison tolerance.  Not silent: root_identified()
    // stays false and surfaces in reports.
    ctx.identified_ = false;
    const Cyclo i_unit = Cyclo::root(M, M / 4);
    auto approx = [&](std::complex<double> z) {
        return Cyclo::rational(M, rational_approx(z.real())) + i_unit * rational_approx(z.imag());
    };
    ctx.omega_ = approx(w_num);
    ctx.omega_sqrt_ = approx(std::polar(1.0, theta / 2));
    ctx.sqrt_n_ = Cyclo::rational(M, rational_approx(std::sqrt(static_cast<double>(N))));
    return ctx;
}

Cyclo ScalarContext::q_power(long e) const { return Cyclo::root(M_, mod_pos(e, N_) * (M_ / N_)); }

Cyclo ScalarContext::zeta_power(long e) const {
    return Cyclo::root(M_, mod_pos(8 * N_ * (N_ + 1) * mod_pos(e, 2 * N_), M_));
}

bool ScalarContext::is_zero(const Cyclo& x) const {
    if (backend_ == EqBackend::exact) return x.is_zero_exact();
    if (x.trivially_zero()) return true;
    return std::abs(x.embed()) < approx_tolerance;
}

bool ScalarContext::eq(const Cyclo& x, const Cyclo& y) const {
    if (backend_ == EqBackend::exact) return x.eq_exact(y);
    if (x.coeffs() == y.coeffs()) return true;
    return is_zero(x - y);
}

GaussReport gauss_diagnostics(long N) {
    if (N < 2) throw UsageError("qudit dimension N must be at least 2");
    const long M = 16 * N * N;
    GaussReport rep;
    rep.N = N;
    rep.sum_a = Cyclo::zero(M);
    rep.sum_b = Cyclo::zero(M);
    for (long i = 0; i < N; ++i) {
        long a = ((-i * i) % N + N) % N;
        long b = ((i - i * i) % N + N) % N;
        rep.sum_a += Cyclo::root(M, a * (M / N));
        rep.sum_b += Cyclo::root(M, b * (M / N));
    }
    rep.vanishes_a = rep.sum_a.is_zero_exact();
    rep.vanishes_b = rep.sum_b.is_zero_exact();

    // Hansen closed forms for sum_k exp(2 pi i k^2 / N); cos/sin(N pi/2) are
    // taken from N mod 4 to keep the comparison clean of libm drift.
    std::complex<double> s(0, 0);
    for (long k = 0; k < N; ++k) {
        double ang = 2.0 * std::numbers::pi * static_cast<double>(k * k) / static_cast<double>(N);
        s += std::complex<double>(std::cos(ang), std::sin(ang));
    }
    static const int cos_tab[4] = {1, 0, -1, 0};
    static const int sin_tab[4] = {0, 1, 0, -1};
    const double c = cos_tab[N % 4], d = sin_tab[N % 4];
    const double root = std::sqrt(static_cast<double>(N));
    rep.hansen_residual_re = std::abs(s.real() - root / 2 * (1 + c + d));
    rep.hansen_residual_im = std::abs(s.imag() - root / 2 * (1 + c - d));
    return rep;
}

} // namespace gca
