#include "core/rep.hpp"

#include <numbers>

#include "core/error.hpp"

namespace gca {

namespace {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// site operator at position `site` (1-based) with Z on all later sites
Mat site_with_z_string(const Mat& op, const Mat& z, long n, long site) {
    Mat acc = Mat::Identity(1, 1);
    for (long s = 1; s <= n; ++s) {
        if (s < site)
            acc = kron(acc, Mat::Identity(op.rows(), op.cols()));
        else if (s == site)
            acc = kron(acc, op);
        else
            acc = kron(acc, z);
    }
    return acc;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw InternalError("representation build check failed: " + what);
}

} // namespace

RepContext build_rep(long N, long n, long dim_budget, double tol) {
    if (N < 2 || n < 1) throw UsageError("representation requires N >= 2 and n >= 1");
    double dimd = std::pow(static_cast<double>(N), static_cast<double>(n));
    if (dimd > static_cast<double>(dim_budget))
        throw UsageError("representation dimension N^n = " + std::to_string(dimd) +
                         " exceeds the budget " + std::to_string(dim_budget));
    RepContext rc;
    rc.N = N;
    rc.n = n;
    rc.dim = static_cast<long>(dimd + 0.5);
    rc.q = std::polar(1.0, 2 * std::numbers::pi / static_cast<double>(N));
    rc.zeta = std::polar(1.0, std::numbers::pi * static_cast<double>(N + 1) / static_cast<double>(N));

    Mat z = Mat::Zero(N, N), x = Mat::Zero(N, N);
    for (long a = 0; a < N; ++a) {
        z(a, a) = std::pow(rc.q, static_cast<double>(a));
        x((a + 1) % N, a) = 1.0;
    }
    const Mat even_site = (1.0 / rc.zeta) * (x * z.inverse());

    for (long j = 1; j <= n; ++j) {
        rc.generators.push_back(site_with_z_string(x, z, n, j));
        rc.generators.push_back(site_with_z_string(even_site, z, n, j));
    }

    Mat p0 = Mat::Zero(N, N);
    p0(0, 0) = 1.0;
    for (long k = 1; k <= n; ++k) {
        Mat acc = Mat::Identity(1, 1);
        for (long s = 1; s <= n; ++s)
            acc = kron(acc, s == k ? p0 : Mat::Identity(N, N));
        rc.projectors.push_back(acc);
    }

    rc.ground_vec = Vec::Zero(rc.dim);
    rc.ground_vec(0) = 1.0;

    // numeric omega and its principal square root, computed independently of
    // the exact path
    std::complex<double> op(0, 0);
    for (long i = 0; i < N; ++i) op += std::pow(rc.zeta, static_cast<double>((i * i) % (2 * N)));
    rc.sqrt_n = std::sqrt(static_cast<double>(N));
    rc.omega = op / rc.sqrt_n;
    rc.omega_sqrt = std::polar(1.0, std::arg(rc.omega) / 2);

    // basis columns g_2^{a_1} ... g_{2n}^{a_n} ground
    rc.basis = Mat::Zero(rc.dim, rc.dim);
    std::vector<std::uint16_t> a(n, 0);
    while (true) {
        Vec v = rc.ground_vec;
        for (long k = n; k >= 1; --k)
            for (long rep = 0; rep < a[k - 1]; ++rep) v = rc.generators[2 * k - 1] * v;
        long index = 0;
        for (long k = 0; k < n; ++k) index = index * N + a[k];
        rc.basis.col(index) = v;
        long pos = n - 1;
        while (pos >= 0 && a[pos] == N - 1) a[pos--] = 0;
        if (pos < 0) break;
        ++a[pos];
    }

    // build-time contract checks
    const Mat id = Mat::Identity(rc.dim, rc.dim);
    for (long i = 0; i < 2 * n; ++i) {
        const Mat& g = rc.generators[i];
        require((g * g.adjoint() - id).cwiseAbs().maxCoeff() < tol, "unitarity of g" + std::to_string(i + 1));
        Mat pw = id;
        for (long e = 0; e < N; ++e) pw = pw * g;
        require((pw - id).cwiseAbs().maxCoeff() < tol, "g^N = 1 for g" + std::to_string(i + 1));
        for (long j = i + 1; j < 2 * n; ++j) {
            Mat lhs = rc.generators[i] * rc.generators[j];
            Mat rhs = rc.q * rc.generators[j] * rc.generators[i];
            require((lhs - rhs).cwiseAbs().maxCoeff() < tol, "defining relation g_i g_j = q g_j g_i");
        }
    }
    for (long k = 1; k <= n; ++k) {
        Vec lhs = rc.generators[2 * k - 2] * rc.ground_vec;
        Vec rhs = rc.zeta * (rc.generators[2 * k - 1] * rc.ground_vec);
        require((lhs - rhs).cwiseAbs().maxCoeff() < tol, "ground identity at qudit " + std::to_string(k));
        Mat pl = rc.generators[2 * k - 2] * rc.projectors[k - 1];
        Mat pr = rc.zeta * rc.generators[2 * k - 1] * rc.projectors[k - 1];
        require((pl - pr).cwiseAbs().maxCoeff() < tol, "projector identity at qudit " + std::to_string(k));
    }
    require((rc.basis.adjoint() * rc.basis - id).cwiseAbs().maxCoeff() < tol,
            "orthonormality of the even-generator basis");
    return rc;
}

Eigen::MatrixXcd elem_to_matrix(const Element& x, const RepContext& rc) {
    if (x.N() != rc.N || x.n() != rc.n) throw UsageError("element/representation size mismatch");
    Mat out = Mat::Zero(rc.dim, rc.dim);
    for (const auto& [m, c] : x.terms()) {
        Mat term = Mat::Identity(rc.dim, rc.dim);
        for (long i = 0; i < 2 * rc.n; ++i)
            for (long e = 0; e < m[i]; ++e) term = term * rc.generators[i];
        out += c.embed() * term;
    }
    return out;
}

Eigen::MatrixXcd word_to_matrix(const BraidWord& w, const RepContext& rc) {
    Mat out = Mat::Identity(rc.dim, rc.dim);
    for (const auto& [k, l] : w.factors) {
        if (k == l || k < 1 || l < 1 || k > 2 * rc.n || l > 2 * rc.n)
            throw UsageError("braid indices out of range in word");
        Mat sum = Mat::Zero(rc.dim, rc.dim);
        Mat gl_inv = rc.generators[l - 1].adjoint();
        for (long i = 0; i < rc.N; ++i) {
            // c_k^i c_l^{-i}
            Mat t = Mat::Identity(rc.dim, rc.dim);
            for (long e = 0; e < i; ++e) t = rc.generators[k - 1] * t;
            for (long e = 0; e < i; ++e) t = t * gl_inv;
            sum += t;
        }
        std::complex<double> pref = (k < l ? rc.omega_sqrt : std::conj(rc.omega_sqrt)) / rc.sqrt_n;
        out = out * (pref * sum);
    }
    return out;
}

Eigen::VectorXcd state_to_vector(const State& s, const RepContext& rc) {
    if (s.N() != rc.N || s.n() != rc.n) throw UsageError("state/representation size mismatch");
    Vec coeff = Vec::Zero(rc.dim);
    for (const auto& [a, c] : s.coeffs()) {
        long index = 0;
        for (long k = 0; k < rc.n; ++k) index = index * rc.N + a[k];
        coeff(index) = c.embed();
    }
    return rc.basis * coeff;
}

CrossValidation cross_validate(const ScalarContext& ctx, const Element& x, const State& s,
                               const RepContext& rc, double tol) {
    if (tol <= 0) throw UsageError("cross_validate requires tol > 0");
    CrossValidation cv;
    cv.tol = tol;
    Vec symbolic = state_to_vector(apply_element(ctx, x, s), rc);
    Vec numeric = elem_to_matrix(x, rc) * state_to_vector(s, rc);
    cv.max_deviation = (symbolic - numeric).cwiseAbs().maxCoeff();
    cv.pass = cv.max_deviation < tol;
    return cv;
}

long monomial_matrix_rank(const RepContext& rc) {
    const long count = static_cast<long>(std::pow(static_cast<double>(rc.N), 2.0 * rc.n) + 0.5);
    Mat flat(rc.dim * rc.dim, count);
    Monomial m(2 * rc.n, 0);
    long col = 0;
    while (true) {
        Mat term = Mat::Identity(rc.dim, rc.dim);
        for (long i = 0; i < 2 * rc.n; ++i)
            for (long e = 0; e < m[i]; ++e) term = term * rc.generators[i];
        flat.col(col++) = Eigen::Map<Vec>(term.data(), rc.dim * rc.dim);
        long pos = 2 * rc.n - 1;
        while (pos >= 0 && m[pos] == rc.N - 1) m[pos--] = 0;
        if (pos < 0) break;
        ++m[pos];
    }
    Eigen::ColPivHouseholderQR<Mat> qr(flat);
    qr.setThreshold(1e-8);
    return qr.rank();
}

} // namespace gca
