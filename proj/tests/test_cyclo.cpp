#include <doctest.h>

#include <random>

#include "core/cyclo.hpp"
#include "core/error.hpp"

using namespace gca;

namespace {

// Independent zero oracle: reduce in the full modulus without the
// support-compression shortcut the implementation uses.
bool zero_oracle(const Cyclo& x) {
    const long M = x.modulus();
    const auto& phi = cyclotomic_polynomial(M);
    const long deg = static_cast<long>(phi.size()) - 1;
    std::vector<mpq_class> dense(M);
    for (const auto& [k, v] : x.coeffs()) dense[k] = v;
    for (long j = M - 1; j >= deg; --j) {
        if (dense[j] == 0) continue;
        mpq_class c = dense[j];
        for (long i = 0; i < deg; ++i) dense[j - deg + i] -= c * phi[i];
        dense[j] = 0;
    }
    for (long i = 0; i < deg && i < M; ++i)
        if (dense[i] != 0) return false;
    return true;
}

Cyclo random_cyclo(long M, std::mt19937& rng, int max_terms = 4) {
    std::uniform_int_distribution<long> idx(0, M - 1);
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<int> count(1, max_terms);
    Cyclo out = Cyclo::zero(M);
    int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
        mpq_class w(num(rng), den(rng));
        w.canonicalize();
        out += Cyclo::root(M, idx(rng), w);
    }
    return out;
}

} // namespace

TEST_CASE("cyclotomic polynomials match known values") {
    CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<mpz_class>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
    // phi(64) = 32: x^32 + 1
    const auto& p64 = cyclotomic_polynomial(64);
    CHECK(p64.size() == 33);
    CHECK(p64.front() == 1);
    CHECK(p64.back() == 1);
    CHECK(euler_phi(400) == 160);
    CHECK(cyclotomic_polynomial(400).size() == 161);
}

TEST_CASE("basic root-of-unity identities") {
    // 1 + zeta_4^2 = 0 whenever 4 | M
    for (long M : {4L, 64L, 144L, 400L}) {
        Cyclo x = Cyclo::one(M) + Cyclo::root(M, M / 2);
        CHECK(x.is_zero_exact());
    }
    // sum of all M-th roots of unity vanishes
    for (long M : {6L, 64L, 90L}) {
        Cyclo s = Cyclo::zero(M);
        for (long k = 0; k < M; ++k) s += Cyclo::root(M, k);
        CHECK(s.is_zero_exact());
        CHECK(zero_oracle(s));
    }
    // conj maps index k to M-k
    Cyclo z = Cyclo::root(64, 5);
    CHECK(z.conj().coeffs().begin()->first == 59);
    CHECK((z * z.conj()).eq_exact(Cyclo::one(64)));
}

TEST_CASE("field arithmetic properties on random values") {
    std::mt19937 rng(12345);
    const long M = 144;
    for (int it = 0; it < 50; ++it) {
        Cyclo x = random_cyclo(M, rng);
        Cyclo y = random_cyclo(M, rng);
        Cyclo z = random_cyclo(M, rng);
        CHECK(((x + y) * z).eq_exact(x * z + y * z));
        CHECK((x * y).eq_exact(y * x));
        CHECK(((x * y) * z).eq_exact(x * (y * z)));
        CHECK((x * y).conj().eq_exact(x.conj() * y.conj()));
    }
}

TEST_CASE("compressed zero test agrees with the full-modulus oracle") {
    std::mt19937 rng(777);
    const long M = 240;
    int zeros_seen = 0;
    for (int it = 0; it < 80; ++it) {
        Cyclo x = random_cyclo(M, rng, 3);
        // make some values exactly zero by subtracting an equal representative
        if (it % 4 == 0) {
            x = x - x.reduced();
            ++zeros_seen;
        }
        CHECK(x.is_zero_exact() == zero_oracle(x));
    }
    CHECK(zeros_seen > 0);
}

TEST_CASE("inverse on monomials and random elements") {
    const long M = 80;
    for (long k : {0L, 1L, 7L, 40L, 79L}) {
        Cyclo x = Cyclo::root(M, k, mpq_class(3, 2));
        CHECK((x * x.inverse()).eq_exact(Cyclo::one(M)));
    }
    std::mt19937 rng(999);
    for (int it = 0; it < 20; ++it) {
        Cyclo x = random_cyclo(M, rng, 3);
        if (x.is_zero_exact()) continue;
        CHECK((x * x.inverse()).eq_exact(Cyclo::one(M)));
    }
    CHECK_THROWS_AS(Cyclo::zero(M).inverse(), UsageError);
    CHECK_THROWS_AS((Cyclo::one(M) + Cyclo::root(M, M / 2)).inverse(), UsageError);
}

TEST_CASE("reduced gives a canonical representative") {
    const long M = 64;
    Cyclo a = Cyclo::root(M, 60);
    Cyclo b = a.reduced();
    CHECK(a.eq_exact(b));
    for (const auto& [k, v] : b.coeffs()) {
        (void)v;
        CHECK(k < euler_phi(M));
    }
}

TEST_CASE("numeric embedding") {
    Cyclo z8 = Cyclo::root(8, 1);
    auto v = z8.embed();
    CHECK(v.real() == doctest::Approx(0.7071067811865476).epsilon(1e-12));
    CHECK(v.imag() == doctest::Approx(0.7071067811865476).epsilon(1e-12));
    // eq_exact implies embeddings agree
    Cyclo a = Cyclo::root(400, 100); // i
    Cyclo b = Cyclo::root(400, 300).conj();
    CHECK(a.eq_exact(b));
    CHECK(std::abs(a.embed() - b.embed()) < 1e-12);
}
