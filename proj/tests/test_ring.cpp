#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gbf/ring.hpp"
#include "oracle.hpp"

using namespace gbf;

namespace {

CyclicRingElt elt(std::int64_t m, std::initializer_list<std::int64_t> support) {
    CyclicRingElt e = CyclicRingElt::zero(m);
    for (auto i : support) e = e + CyclicRingElt::monomial(m, i);
    return e;
}

CyclicRingElt random_elt(std::mt19937_64& rng, std::int64_t m, Coeff lo, Coeff hi) {
    std::uniform_int_distribution<Coeff> dist(lo, hi);
    std::vector<Coeff> c(static_cast<std::size_t>(m));
    for (auto& x : c) x = dist(rng);
    return {m, c};
}

}  // namespace

TEST_CASE("factorize") {
    CHECK(factorize(30).factors == std::vector<PrimePower>{{2, 1}, {3, 1}, {5, 1}});
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(90).factors == std::vector<PrimePower>{{2, 1}, {3, 2}, {5, 1}});
    CHECK(factorize(1024).factors == std::vector<PrimePower>{{2, 10}});
    CHECK(factorize(999983).factors == std::vector<PrimePower>{{999983, 1}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    CHECK_THROWS_AS(factorize(-6), std::invalid_argument);

    const auto f = factorize(2 * 9 * 5 * 49);
    CHECK(f.product() == f.m);
    CHECK(f.radical() == 2 * 3 * 5 * 7);
    CHECK_FALSE(f.is_square_free());
    CHECK(factorize(30).is_square_free());
    CHECK(f.primes() == std::vector<std::int64_t>{2, 3, 5, 7});
}

TEST_CASE("factorize round-trips on a range") {
    for (std::int64_t m = 1; m <= 5000; ++m) {
        const auto f = factorize(m);
        REQUIRE(f.product() == m);
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            CHECK(is_prime(f.factors[i].prime));
            if (i > 0) CHECK(f.factors[i - 1].prime < f.factors[i].prime);
        }
    }
}

TEST_CASE("subgroup_sum") {
    CHECK(subgroup_sum(10, 2) == elt(10, {0, 5}));
    CHECK(subgroup_sum(30, 5) == elt(30, {0, 6, 12, 18, 24}));
    CHECK(subgroup_sum(12, 1) == CyclicRingElt::monomial(12, 0));
    CHECK(subgroup_sum_star(30, 5) == elt(30, {6, 12, 18, 24}));
    CHECK_THROWS_AS(subgroup_sum(10, 3), std::invalid_argument);
    CHECK_THROWS_AS(subgroup_sum(0, 1), std::invalid_argument);
}

TEST_CASE("multiply") {
    CHECK(multiply(subgroup_sum(10, 2), subgroup_sum(10, 2)) == subgroup_sum(10, 2).scaled(2));
    CHECK(multiply(CyclicRingElt::monomial(10, 1), CyclicRingElt::monomial(10, 9)) == CyclicRingElt::monomial(10, 0));
    CHECK(multiply(elt(10, {0, 5}), elt(10, {0, 1, 2, 3, 4})) == subgroup_sum(10, 10));
    CHECK_THROWS_AS(multiply(CyclicRingElt::zero(10), CyclicRingElt::zero(5)), std::invalid_argument);

    const CyclicRingElt big(4, {Coeff{1} << 40, 0, 0, 0});
    CHECK_THROWS_AS(multiply(big, big), std::overflow_error);
}

TEST_CASE("conj_inverse and galois_twist") {
    CHECK(conj_inverse(CyclicRingElt::monomial(10, 1)) == CyclicRingElt::monomial(10, 9));
    CHECK(conj_inverse(subgroup_sum(30, 5)) == subgroup_sum(30, 5));
    const CyclicRingElt d(6, {2, 0, 0, 1, 0, 0});
    CHECK(conj_inverse(d) == d);

    CHECK(galois_twist(subgroup_sum(30, 5), 7) == subgroup_sum(30, 5));
    CHECK(galois_twist(CyclicRingElt::monomial(10, 1), 3) == CyclicRingElt::monomial(10, 3));
    CHECK(galois_twist(elt(5, {0, 2}), 2) == elt(5, {0, 4}));
    CHECK_THROWS_AS(galois_twist(elt(10, {1}), 5), std::invalid_argument);
}

TEST_CASE("character_value_is_zero") {
    CHECK(character_value_is_zero(subgroup_sum(5, 5), CharacterSpec(5, 5)));
    CHECK_FALSE(character_value_is_zero(elt(5, {0, 1}), CharacterSpec(5, 5)));
    CHECK(character_value_is_zero(elt(10, {0, 5}), CharacterSpec(10, 10)));
    CHECK_FALSE(character_value_is_zero(CyclicRingElt::zero(7).scaled(3) + elt(7, {0}), CharacterSpec(7, 7)));
    CHECK(character_value_is_zero(CyclicRingElt::zero(7), CharacterSpec(7, 7)));
    // order-2 character on C_10: g -> -1
    CHECK(character_value_is_zero(elt(10, {0, 1}), CharacterSpec(10, 2)));
    CHECK_THROWS_AS(CharacterSpec(10, 3), std::invalid_argument);
    CHECK_THROWS_AS(CharacterSpec(10, 10, 5), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(5) == IntPoly{1, 1, 1, 1, 1});
    CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
    CHECK(cyclotomic(30) == IntPoly{1, 1, 0, -1, -1, -1, 0, 1, 1});
    // Phi_105 is the first with a coefficient of absolute value 2
    const auto& p105 = cyclotomic(105);
    CHECK(p105.size() == 49);
    CHECK(p105[7] == -2);
    // product over d | m of Phi_d is x^m - 1
    for (std::int64_t m = 1; m <= 60; ++m) {
        IntPoly prod{1};
        for (std::int64_t d = 1; d <= m; ++d) {
            if (m % d) continue;
            const auto& c = cyclotomic(d);
            IntPoly next(prod.size() + c.size() - 1, 0);
            for (std::size_t i = 0; i < prod.size(); ++i)
                for (std::size_t j = 0; j < c.size(); ++j) next[i + j] += prod[i] * c[j];
            prod = next;
        }
        IntPoly expect(static_cast<std::size_t>(m) + 1, 0);
        expect[0] = -1;
        expect.back() = 1;
        CHECK(prod == expect);
    }
}

TEST_CASE("poly helpers") {
    CHECK(poly_mod_monic({1, 0, 0, 0, 0, 1}, cyclotomic(5)) == IntPoly{2});
    CHECK(poly_mod_monic({0, 0, 0, 0, 1}, cyclotomic(5)) == IntPoly{-1, -1, -1, -1});
    CHECK(poly_mod_monic({1, 1, 1, 1, 1}, cyclotomic(5)).empty());
    CHECK(poly_div_exact({-1, 0, 0, 1}, {-1, 1}) == IntPoly{1, 1, 1});
    CHECK_THROWS(poly_div_exact({1, 0, 1}, {-1, 1}));
}

TEST_CASE("psi_projection") {
    CHECK(psi_projection(subgroup_sum(10, 2)) == 0);
    CHECK(psi_projection(subgroup_sum(30, 3)) == 3);
    const auto g2 = CyclicRingElt::monomial(42, 21);
    CHECK(psi_projection(subgroup_sum_star(42, 7) + multiply(g2, subgroup_sum_star(42, 3))) == 4);
    CHECK_THROWS_AS(psi_projection(subgroup_sum(15, 3)), std::invalid_argument);
}

TEST_CASE("natural_projection") {
    CHECK(natural_projection(subgroup_sum(30, 5), 6) == CyclicRingElt::monomial(6, 0, 5));
    CHECK(natural_projection(subgroup_sum(10, 2), 5) == CyclicRingElt::monomial(5, 0, 2));
    const CyclicRingElt d(12, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
    CHECK(natural_projection(d, 12) == d);
    CHECK_THROWS_AS(natural_projection(d, 5), std::invalid_argument);
}

TEST_CASE("property: zero test agrees with floating evaluation") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 400; ++iter) {
        const std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, 60)(rng);
        // random sums of shifted subgroup cosets vanish at many orders
        CyclicRingElt d = CyclicRingElt::zero(m);
        for (int k = 0; k < 3; ++k) {
            const auto fac = factorize(m);
            if (fac.factors.empty()) break;
            const auto p = fac.factors[std::uniform_int_distribution<std::size_t>(0, fac.factors.size() - 1)(rng)].prime;
            d = d + multiply(subgroup_sum(m, p), CyclicRingElt::monomial(m, static_cast<std::int64_t>(rng() % 97)));
        }
        if (iter % 2) d = d + random_elt(rng, m, -1, 1);
        for (std::int64_t dd = 1; dd <= m; ++dd) {
            if (m % dd) continue;
            const bool exact = character_value_is_zero(d, CharacterSpec(m, dd));
            CHECK(exact == oracle::vanishes(d.coeff_vector(), dd));
        }
    }
}

TEST_CASE("property: zero test is Galois invariant") {
    std::mt19937_64 rng(12);
    for (int iter = 0; iter < 200; ++iter) {
        const std::int64_t m = std::uniform_int_distribution<std::int64_t>(2, 42)(rng);
        auto d = random_elt(rng, m, 0, 2);
        if (iter % 3 == 0) d = subgroup_sum(m, factorize(m).factors.front().prime);
        for (std::int64_t dd = 1; dd <= m; ++dd) {
            if (m % dd) continue;
            const bool base = character_value_is_zero(d, CharacterSpec(m, dd));
            for (std::int64_t t = 1; t < dd; ++t)
                if (std::gcd(t, dd) == 1) CHECK(character_value_is_zero(d, CharacterSpec(m, dd, t)) == base);
        }
    }
}

TEST_CASE("property: Fourier inversion and orthogonality") {
    std::mt19937_64 rng(13);
    for (std::int64_t m : {1, 2, 7, 12, 30, 45, 60}) {
        const auto d = random_elt(rng, m, -5, 5);
        std::vector<std::complex<double>> values(static_cast<std::size_t>(m));
        // characters of C_m: g -> zeta_m^t for t = 0 .. m - 1
        for (std::int64_t t = 0; t < m; ++t) {
            const std::int64_t g = std::gcd(t, m);
            const std::int64_t order = m / g;
            values[static_cast<std::size_t>(t)] = character_value(d, CharacterSpec(m, order, t / g));
        }
        for (std::int64_t i = 0; i < m; ++i) {
            std::complex<double> s = 0;
            for (std::int64_t t = 0; t < m; ++t) s += values[static_cast<std::size_t>(t)] * oracle::root(-i * t % m + m, m);
            s /= static_cast<double>(m);
            CHECK(std::abs(s.real() - static_cast<double>(d[i])) < 1e-6);
            CHECK(std::abs(s.imag()) < 1e-6);
        }
        for (std::int64_t i = 0; i < m; ++i) {
            std::complex<double> s = 0;
            for (std::int64_t t = 0; t < m; ++t) {
                const std::int64_t g = std::gcd(t, m);
                s += character_value(CyclicRingElt::monomial(m, i), CharacterSpec(m, m / g, t / g));
            }
            CHECK(std::abs(s - std::complex<double>(i == 0 ? static_cast<double>(m) : 0.0, 0.0)) < 1e-6);
        }
    }
}

TEST_CASE("property: involutions, ring laws, norm bound") {
    std::mt19937_64 rng(14);
    for (int iter = 0; iter < 300; ++iter) {
        const std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, 40)(rng);
        const auto a = random_elt(rng, m, -3, 3);
        const auto b = random_elt(rng, m, -3, 3);
        const auto c = random_elt(rng, m, -3, 3);
        CHECK(conj_inverse(conj_inverse(a)) == a);
        for (std::int64_t t = 1; t < m; ++t) {
            if (std::gcd(t, m) != 1) continue;
            std::int64_t inv = 1;
            while ((inv * t) % m != 1) ++inv;
            CHECK(galois_twist(galois_twist(a, t), inv) == a);
            break;
        }
        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(multiply(a, b + c) == multiply(a, b) + multiply(a, c));
        CHECK(multiply(a, b).norm() <= a.norm() * b.norm());
        if (m % 2 == 0) CHECK(psi_projection(multiply(a, b)) == psi_projection(a) * psi_projection(b));
        for (std::int64_t d = 1; d <= m; ++d)
            if (m % d == 0)
                CHECK(natural_projection(multiply(a, b), d) ==
                      multiply(natural_projection(a, d), natural_projection(b, d)));
    }
}

TEST_CASE("element basics") {
    const CyclicRingElt d(6, {1, -2, 0, 3, 0, 0});
    CHECK(d.norm() == 6);
    CHECK(d.mass() == 2);
    CHECK(d.support() == std::vector<std::int64_t>{0, 1, 3});
    CHECK_FALSE(d.is_nonnegative());
    CHECK(d.shifted(3) == CyclicRingElt(6, {3, 0, 0, 1, -2, 0}));
    CHECK(CyclicRingElt::monomial(6, -1) == CyclicRingElt::monomial(6, 5));
    CHECK((d - d).is_zero());
    CHECK_THROWS_AS(CyclicRingElt(6, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(CyclicRingElt(0), std::invalid_argument);
}

TEST_CASE("CyclotomicResidues rows reduce monomials") {
    const CyclotomicResidues r(30, 15);
    CHECK(r.degree() == 8);
    for (std::int64_t i = 0; i < 30; ++i) {
        IntPoly mono((i % 15) + 1, 0);
        mono.back() = 1;
        const auto expect = poly_mod_monic(mono, cyclotomic(15));
        const auto row = r.row(i);
        for (std::size_t t = 0; t < 8; ++t) CHECK(row[t] == (t < expect.size() ? expect[t] : 0));
    }
}
