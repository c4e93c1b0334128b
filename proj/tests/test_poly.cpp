#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "ccodes/poly.hpp"

using namespace ccodes;

namespace {

Poly random_poly(const Field& F, std::int64_t max_deg, std::mt19937_64& rng) {
    std::int64_t d = static_cast<std::int64_t>(rng() % (max_deg + 1));
    std::vector<FieldElem> cs;
    for (std::int64_t i = 0; i <= d; ++i)
        cs.push_back(F.elem_at(static_cast<std::int64_t>(rng() % F.q())));
    return Poly::from_coeffs(F, std::move(cs));
}

// Independent irreducibility oracle: trial division by every monic polynomial
// of degree 1..deg/2. Only usable at tiny scale.
bool is_irreducible_naive(const Poly& f) {
    const Field& F = f.field();
    std::int64_t d = f.degree();
    if (d <= 0) return false;
    for (std::int64_t dg = 1; 2 * dg <= d; ++dg) {
        std::int64_t count = 1;
        for (std::int64_t i = 0; i < dg; ++i) count *= F.q();
        for (std::int64_t k = 0; k < count; ++k) {
            std::vector<FieldElem> cs;
            std::int64_t t = k;
            for (std::int64_t i = 0; i < dg; ++i) {
                cs.push_back(F.elem_at(t % F.q()));
                t /= F.q();
            }
            cs.push_back(F.one());
            Poly g = Poly::from_coeffs(F, std::move(cs));
            if ((f % g).is_zero()) return false;
        }
    }
    return true;
}

std::vector<Field> test_fields() {
    return {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2),
            Field::make(5, 1), Field::make(7, 1), Field::make(3, 2)};
}

}  // namespace

TEST_CASE("arithmetic examples") {
    auto f3 = Field::make(3, 1);
    auto a = Poly::from_ints(f3, {1, 1});  // x + 1
    auto b = Poly::from_ints(f3, {2, 1});  // x + 2
    CHECK(a * b == Poly::from_ints(f3, {2, 0, 1}));  // x^2 + 2

    auto [q1, r1] = divmod(Poly::from_ints(f3, {-1, 0, 1}), Poly::from_ints(f3, {-1, 1}));
    CHECK(q1 == Poly::from_ints(f3, {1, 1}));
    CHECK(r1.is_zero());

    auto f2 = Field::make(2, 1);
    auto [q2, r2] = divmod(Poly::from_ints(f2, {0, 0, 0, 1}), Poly::from_ints(f2, {1, 0, 1}));
    CHECK(q2 == Poly::x(f2));
    CHECK(r2 == Poly::x(f2));

    CHECK_THROWS_AS(divmod(a, Poly::zero(f3)), DivisionByZero);
    CHECK_THROWS_AS(a + Poly::one(Field::make(2, 1)), FieldMismatch);
}

TEST_CASE("divmod round-trip randomized") {
    std::mt19937_64 rng(7);
    for (const auto& F : test_fields()) {
        for (int it = 0; it < 60; ++it) {
            Poly a = random_poly(F, 12, rng);
            Poly b = random_poly(F, 8, rng);
            if (b.is_zero()) continue;
            auto [q, r] = divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
}

TEST_CASE("xgcd examples and identity") {
    auto f2 = Field::make(2, 1);
    auto a = Poly::from_ints(f2, {1, 1});        // x + 1
    auto b = Poly::from_ints(f2, {1, 1, 1});     // x^2 + x + 1
    auto res = xgcd(a, b);
    CHECK(res.g.is_one());
    CHECK(res.s == Poly::x(f2));
    CHECK(res.t == Poly::one(f2));

    auto f3 = Field::make(3, 1);
    auto res2 = xgcd(Poly::from_ints(f3, {-1, 1}), Poly::from_ints(f3, {1, 1}));
    CHECK(res2.g.is_one());

    auto f = Poly::from_ints(f3, {2, 0, 2});
    auto self = xgcd(f, f);
    CHECK(self.g == f.monic());

    CHECK_THROWS_AS(xgcd(Poly::zero(f3), Poly::zero(f3)), BothZero);
}

TEST_CASE("xgcd randomized: identity and reduced degrees") {
    std::mt19937_64 rng(11);
    for (const auto& F : test_fields()) {
        for (int it = 0; it < 60; ++it) {
            Poly a = random_poly(F, 10, rng);
            Poly b = random_poly(F, 10, rng);
            if (a.is_zero() && b.is_zero()) continue;
            auto res = xgcd(a, b);
            CHECK(res.s * a + res.t * b == res.g);
            CHECK(res.g.is_monic());
            if (res.g.is_one() && a.degree() >= 1 && b.degree() >= 1) {
                CHECK(res.s.degree() < b.degree());
                CHECK(res.t.degree() < a.degree());
            }
        }
    }
}

TEST_CASE("factorize examples") {
    auto f2 = Field::make(2, 1);
    auto fact = factorize(Poly::from_ints(f2, {1, 0, 0, 1}));  // x^3 - 1 = x^3 + 1
    REQUIRE(fact.factors.size() == 2);
    CHECK(fact.factors[0].first == Poly::from_ints(f2, {1, 1}));
    CHECK(fact.factors[0].second == 1);
    CHECK(fact.factors[1].first == Poly::from_ints(f2, {1, 1, 1}));
    CHECK(fact.factors[1].second == 1);

    auto f3 = Field::make(3, 1);
    auto fact2 = factorize(Poly::from_ints(f3, {-1, 0, 1}));  // x^2 - 1
    REQUIRE(fact2.factors.size() == 2);
    CHECK(fact2.factors[0].first == Poly::from_ints(f3, {1, 1}));
    CHECK(fact2.factors[1].first == Poly::from_ints(f3, {2, 1}));

    auto f5 = Field::make(5, 1);
    auto quartic = Poly::from_ints(f5, {-2, 0, 0, 0, 1});  // x^4 - 2
    auto fact3 = factorize(quartic);
    REQUIRE(fact3.factors.size() == 1);
    CHECK(fact3.factors[0].second == 1);
    CHECK(is_irreducible_naive(quartic));

    // Repeated factors are reported with multiplicities.
    auto sq = Poly::from_ints(f3, {1, 1}) * Poly::from_ints(f3, {1, 1}) *
              Poly::from_ints(f3, {2, 1});
    auto fact4 = factorize(sq);
    REQUIRE(fact4.factors.size() == 2);
    CHECK(fact4.factors[0].second + fact4.factors[1].second == 3);

    CHECK_THROWS_AS(factorize(Poly::zero(f3)), ZeroPolynomial);
}

TEST_CASE("factorize randomized: re-expansion and irreducibility of parts") {
    std::mt19937_64 rng(13);
    for (const auto& F : test_fields()) {
        for (int it = 0; it < 25; ++it) {
            Poly f = random_poly(F, 24, rng);
            if (f.is_zero()) continue;
            auto fact = factorize(f);
            CHECK(fact.expand() == f);  // factorize also self-checks this
            for (const auto& [g, mult] : fact.factors) {
                CHECK(g.is_monic());
                CHECK(mult >= 1);
                if (g.degree() <= 4) CHECK(is_irreducible_naive(g));
            }
        }
    }
}

TEST_CASE("factorize is deterministic across seeds") {
    auto f9 = Field::make(3, 2);
    std::mt19937_64 rng(17);
    for (int it = 0; it < 10; ++it) {
        Poly f = random_poly(f9, 12, rng);
        if (f.is_zero()) continue;
        auto a = factorize(f, 1);
        auto b = factorize(f, 999);
        REQUIRE(a.factors.size() == b.factors.size());
        for (std::size_t i = 0; i < a.factors.size(); ++i) {
            CHECK(a.factors[i].first == b.factors[i].first);
            CHECK(a.factors[i].second == b.factors[i].second);
        }
    }
}

TEST_CASE("binomial irreducibility examples") {
    auto f3 = Field::make(3, 1);
    CHECK_FALSE(binomial_irreducible(2, f3.from_int(1)));
    CHECK(binomial_irreducible(2, f3.from_int(2)));
    auto f5 = Field::make(5, 1);
    CHECK(binomial_irreducible(4, f5.from_int(2)));
    CHECK_THROWS_AS(binomial_irreducible(2, f3.zero()), ZeroElement);
}

TEST_CASE("binomial criterion agrees with factorization (spot fields)") {
    for (const auto& F : {Field::make(2, 1), Field::make(3, 1), Field::make(5, 1)}) {
        for (std::int64_t n = 2; n <= 8; ++n) {
            if (n % F.p() == 0) continue;
            for (std::int64_t i = 1; i < F.q(); ++i) {
                auto a = F.elem_at(i);
                Poly f = Poly::monomial(F, n, F.one()) - Poly::from_coeffs(F, {a});
                auto fact = factorize(f);
                bool irr = fact.factors.size() == 1 && fact.factors[0].second == 1;
                CHECK(binomial_irreducible(n, a) == irr);
            }
        }
    }
}

TEST_CASE("reciprocal examples and properties") {
    auto f3 = Field::make(3, 1);
    CHECK(reciprocal(Poly::from_ints(f3, {2, 1})) == Poly::from_ints(f3, {1, 2}));
    CHECK(reciprocal(Poly::from_ints(f3, {1, 2, 0, 1})) == Poly::from_ints(f3, {1, 0, 2, 1}));
    auto f2 = Field::make(2, 1);
    auto pal = Poly::from_ints(f2, {1, 1, 1});
    CHECK(reciprocal(pal) == pal);
    CHECK_THROWS_AS(reciprocal(Poly::zero(f2)), ZeroPolynomial);

    std::mt19937_64 rng(19);
    for (const auto& F : test_fields()) {
        for (int it = 0; it < 40; ++it) {
            Poly f = random_poly(F, 8, rng);
            Poly g = random_poly(F, 8, rng);
            if (f.is_zero() || g.is_zero()) continue;
            CHECK(reciprocal(f * g) == reciprocal(f) * reciprocal(g));
            if (!f.constant_term().is_zero()) CHECK(reciprocal(reciprocal(f)) == f);
        }
    }
}

TEST_CASE("monic normalized reciprocal") {
    auto f3 = Field::make(3, 1);
    CHECK(monic_normalized_reciprocal(Poly::from_ints(f3, {2, 1})) ==
          Poly::from_ints(f3, {2, 1}));
    CHECK(monic_normalized_reciprocal(Poly::from_ints(f3, {-1, 1})) ==
          Poly::from_ints(f3, {-1, 1}));
    auto f2 = Field::make(2, 1);
    auto pal = Poly::from_ints(f2, {1, 1, 1});
    CHECK(monic_normalized_reciprocal(pal) == pal);
    CHECK_THROWS_AS(monic_normalized_reciprocal(Poly::x(f2)), ZeroConstantTerm);

    // Monic factors of x^n - c map to monic factors of x^n - 1/c.
    auto f7 = Field::make(7, 1);
    auto c = f7.from_int(3);
    Poly f = Poly::monomial(f7, 6, f7.one()) - Poly::from_coeffs(f7, {c});
    Poly finv = Poly::monomial(f7, 6, f7.one()) - Poly::from_coeffs(f7, {c.inv()});
    for (const auto& [g, mult] : factorize(f).factors) {
        auto gr = monic_normalized_reciprocal(g);
        CHECK(gr.is_monic());
        CHECK((finv % gr).is_zero());
    }
}

TEST_CASE("factorize recovers prescribed multiplicities, p-divisible included") {
    std::mt19937_64 rng(43);
    for (const auto& F : test_fields()) {
        // All monic irreducibles of degree <= 2, found naively.
        std::vector<Poly> irred;
        for (std::int64_t d = 1; d <= 2; ++d) {
            std::int64_t count = 1;
            for (std::int64_t i = 0; i < d; ++i) count *= F.q();
            for (std::int64_t k = 0; k < count; ++k) {
                std::vector<FieldElem> cs;
                std::int64_t t = k;
                for (std::int64_t i = 0; i < d; ++i) {
                    cs.push_back(F.elem_at(t % F.q()));
                    t /= F.q();
                }
                cs.push_back(F.one());
                Poly g = Poly::from_coeffs(F, std::move(cs));
                if (is_irreducible_naive(g)) irred.push_back(g);
            }
        }
        const int p = static_cast<int>(F.p());
        for (int it = 0; it < 20; ++it) {
            // Distinct irreducibles with multiplicities that exercise the
            // p-th-power path: include p and 2p alongside small values.
            std::vector<int> mult_pool{1, 2, 3, p, 2 * p, p + 1};
            std::map<Poly, int> expected;
            Poly prod = Poly::one(F);
            std::size_t nfac = 1 + rng() % 3;
            for (std::size_t i = 0; i < nfac && i < irred.size(); ++i) {
                const Poly& g = irred[rng() % irred.size()];
                if (expected.count(g)) continue;
                int mult = mult_pool[rng() % mult_pool.size()];
                expected[g] = mult;
                prod *= pow(g, mult);
            }
            auto scale = F.elem_at(1 + rng() % (F.q() - 1));
            prod = prod.scaled(scale);
            auto fact = factorize(prod);
            CHECK(fact.unit == scale);
            REQUIRE(fact.factors.size() == expected.size());
            for (const auto& [g, mult] : fact.factors) {
                REQUIRE(expected.count(g) == 1);
                CHECK(expected[g] == mult);
            }
        }
    }
}
