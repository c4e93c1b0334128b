#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ccodes/oracle.hpp"

using namespace ccodes;

TEST_CASE("R itself has exactly the ideals 0, <u>, <1>") {
    auto F = Field::make(2, 1);
    TinyRing ring(F, 1, RElem::one(F));
    CHECK(ring.size() == 4);
    auto ideals = enumerate_ideals(ring);
    REQUIRE(ideals.size() == 3);
    CHECK(ideals[0].log_size == 0);
    CHECK(ideals[1].log_size == 1);  // <u>
    CHECK(ideals[2].log_size == 2);  // everything
    // <u> is literally {0, u}.
    auto span = fplin::span_enumerate(ideals[1].basis, 10);
    REQUIRE(span.size() == 2);
    CHECK(span[0] == fplin::Row{0, 0});
    CHECK(span[1] == fplin::Row{0, 1});
    // Element decoding: index 1 is 1, index 2 is u.
    CHECK(ring.element(1).is_one());
    CHECK(ring.element(2) == RPoly::monomial(F, 0, RElem::u(F)));
}

TEST_CASE("ideal counts match the classification") {
    auto F3 = Field::make(3, 1);
    TinyRing r1(F3, 3, RElem(F3.from_int(2), F3.from_int(1)));  // n=1, s=1: N=3
    CHECK(r1.size() == 729);
    CHECK(enumerate_ideals(r1).size() == 7);

    auto F2 = Field::make(2, 1);
    TinyRing r2(F2, 6, RElem(F2.one(), F2.one()));  // n=3, s=1: N=6
    CHECK(r2.size() == 4096);
    CHECK(enumerate_ideals(r2).size() == 25);

    CHECK_THROWS_AS(TinyRing(F3, 20, RElem::one(F3)), TooLarge);
}

TEST_CASE("brute dual trivia and involution") {
    auto F = Field::make(2, 1);
    auto R = build_ambient(F, 1, 1, F.one(), F.one());  // N = 2, 16 elements
    auto codes = enumerate_codes(R);
    auto everything = members(codes.front(), 1000);
    auto zero = members(codes.back(), 1000);
    CHECK(brute_dual(zero) == everything);
    CHECK(brute_dual(everything) == zero);

    // <u> is its own dual in length np^s.
    CodeSpec u_code{R, {R.ps()}};
    auto u_words = members(u_code, 1000);
    CHECK(brute_dual(u_words) == u_words);

    for (const auto& c : codes) {
        auto words = members(c, 1000);
        CHECK(brute_dual(brute_dual(words)) == words);
    }
}

TEST_CASE("brute dual output is closed under the inverse twist shift") {
    auto F = Field::make(3, 1);
    auto R = build_ambient(F, 1, 1, F.from_int(2), F.from_int(1));
    WordOps inv_ops(F, R.length(), r_inverse(R.lambda()));
    for (const auto& c : enumerate_codes(R)) {
        auto comp = brute_dual(members(c, 100000));
        auto basis = fplin::rref(F.p(), inv_ops.ncols(), comp.words);
        for (const auto& row : basis.rows) CHECK(basis.contains(inv_ops.shift(row)));
    }
}

TEST_CASE("verify_ring passes on desk-scale rings") {
    auto F2 = Field::make(2, 1);
    auto F3 = Field::make(3, 1);
    auto F4 = Field::make(2, 2);
    for (const auto& R :
         {build_ambient(F2, 1, 1, F2.one(), F2.one()),
          build_ambient(F3, 1, 1, F3.from_int(2), F3.from_int(1)),
          build_ambient(F2, 1, 3, F2.one(), F2.one()),
          build_ambient(F4, 1, 1, F4.basis_elem(1), F4.element({1, 1}))}) {
        auto report = verify_ring(R);
        CHECK(report.ok);
        CHECK(report.ideal_count == report.expected_count);
        for (const auto& c : report.checks) {
            CAPTURE(c.name);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("verify_ring report serializes") {
    auto F = Field::make(2, 1);
    auto report = verify_ring(build_ambient(F, 1, 1, F.one(), F.one()));
    auto j = report.to_json();
    CHECK(j["ok"] == true);
    CHECK(j["checks"].is_array());
    CHECK(j["checks"].size() >= 5);
}

TEST_CASE("oracle respects the cap") {
    auto F = Field::make(3, 1);
    auto R = build_ambient(F, 1, 2, F.from_int(2), F.from_int(1));  // 3^12 elements
    CHECK_THROWS_AS(verify_ring(R, 1000), TooLarge);
}

TEST_CASE("full oracle on a reducible ring over F_3 (49 ideals)") {
    // x^2 - 1 = (x+1)(x+2) over F_3 with s = 1: the 3^12-element ambient ring.
    auto F = Field::make(3, 1);
    auto R = build_ambient(F, 1, 2, F.one(), F.one());
    REQUIRE_FALSE(R.irreducible_case());
    auto report = verify_ring(R);
    CHECK(report.ok);
    CHECK(report.ideal_count == 49);
}

TEST_CASE("ideal enumeration is independent of generator order") {
    auto F = Field::make(2, 1);
    TinyRing ring(F, 2, RElem(F.one(), F.one()));
    auto forward = enumerate_ideals(ring);
    // Re-run the closure over generators in reverse order; the canonical
    // deduplication must yield the identical sorted list.
    std::set<std::string> keys;
    for (std::int64_t idx = ring.size() - 1; idx >= 0; --idx)
        keys.insert(ring.ops().ideal_closure(ring.element_row(idx)).key());
    REQUIRE(static_cast<std::int64_t>(keys.size()) == static_cast<std::int64_t>(forward.size()));
    for (const auto& d : forward) CHECK(keys.count(d.basis.key()) == 1);
}
