#include "doctest.h"
#include "support.hpp"

#include "qtorus/error.hpp"

#include <numeric>

using namespace qtorus;
using namespace qtorus::testing;

TEST_SUITE("scalars") {

TEST_CASE("roots of unity") {
    CHECK(Cyclotomic::root_of_unity(2, 1) == Cyclotomic(-1L));
    CHECK(Cyclotomic::root_of_unity(6, 6).is_one());
    CHECK((Cyclotomic::root_of_unity(4, 1) * Cyclotomic::root_of_unity(4, 3)).is_one());
    CHECK(arith(ArithKind::mul, Cyclotomic::root_of_unity(4, 1), Cyclotomic::root_of_unity(4, 3)).is_one());
    CHECK_THROWS_AS(Cyclotomic::root_of_unity(0, 1), Error);
    try {
        Cyclotomic::root_of_unity(0, 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_conductor);
    }
}

TEST_CASE("field arithmetic examples") {
    const Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
    CHECK(arith(ArithKind::add, z3, z3 * z3) == Cyclotomic(-1L));
    CHECK(arith(ArithKind::mul, z3, Cyclotomic(1L)) == z3);
    const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    const Cyclotomic expected = (Cyclotomic(1L) - i) * Cyclotomic(Rational(1, 2));
    CHECK(arith(ArithKind::inv, Cyclotomic(1L) + i) == expected);
    CHECK(arith(ArithKind::neg, i) == -i);
    CHECK_THROWS_AS(arith(ArithKind::inv, Cyclotomic()), Error);
}

TEST_CASE("canonical residue matches Phi_M") {
    // 1 + z + ... + z^{p-1} = 0 for prime p, and z^{M/2} = -1 for even M.
    for (std::int64_t p : {2, 3, 5, 7}) {
        Cyclotomic s;
        for (std::int64_t k = 0; k < p; ++k)
            s += Cyclotomic::root_of_unity(p, k);
        CHECK(s.is_zero());
    }
    for (std::int64_t m : {4, 6, 8, 12})
        CHECK(Cyclotomic::root_of_unity(m, m / 2) == Cyclotomic(-1L));
    CHECK(Cyclotomic::root_of_unity(12, 4) == Cyclotomic::root_of_unity(3, 1));
    CHECK(Cyclotomic::root_of_unity(12, 4).conductor() == 3);
}

TEST_CASE("order") {
    CHECK(order(Cyclotomic(-1L)) == 2);
    CHECK(order(Cyclotomic::root_of_unity(6, 2)) == 3);
    CHECK_THROWS_AS(order(Cyclotomic(2L)), Error);
    CHECK_THROWS_AS(order(Cyclotomic::root_of_unity(5, 1) + Cyclotomic(1L)), Error);
    for (std::int64_t m = 1; m <= 24; ++m)
        for (std::int64_t k = -m; k <= m; ++k)
            CHECK(order(Cyclotomic::root_of_unity(m, k)) == m / std::gcd(m, k < 0 ? -k : k));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t ms[] = {3, 4, 5, 6, 8, 12};
        const Cyclotomic a = random_scalar(rng, ms[trial % 6]);
        const Cyclotomic b = random_scalar(rng, ms[(trial + 1) % 6]);
        const Cyclotomic c = random_scalar(rng, ms[(trial + 3) % 6]);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero())
            CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("promotion is a ring embedding") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const Cyclotomic a = random_scalar(rng, 6);
        const Cyclotomic b = random_scalar(rng, 6);
        CHECK((a + b).promote(24) == a.promote(24) + b.promote(24));
        CHECK((a * b).promote(24) == a.promote(24) * b.promote(24));
        CHECK(a.promote(24) == a);
    }
}

TEST_CASE("nth roots") {
    const Cyclotomic minus_one(-1L);
    const auto roots = nth_roots(minus_one, 2);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots)
        CHECK(r * r == minus_one);
    for (std::int64_t n : {2, 3, 4, 6})
        for (const auto& r : nth_roots(Cyclotomic::root_of_unity(3, 1), n))
            CHECK(r.pow(n) == Cyclotomic::root_of_unity(3, 1));
    CHECK(field_contains_root(3, 6));
    CHECK_FALSE(field_contains_root(3, 4));
}

TEST_CASE("printing") {
    CHECK(Cyclotomic(-1L).to_string() == "-1");
    CHECK((Cyclotomic(1L) + Cyclotomic::root_of_unity(4, 1)).inverse().to_string() == "1/2 - 1/2*z4");
}

}
