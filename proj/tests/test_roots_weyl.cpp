#include "doctest.h"
#include "support.hpp"

#include "qtorus/error.hpp"
#include "qtorus/roots_weyl.hpp"

using namespace qtorus;
using namespace qtorus::testing;

namespace {

Weight random_weight(std::mt19937_64& rng, std::size_t d, std::size_t n) {
    std::uniform_int_distribution<long> dist(-4, 4);
    Weight w = Weight::zero(d, n);
    for (auto& x : w.finite) {
        x = Rational(dist(rng), 2);
        x.canonicalize();
    }
    for (auto& x : w.delta)
        x = dist(rng);
    for (auto& x : w.omega)
        x = dist(rng);
    return w;
}

Root random_real_root(std::mt19937_64& rng, std::size_t d, std::size_t n) {
    std::uniform_int_distribution<std::size_t> idx(0, d - 1);
    std::size_t i = idx(rng), j = idx(rng);
    while (j == i)
        j = idx(rng);
    return Root::real(i, j, random_degree(rng, n, 3));
}

} // namespace

TEST_SUITE("roots_weyl") {

TEST_CASE("bilinear form") {
    CHECK(inner(Weight::delta_j(2, 2, 0), Weight::omega_j(2, 2, 0)) == 1);
    CHECK(inner(Weight::delta_j(2, 2, 0), Weight::omega_j(2, 2, 1)) == 0);
    CHECK(inner(Weight::simple_root(2, 2, 0), Weight::simple_root(2, 2, 0)) == 2);
    CHECK(inner(Weight::simple_root(3, 2, 0), Weight::simple_root(3, 2, 1)) == -1);
    CHECK(inner(Weight::delta_j(2, 2, 0), Weight::delta_j(2, 2, 1)) == 0);
    CHECK(inner(Weight::omega_j(2, 2, 0), Weight::omega_j(2, 2, 0)) == 0);
    CHECK_THROWS_AS(inner(Weight::zero(2, 2), Weight::zero(3, 2)), Error);
    std::mt19937_64 rng(31);
    for (int k = 0; k < 20; ++k)
        CHECK(inner(Weight::null_root(3, 2, random_degree(rng, 2, 5)),
                    Weight::null_root(3, 2, random_degree(rng, 2, 5))) == 0);
}

TEST_CASE("coroot evaluation") {
    const Root a1 = Root::real(0, 1, {0, 0});
    CHECK(coroot_eval(Weight::simple_root(2, 2, 0), a1) == 2);
    CHECK(coroot_eval(Weight::omega_j(2, 2, 0), Root::real(0, 1, {1, 0})) == 1);
    CHECK(coroot_eval(Weight::delta_j(2, 2, 0), Root::real(0, 1, {3, -1})) == 0);
    CHECK_THROWS_AS(coroot_eval(Weight::zero(2, 2), Root::null({1, 0})), Error);
    std::mt19937_64 rng(32);
    for (int k = 0; k < 50; ++k) {
        const Root g = random_real_root(rng, 4, 2);
        CHECK(coroot_eval(g.as_weight(4, 2), g) == 2);
    }
}

TEST_CASE("reflections") {
    const Root a1 = Root::real(0, 1, {0, 0});
    CHECK(reflect(Weight::simple_root(2, 2, 0), a1) == Rational(-1) * Weight::simple_root(2, 2, 0));
    CHECK(reflect(Weight::delta_j(2, 2, 0), a1) == Weight::delta_j(2, 2, 0));
    const Root g = Root::real(0, 1, {1, 0});
    CHECK(reflect(Weight::omega_j(2, 2, 0), g) == Weight::omega_j(2, 2, 0) - g.as_weight(2, 2));
    CHECK_THROWS_AS(reflect(Weight::zero(2, 2), Root::null({0, 1})), Error);

    std::mt19937_64 rng(33);
    for (int k = 0; k < 100; ++k) {
        const std::size_t d = 2 + k % 3;
        const Weight l = random_weight(rng, d, 2), m = random_weight(rng, d, 2);
        const Root g = random_real_root(rng, d, 2);
        CHECK(reflect(reflect(l, g), g) == l);
        CHECK(inner(reflect(l, g), reflect(m, g)) == inner(l, m));
    }
}

TEST_CASE("translations") {
    const Weight a1 = Weight::simple_root(2, 2, 0);
    CHECK(translate(a1, 0) == a1 - Rational(2) * Weight::delta_j(2, 2, 0));
    CHECK(translate(Weight::delta_j(2, 2, 1), 1) == Weight::delta_j(2, 2, 1));
    Weight mu = Weight::delta_j(2, 2, 0) + Weight::omega_j(2, 2, 1);
    CHECK(translate(mu, 0) == mu);
    CHECK_THROWS_AS(translate(mu, 1), Error);
    std::mt19937_64 rng(34);
    for (int k = 0; k < 50; ++k) {
        Weight w = random_weight(rng, 3, 2);
        w.omega = {Rational(0), Rational(0)};
        CHECK(translate(translate(w, 0), 1) == translate(translate(w, 1), 0));
    }
}

TEST_CASE("dominant integral weights") {
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(is_dominant_integral(Weight::fundamental(3, 1, i)));
    CHECK_FALSE(is_dominant_integral(Rational(-1) * Weight::simple_root(3, 1, 0)));
    CHECK_FALSE(is_dominant_integral(Weight::from_coroot_values(1, {Rational(1, 2), Rational(0)})));
    const Weight w = Weight::fundamental(3, 1, 0);
    CHECK(simple_coroot_value(w, 0) == 1);
    CHECK(simple_coroot_value(w, 1) == 0);
    CHECK(w.finite == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
}

TEST_CASE("finite Weyl orbit") {
    // The finite Weyl group of sl_3 has order 6; the orbit of rho has 6 points.
    std::vector<Root> gens{Root::real(0, 1, {0}), Root::real(1, 2, {0})};
    const Weight rho = Weight::fundamental(3, 1, 0) + Weight::fundamental(3, 1, 1);
    CHECK(weyl_orbit(rho, gens, 10, 100).size() == 6);
    CHECK(weyl_orbit(Weight::fundamental(3, 1, 0), gens, 10, 100).size() == 3);
    CHECK(weyl_orbit(rho, gens, 10, 4).size() == 4);
    CHECK(real_roots(3, 1, 1).size() == 18);
}

}
