#include "doctest.h"
#include "support.hpp"

#include "qtorus/error.hpp"
#include "qtorus/graded_modules.hpp"

#include <functional>

using namespace qtorus;
using namespace qtorus::testing;

namespace {

EvalPoints ones(std::size_t n) { return EvalPoints{std::vector<std::vector<Cyclotomic>>(n, {Cyclotomic(1L)})}; }

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::internal_inconsistency;
}

Vector unit_vector(std::size_t dim, std::size_t i) {
    Vector v(dim);
    v[i] = Cyclotomic(1L);
    return v;
}

Vector random_vector(std::mt19937_64& rng, std::size_t dim) {
    Vector v(dim);
    for (auto& c : v)
        c = Cyclotomic(static_cast<long>(rng() % 7) - 3);
    return v;
}

ToroidalElement random_element(std::mt19937_64& rng, const QMatrixPtr& q, std::size_t d) {
    ToroidalElement x(q, d);
    const std::size_t n = q->n();
    for (int t = 0; t < 3; ++t) {
        Matrix m(d, d);
        m(rng() % d, rng() % d) = Cyclotomic(static_cast<long>(rng() % 5) - 2);
        x.add_matrix(random_degree(rng, n, 2), m);
    }
    if (rng() % 2)
        x.add_derivation(rng() % n, Cyclotomic(static_cast<long>(rng() % 5) - 2));
    return x;
}

GradedVector random_graded(std::mt19937_64& rng, std::size_t dim, std::size_t n) {
    GradedVector v;
    for (int t = 0; t < 2; ++t)
        v[random_degree(rng, n, 1)] = random_vector(rng, dim);
    return v;
}

GradedVector minus(GradedVector a, const GradedVector& b) {
    for (const auto& [m, w] : b) {
        auto [it, fresh] = a.emplace(m, scaled(w, Cyclotomic(-1L)));
        if (!fresh)
            it->second = subtract(it->second, w);
    }
    std::erase_if(a, [](const auto& kv) { return is_zero(kv.second); });
    return a;
}

} // namespace

TEST_SUITE("graded_modules") {

TEST_CASE("representation specs") {
    const auto parts = parse_rep_spec("natural + adjoint:0+trivial");
    REQUIRE(parts.size() == 3);
    CHECK(parts[1].kind == RepPart::Kind::adjoint);
    CHECK(to_string(parts[0]) == "natural:0");
    CHECK(code_of([] { parse_rep_spec("spin"); }) == ErrorCode::invalid_argument);
    CHECK(code_of([] { parse_rep_spec("natural:x"); }) == ErrorCode::invalid_argument);
    const auto q = torus_t1();
    CHECK(code_of([&] { make_rep(q, 2, ones(2), "natural:1"); }) == ErrorCode::invalid_argument);
    CHECK(make_rep(q, 2, ones(2), "natural").dim() == 4);
    CHECK(make_rep(q, 2, ones(2), "adjoint").dim() == 15);
    CHECK(make_rep(q, 2, ones(2), "trivial+natural").dim() == 5);
    const EvalPoints two{{{Cyclotomic(1L), Cyclotomic(-1L)}, {Cyclotomic(1L)}}};
    CHECK(make_rep(q, 2, two, "tensor").dim() == 16);
}

TEST_CASE("module axiom on Vbar (x) A_n") {
    std::mt19937_64 rng(61);
    const EvalPoints two{{{Cyclotomic(1L), Cyclotomic(-1L)}, {Cyclotomic(1L)}}};
    const std::vector<std::pair<FinRep, int>> cases{
        {make_rep(torus_t1(), 2, ones(2), "natural+adjoint"), 20},
        {make_rep(torus_t1(), 2, two, "tensor+natural:1"), 20},
        {make_rep(torus_zeta3(), 2, ones(2), "natural"), 20},
    };
    std::size_t with_hc1 = 0;
    for (const auto& [rep, trials] : cases)
        for (int t = 0; t < trials; ++t) {
            const auto x = random_element(rng, rep.torus(), 2), y = random_element(rng, rep.torus(), 2);
            const auto v = random_graded(rng, rep.dim(), rep.torus()->n());
            const auto xy = bracket(x, y);
            if (!xy.hcpart().is_zero())
                ++with_hc1;
            const auto lhs = act(rep, xy, v);
            const auto rhs = minus(act(rep, x, act(rep, y, v)), act(rep, y, act(rep, x, v)));
            CHECK(lhs == rhs);
        }
    CHECK(with_hc1 > 0);
}

TEST_CASE("derivations read the grade, HC_1 acts as zero") {
    const auto q = torus_t1();
    const FinRep rep = make_rep(q, 2, ones(2), "natural");
    const Vector w = unit_vector(4, 1);
    const GradedVector v{{Degree{3, -2}, w}};
    const auto dv = act(rep, ToroidalElement::derivation(q, 2, 1), v);
    CHECK(dv == GradedVector{{Degree{3, -2}, scaled(w, Cyclotomic(-2L))}});
    CHECK(act(rep, ToroidalElement::central(q, 2, 0), v).empty());
    CHECK(code_of([&] { rep.act(ToroidalElement::derivation(q, 2, 0)); }) == ErrorCode::not_in_domain);
}

TEST_CASE("rho is trivial on I (x) Z(C_q)") {
    const auto q = torus_t1();
    const FinRep rep = make_rep(q, 2, ones(2), "natural+adjoint+tensor");
    for (const Degree& a : {Degree{2, 0}, Degree{0, 2}, Degree{2, -4}})
        CHECK(rep.term(Matrix::identity(2), a).is_zero());
    CHECK_FALSE(rep.term(Matrix::identity(2), Degree{1, 1}).is_zero());
}

TEST_CASE("highest weight space of the natural module") {
    const FinRep nat = make_rep(torus_t1(), 2, ones(2), "natural");
    const auto vp = vplus(nat);
    CHECK(vp.size() == 2);
    // Oracle: e_1 (x) C^2 occupies the first two coordinates of C^2 (x) C^2.
    EchelonBasis expected(4);
    expected.insert(unit_vector(4, 0));
    expected.insert(unit_vector(4, 1));
    for (const auto& v : vp)
        CHECK(expected.contains(v));
    CHECK(vplus_cosets(nat).size() == 2);

    const FinRep comm = make_rep(torus_commutative(2), 2, ones(2), "natural");
    CHECK(comm.dim() == 2);
    CHECK(vplus(comm).size() == 1);
    CHECK(vplus(make_rep(torus_t1(), 2, ones(2), "trivial")).size() == 1);
}

TEST_CASE("vplus agrees on coset representatives for single blocks") {
    for (const auto& q : {torus_t1(), torus_zeta3(), torus_commutative(2)})
        for (const char* spec : {"natural", "adjoint", "natural+trivial"}) {
            const FinRep rep = make_rep(q, 2, ones(2), spec);
            EchelonBasis a(rep.dim()), b(rep.dim());
            for (const auto& v : vplus(rep))
                a.insert(v);
            for (const auto& v : vplus_cosets(rep))
                b.insert(v);
            CHECK(a.size() == b.size());
            for (const auto& r : a.rows())
                CHECK(b.contains(r));
        }
}

TEST_CASE("weights of vplus are dominant integral") {
    const EvalPoints two{{{Cyclotomic(1L), Cyclotomic(-1L)}, {Cyclotomic(1L)}}};
    const std::vector<std::pair<FinRep, std::vector<Rational>>> cases{
        {make_rep(torus_t1(), 2, ones(2), "natural"), {1}},
        {make_rep(torus_t1(), 2, ones(2), "trivial"), {0}},
        {make_rep(torus_t1(), 2, ones(2), "adjoint"), {2}},
        {make_rep(torus_t1(), 3, ones(2), "natural"), {1, 0}},
        {make_rep(torus_t1(), 2, two, "tensor"), {2}},
    };
    for (const auto& [rep, top] : cases) {
        const auto spaces = weight_spaces(rep, vplus(rep));
        REQUIRE(spaces.size() == 1);
        CHECK(spaces[0].values == top);
        CHECK(is_dominant_integral(spaces[0].weight));
    }
    const FinRep sum = make_rep(torus_t1(), 2, ones(2), "natural+adjoint+trivial");
    std::size_t total = 0;
    for (const auto& w : weight_spaces(sum, vplus(sum))) {
        CHECK(is_dominant_integral(w.weight));
        total += w.basis.size();
    }
    CHECK(total == vplus(sum).size());
}

TEST_CASE("weight multiplicities of Vbar") {
    const FinRep adj = make_rep(torus_t1(), 2, ones(2), "adjoint");
    std::map<std::vector<Rational>, std::size_t> mult;
    for (const auto& w : weight_spaces(adj))
        mult[w.values] = w.basis.size();
    // sl_4 under diag(1,1,-1,-1): 4 + 4 root vectors of weight +-2, the rest weight 0.
    CHECK(mult[{2}] == 4);
    CHECK(mult[{-2}] == 4);
    CHECK(mult[{0}] == 7);
    CHECK(weyl_multiplicity_check(adj));
    CHECK(weyl_multiplicity_check(make_rep(torus_t1(), 3, ones(2), "natural")));
    CHECK(weyl_multiplicity_check(make_rep(torus_zeta3(), 2, ones(2), "natural+trivial")));
}

TEST_CASE("integrability index") {
    const auto q = torus_t1();
    const Matrix e12 = Matrix::unit(2, 2, 0, 1);
    CHECK(integrability_index(make_rep(q, 2, ones(2), "natural"), e12, {0, 0}) == 2);
    CHECK(integrability_index(make_rep(q, 2, ones(2), "natural"), e12, {1, 1}) == 2);
    CHECK(integrability_index(make_rep(q, 2, ones(2), "trivial"), e12, {0, 0}) == 1);
    CHECK(integrability_index(make_rep(q, 2, ones(2), "adjoint"), e12, {1, 0}) == 3);
    const Matrix e13 = Matrix::unit(3, 3, 0, 2);
    CHECK(integrability_index(make_rep(q, 3, ones(2), "adjoint"), e13, {0, 1}) == 3);
    CHECK(code_of([&] { integrability_index(make_rep(q, 2, ones(2), "natural"), Matrix::identity(2), {0, 0}); }) ==
          ErrorCode::invalid_argument);
}

TEST_CASE("Lambda series") {
    const auto q = torus_t1();
    const FinRep rep = make_rep(q, 2, ones(2), "natural");
    const Vector v = unit_vector(4, 0);
    const auto series = lambda_series(rep, 0, 0, v, 6);
    REQUIRE(series.size() == 7);
    CHECK(series[0] == v);
    CHECK(series[1] == scaled(v, Cyclotomic(-1L)));
    for (std::size_t m = 2; m <= 6; ++m)
        CHECK(is_zero(series[m]));
    CHECK(code_of([&] { lambda_series(rep, 0, 0, v, 0); }) == ErrorCode::invalid_truncation);
    CHECK(code_of([&] { lambda_series(rep, 1, 0, v, 3); }) == ErrorCode::invalid_argument);

    // Oracle: H_k v = a^k v gives exp(-sum a^k u^k / k) = 1 - a u.
    const Cyclotomic a = Cyclotomic::root_of_unity(3, 1);
    const FinRep at_a = make_rep(q, 2, EvalPoints{{{a}, {Cyclotomic(1L)}}}, "natural");
    const auto s = lambda_series(at_a, 0, 0, v, 5);
    CHECK(s[1] == scaled(v, -a));
    for (std::size_t m = 2; m <= 5; ++m)
        CHECK(is_zero(s[m]));

    // Adjoint highest vector: lambda(h) = 2 gives (1 - a u)^2.
    const FinRep adj = make_rep(q, 2, EvalPoints{{{a}, {Cyclotomic(1L)}}}, "adjoint");
    const auto top = weight_spaces(adj, vplus(adj));
    REQUIRE(top.size() == 1);
    const Vector w = top[0].basis[0];
    const auto t = lambda_series(adj, 0, 0, w, 5);
    CHECK(t[1] == scaled(w, Cyclotomic(-2L) * a));
    CHECK(t[2] == scaled(w, a * a));
    for (std::size_t m = 3; m <= 5; ++m)
        CHECK(is_zero(t[m]));
}

TEST_CASE("loop criterion in both directions") {
    for (const char* spec : {"trivial", "natural", "adjoint", "natural+trivial"})
        for (const auto& q : {torus_t1(), torus_zeta3()}) {
            const auto checks = loop_checks(make_rep(q, 2, ones(2), spec), 6);
            CHECK_FALSE(checks.empty());
            for (const auto& c : checks) {
                CHECK(c.forward);
                CHECK(c.converse);
                CHECK(c.bound_holds);
            }
        }
    CHECK(code_of([] { loop_checks(make_rep(torus_t1(), 2, ones(2), "natural"), 0); }) ==
          ErrorCode::invalid_truncation);
}

TEST_CASE("highest central operators") {
    const auto q = torus_t1();
    for (std::size_t i = 0; i < 2; ++i) {
        const auto z = highest_central_operator(make_rep(q, 2, ones(2), "natural"), i, 4);
        CHECK(z.found);
        CHECK(z.k == 1);
        CHECK(z.rank == z.vplus_dim);
        CHECK(z.degree == 2 * Degree::unit(2, i));
    }
    CHECK_FALSE(highest_central_operator(make_rep(q, 2, ones(2), "trivial"), 0, 4).found);
    CHECK(highest_central_operator(make_rep(torus_zeta3(), 3, ones(2), "adjoint"), 1, 4).found);
}

TEST_CASE("cyclic submodule windows") {
    const auto q = torus_t1();
    const FinRep nat = make_rep(q, 2, ones(2), "natural");
    const auto r = submodule_window(nat, {{Degree{0, 0}, unit_vector(4, 0)}}, 3);
    CHECK(r.dims.size() == 49);
    CHECK(r.seed_weight == std::vector<Rational>{1});
    for (const auto& [m, dim] : r.dims)
        CHECK(dim == 2);
    // On a commutative torus the slices are all of Vbar.
    const FinRep comm = make_rep(torus_commutative(2), 2, ones(2), "natural");
    for (const auto& [m, dim] : submodule_window(comm, {{Degree{1, 0}, unit_vector(2, 0)}}, 2).dims)
        CHECK(dim == 2);
    // The trivial module never leaves the seed grade.
    const auto t = submodule_window(make_rep(q, 2, ones(2), "trivial"), {{Degree{0, 1}, unit_vector(1, 0)}}, 2);
    for (const auto& [m, dim] : t.dims)
        CHECK(dim == (m == Degree{0, 1} ? 1u : 0u));
    CHECK(code_of([&] { submodule_window(nat, {{Degree{5, 0}, unit_vector(4, 0)}}, 2); }) ==
          ErrorCode::invalid_argument);
}

TEST_CASE("window decomposition") {
    const auto q = torus_t1();
    const auto nat = decompose_window(make_rep(q, 2, ones(2), "natural"), 3);
    CHECK(nat.classes == 1);
    CHECK(nat.components.size() == 2);
    CHECK(nat.direct);
    CHECK(nat.covers_interior);

    const auto triv = decompose_window(make_rep(q, 2, ones(2), "trivial"), 3);
    CHECK(triv.classes == 1);
    CHECK(triv.components.size() == 9);

    const auto sum = decompose_window(make_rep(q, 2, ones(2), "natural+trivial"), 3);
    CHECK(sum.classes == 2);
    CHECK(sum.direct);

    const auto mixed = decompose_window(make_rep(q, 2, ones(2), "natural+adjoint"), 2);
    CHECK(mixed.classes == 2);
}

}
