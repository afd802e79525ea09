#include "doctest.h"
#include "support.hpp"

#include "qtorus/error.hpp"
#include "qtorus/fiber.hpp"

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

// Random trace-free-modulo-commutators element: matrix terms only.
ToroidalElement random_tau(std::mt19937_64& rng, const QMatrixPtr& q, std::size_t d) {
    ToroidalElement x(q, d);
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < terms; ++k) {
        const Degree a = random_degree(rng, q->n(), 2);
        Matrix m(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (rng() % 2)
                    m(i, j) = random_scalar(rng, q->conductor());
        if (q->in_radf(a)) {
            // Remove the trace so the term lies in sl_d(C_q).
            const Cyclotomic tr = m.trace();
            m(0, 0) -= tr;
        }
        x.add_matrix(a, m);
    }
    return x;
}

} // namespace

TEST_SUITE("fiber") {

TEST_CASE("T1 fiber structure") {
    const auto q = torus_t1();
    const FiberAlgebra f = build_fiber(q, ones(2), {0, 0});
    CHECK(f.dim() == 4);
    const Vector t1 = f.monomial({1, 0}), t2 = f.monomial({0, 1});
    CHECK(f.multiply(t1, t2) == scaled(f.multiply(t2, t1), Cyclotomic(-1L)));
    CHECK(f.multiply(t1, t1) == f.one());
    const WedderburnReport w = wedderburn(f);
    CHECK(w.center_dim == 1);
    CHECK(w.size == 2);
    CHECK(w.simple);
}

TEST_CASE("fiber multiplication is associative and matches the torus") {
    std::mt19937_64 rng(51);
    for (const auto& q : {torus_t1(), torus_zeta3()}) {
        EvalPoints pts{{{Cyclotomic::root_of_unity(3, 1)}, {Cyclotomic(-1L)}}};
        const FiberAlgebra f = build_fiber(q, pts, {0, 0});
        for (int trial = 0; trial < 30; ++trial) {
            const auto x = random_torus_element(rng, q, 2, 4);
            const auto y = random_torus_element(rng, q, 2, 4);
            const auto z = random_torus_element(rng, q, 2, 4);
            CHECK(f.image(multiply(x, y)) == f.multiply(f.image(x), f.image(y)));
            const Vector fx = f.image(x), fy = f.image(y), fz = f.image(z);
            CHECK(f.multiply(f.multiply(fx, fy), fz) == f.multiply(fx, f.multiply(fy, fz)));
        }
    }
}

TEST_CASE("Wedderburn sizes") {
    CHECK(wedderburn(build_fiber(torus_zeta3(), ones(2), {0, 0})).size == 3);
    const WedderburnReport comm = wedderburn(build_fiber(torus_commutative(2), ones(2), {0, 0}));
    CHECK(comm.dim == 1);
    CHECK(comm.size == 1);
    const auto q3 = make_qmatrix_upper(3, 2, {{0, 1, 1}, {0, 2, 1}});
    const WedderburnReport w3 = wedderburn(build_fiber(q3, ones(3), {0, 0, 0}));
    CHECK(w3.dim == 8);
    CHECK(w3.center_dim == 2);
    CHECK(w3.blocks == 2);
    CHECK(w3.size == 2);
    CHECK_FALSE(w3.simple);
    CHECK(w3.size * w3.size * w3.blocks == w3.dim);
    CHECK(code_of([&] { irreducible_rep(build_fiber(q3, ones(3), {0, 0, 0})); }) == ErrorCode::not_simple);
    const auto reps = irreducible_reps(build_fiber(q3, ones(3), {0, 0, 0}));
    CHECK(reps.size() == 2);
    for (const auto& r : reps)
        CHECK(verify_relations(r));
}

TEST_CASE("T1 representation") {
    const auto q = torus_t1();
    const MatrixRep rep = irreducible_rep(build_fiber(q, ones(2), {0, 0}));
    CHECK(rep.size() == 2);
    CHECK(verify_relations(rep));
    CHECK(rep.images[0] == Matrix::from_rows({{Cyclotomic(1L), Cyclotomic(0L)}, {Cyclotomic(0L), Cyclotomic(-1L)}}));
    CHECK(rep.images[1] == Matrix::from_rows({{Cyclotomic(0L), Cyclotomic(1L)}, {Cyclotomic(1L), Cyclotomic(0L)}}));
    CHECK(rep.monomial({1, 1}).trace().is_zero());
    CHECK(rep.monomial({-1, 0}) * rep.images[0] == Matrix::identity(2));
}

TEST_CASE("representations at several points") {
    std::mt19937_64 rng(52);
    const std::vector<std::pair<QMatrixPtr, EvalPoints>> cases{
        {torus_t1(), EvalPoints{{{Cyclotomic(-1L), Cyclotomic::root_of_unity(4, 1)}, {Cyclotomic(1L)}}}},
        {torus_zeta3(), EvalPoints{{{Cyclotomic::root_of_unity(3, 2)}, {Cyclotomic(1L), Cyclotomic(-1L)}}}},
        {torus_mixed(), ones(3)},
    };
    for (const auto& [q, pts] : cases)
        for (const auto& k : pts.tuples()) {
            const FiberAlgebra f = build_fiber(q, pts, k);
            const WedderburnReport w = wedderburn(f);
            CHECK(w.size * w.size * w.blocks == w.dim);
            for (const auto& rep : irreducible_reps(f)) {
                CHECK(verify_relations(rep));
                for (int trial = 0; trial < 5; ++trial) {
                    const auto x = random_torus_element(rng, q, 2, 3), y = random_torus_element(rng, q, 2, 3);
                    CHECK(rep.image(multiply(x, y)) == rep.image(x) * rep.image(y));
                }
            }
        }
}

TEST_CASE("point validation") {
    const auto q = torus_t1();
    CHECK(code_of([&] { build_fiber(q, EvalPoints{{{Cyclotomic(1L), Cyclotomic(1L)}, {Cyclotomic(1L)}}}, {0, 0}); }) ==
          ErrorCode::invalid_points);
    CHECK(code_of([&] { build_fiber(q, EvalPoints{{{Cyclotomic()}, {Cyclotomic(1L)}}}, {0, 0}); }) ==
          ErrorCode::invalid_points);
    CHECK(code_of([&] { build_fiber(q, EvalPoints{{{Cyclotomic(2L)}, {Cyclotomic(1L)}}}, {0, 0}); }) ==
          ErrorCode::invalid_points);
    CHECK(code_of([&] { build_fiber(q, ones(3), {0, 0}); }) == ErrorCode::invalid_points);
    CHECK(code_of([&] { irreducible_rep(build_fiber(torus_zeta3(), ones(2), {0, 0}, 2)); }) == ErrorCode::field_too_small);
}

TEST_CASE("Chinese remainder consistency") {
    const auto q = torus_t1();
    const EvalPoints pts{{{Cyclotomic(1L), Cyclotomic(-1L)}, {Cyclotomic(1L), Cyclotomic::root_of_unity(3, 1)}}};
    const Pullback p = build_pullback(q, pts);
    CHECK(p.tuples.size() == 4);
    CHECK(p.dim_quotient() == 16);
    CHECK(crt_rank(q, pts) == 16);
    CHECK(crt_rank(torus_zeta3(), ones(2)) == 9);
}

TEST_CASE("pi_tilde") {
    const auto q = torus_t1();
    const Pullback p = build_pullback(q, ones(2));
    const Matrix e12 = Matrix::unit(2, 2, 0, 1);
    CHECK(pi_tilde(p, ToroidalElement::matrix_term(q, e12, {0, 0})).front() == kron(e12, Matrix::identity(2)));
    Matrix h(2, 2);
    h(0, 0) = Cyclotomic(1L);
    h(1, 1) = Cyclotomic(-1L);
    CHECK(pi_tilde(p, ToroidalElement::matrix_term(q, h, {1, 0})).front() == kron(h, p.reps[0][0].images[0]));
    CHECK(code_of([&] { pi_tilde(p, ToroidalElement::central(q, 2, 0)); }) == ErrorCode::not_in_domain);
    CHECK(code_of([&] { pi_tilde(p, ToroidalElement::derivation(q, 2, 0), true); }) == ErrorCode::not_in_domain);
}

TEST_CASE("pi_tilde is a Lie homomorphism") {
    std::mt19937_64 rng(53);
    const EvalPoints two{{{Cyclotomic(1L), Cyclotomic(-1L)}, {Cyclotomic(1L)}}};
    for (const auto& [q, pts] : std::vector<std::pair<QMatrixPtr, EvalPoints>>{{torus_t1(), two},
                                                                              {torus_zeta3(), ones(2)}}) {
        const Pullback p = build_pullback(q, pts);
        std::size_t central_terms = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const auto x = random_tau(rng, q, 2), y = random_tau(rng, q, 2);
            const auto xy = bracket(x, y);
            if (!xy.hcpart().is_zero())
                ++central_terms;
            const auto lhs = pi_tilde(p, xy, true);
            const auto px = pi_tilde(p, x), py = pi_tilde(p, y);
            for (std::size_t b = 0; b < lhs.size(); ++b)
                CHECK(lhs[b] == lie_bracket(px[b], py[b]));
        }
        CHECK(central_terms > 0);
    }
}

}
