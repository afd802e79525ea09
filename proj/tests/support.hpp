#pragma once

#include "qtorus/cyclotomic.hpp"
#include "qtorus/quantum_torus.hpp"
#include "qtorus/torus_form.hpp"

#include <random>

namespace qtorus::testing {

// n = 2, q12 = -1.
inline QMatrixPtr torus_t1() { return make_qmatrix_upper(2, 2, {{0, 1, 1}}); }

// n = 2, q12 = zeta_3.
inline QMatrixPtr torus_zeta3() { return make_qmatrix_upper(2, 3, {{0, 1, 1}}); }

// n = 3 with q12 = -1, q13 = zeta_3, q23 = zeta_6.
inline QMatrixPtr torus_mixed() { return make_qmatrix_upper(3, 6, {{0, 1, 3}, {0, 2, 2}, {1, 2, 1}}); }

inline QMatrixPtr torus_commutative(std::size_t n) { return make_qmatrix(1, IntMatrix(n, IntVector(n, 0))); }

inline Degree random_degree(std::mt19937_64& rng, std::size_t n, std::int64_t bound) {
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    Degree a(n);
    for (std::size_t i = 0; i < n; ++i)
        a[i] = dist(rng);
    return a;
}

// Small random element of Q(zeta_m): integer coefficients in [-3, 3].
inline Cyclotomic random_scalar(std::mt19937_64& rng, std::int64_t m) {
    std::uniform_int_distribution<long> dist(-3, 3);
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi(m)));
    for (auto& x : c)
        x = dist(rng);
    return Cyclotomic(m, c);
}

inline Cyclotomic random_nonzero_scalar(std::mt19937_64& rng, std::int64_t m) {
    while (true)
        if (Cyclotomic c = random_scalar(rng, m); !c.is_zero())
            return c;
}

inline TorusElement random_torus_element(std::mt19937_64& rng, const QMatrixPtr& q, std::size_t terms,
                                         std::int64_t bound) {
    TorusElement x(q);
    for (std::size_t k = 0; k < terms; ++k)
        x.add_term(random_degree(rng, q->n(), bound), random_scalar(rng, q->conductor()));
    return x;
}

} // namespace qtorus::testing
