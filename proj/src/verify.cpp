#include "qtorus/verify.hpp"

#include "qtorus/hc1.hpp"

namespace qtorus {

namespace {

Degree random_degree(std::mt19937_64& rng, std::size_t n, std::int64_t bound) {
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    Degree a(n);
    for (std::size_t i = 0; i < n; ++i)
        a[i] = dist(rng);
    return a;
}

Cyclotomic random_scalar(std::mt19937_64& rng, std::int64_t m) {
    std::uniform_int_distribution<long> dist(-3, 3);
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi(m)));
    for (auto& x : c)
        x = dist(rng);
    return Cyclotomic(m, c);
}

Cyclotomic random_nonzero(std::mt19937_64& rng, std::int64_t m) {
    while (true)
        if (Cyclotomic c = random_scalar(rng, m); !c.is_zero())
            return c;
}

TorusElement random_torus_element(std::mt19937_64& rng, const QMatrixPtr& q, std::size_t terms,
                                  std::int64_t bound) {
    TorusElement x(q);
    for (std::size_t k = 0; k < terms; ++k)
        x.add_term(random_degree(rng, q->n(), bound), random_scalar(rng, q->conductor()));
    return x;
}

void check(SuiteReport& r, bool ok) {
    ++r.checks;
    if (!ok)
        ++r.failures;
}

} // namespace

ToroidalElement random_homogeneous(std::mt19937_64& rng, const QMatrixPtr& q, std::size_t d, std::int64_t bound) {
    const std::size_t n = q->n();
    const int kind = std::uniform_int_distribution<int>(0, 9)(rng);
    if (kind == 0)
        return ToroidalElement::derivation(q, d, std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    if (kind == 1) {
        HC1Element h(q);
        const auto& gens = q->radf().basis();
        h.add_symbol(rng() % n, Degree(gens[rng() % gens.size()]), random_nonzero(rng, q->conductor()));
        return ToroidalElement::from_hc1(d, h);
    }
    Matrix x(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (rng() % 2)
                x(i, j) = random_scalar(rng, q->conductor());
    x(rng() % d, rng() % d) = Cyclotomic(1L);
    return ToroidalElement::matrix_term(q, x, random_degree(rng, n, bound));
}

SuiteReport cocycle_suite(const QMatrixPtr& q, std::size_t trials, std::uint64_t seed, std::int64_t bound) {
    SuiteReport r{"cocycle", trials, 0, 0, {}};
    std::mt19937_64 rng(seed);
    const QMatrix& Q = *q;
    const std::size_t n = Q.n();
    for (std::size_t t = 0; t < trials; ++t) {
        const Degree a = random_degree(rng, n, bound), b = random_degree(rng, n, bound),
                     c = random_degree(rng, n, bound);
        const std::int64_t k = std::uniform_int_distribution<std::int64_t>(-bound, bound)(rng);
        check(r, skew(Q, a, b) == skew(Q, b, a).inverse());
        check(r, sigma(Q, a + b, c) == sigma(Q, a, c) * sigma(Q, b, c));
        check(r, sigma(Q, a, b + c) == sigma(Q, a, b) * sigma(Q, a, c));
        check(r, skew(Q, a + b, c) == skew(Q, a, c) * skew(Q, b, c));
        check(r, skew(Q, a, b + c) == skew(Q, a, b) * skew(Q, a, c));
        check(r, skew(Q, k * a, a).is_one());
        check(r, skew(Q, a, k * a).is_one());
        check(r, skew(Q, a, b) == sigma(Q, a, b) * sigma(Q, b, a).inverse());
    }
    return r;
}

SuiteReport center_suite(const QMatrixPtr& q, std::size_t trials, std::uint64_t seed, std::size_t probes) {
    SuiteReport r{"center", trials, 0, 0, {}};
    std::mt19937_64 rng(seed);
    const std::size_t n = q->n();
    for (std::size_t t = 0; t < trials; ++t) {
        const TorusElement x = random_torus_element(rng, q, 5, 4);
        const auto [z, c] = split_center(x);
        check(r, z + c == x);
        for (std::size_t p = 0; p < probes; ++p)
            check(r, commutator(z, random_torus_element(rng, q, 3, 4)).is_zero());
        for (const auto& [a, coef] : z.terms())
            check(r, q->in_radf(a));
        for (const auto& [a, coef] : c.terms())
            check(r, !q->in_radf(a));
        // Monomial centrality against the generators t_j.
        const Degree a = random_degree(rng, n, 6);
        const TorusElement m = TorusElement::monomial(q, a);
        bool central = true;
        for (std::size_t j = 0; j < n; ++j)
            central = central && commutator(m, TorusElement::monomial(q, Degree::unit(n, j))).is_zero();
        check(r, central == q->in_radf(a));
        if (central)
            ++r.counters["central_monomials"];
    }
    return r;
}

SuiteReport hc1_dim_suite(const QMatrixPtr& q, std::int64_t radius, std::int64_t support) {
    SuiteReport r{"hc1_dim", 0, 0, 0, {}};
    const std::size_t n = q->n();
    Degree a(n);
    for (std::size_t j = 0; j < n; ++j)
        a[j] = -radius;
    while (true) {
        ++r.trials;
        const std::size_t expected = !q->in_radf(a) ? 0 : (a.is_zero() ? n : n - 1);
        const std::size_t dim = graded_dim(*q, a);
        check(r, dim == expected);
        check(r, bruteforce_dim(*q, a, support) == dim);
        std::size_t j = 0;
        while (j < n && a[j] == radius) {
            a[j] = -radius;
            ++j;
        }
        if (j == n)
            break;
        ++a[j];
    }
    return r;
}

SuiteReport jacobi_suite(const QMatrixPtr& q, std::size_t d, std::size_t trials, std::uint64_t seed) {
    SuiteReport r{"jacobi", trials, 0, 0, {{"hc1_triples", 0}}};
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const auto x = random_homogeneous(rng, q, d), y = random_homogeneous(rng, q, d),
                   z = random_homogeneous(rng, q, d);
        check(r, jacobi_residual(x, y, z).is_zero());
        check(r, (bracket(x, y) + bracket(y, x)).is_zero());
        check(r, bracket(x, x).is_zero());
        const auto xy = bracket(x, y);
        if (!xy.hcpart().is_zero() || !bracket(xy, z).hcpart().is_zero() ||
            !bracket(bracket(y, z), x).hcpart().is_zero() || !bracket(bracket(z, x), y).hcpart().is_zero())
            ++r.counters["hc1_triples"];
    }
    return r;
}

SuiteReport module_axiom_suite(const FinRep& rep, std::size_t trials, std::uint64_t seed) {
    SuiteReport r{"module_axiom", trials, 0, 0, {{"hc1_brackets", 0}}};
    std::mt19937_64 rng(seed);
    const auto& q = rep.torus();
    const std::size_t n = q->n(), d = rep.rank_d();
    auto vector = [&]() {
        GradedVector v;
        for (int k = 0; k < 2; ++k) {
            Vector w(rep.dim());
            for (auto& c : w)
                c = random_scalar(rng, q->conductor());
            v[random_degree(rng, n, 2)] = w;
        }
        return v;
    };
    auto difference = [](GradedVector a, const GradedVector& b) {
        for (const auto& [m, w] : b) {
            auto [it, fresh] = a.emplace(m, scaled(w, Cyclotomic(-1L)));
            if (!fresh)
                it->second = subtract(it->second, w);
        }
        std::erase_if(a, [](const auto& kv) { return is_zero(kv.second); });
        return a;
    };
    for (std::size_t t = 0; t < trials; ++t) {
        const auto x = random_homogeneous(rng, q, d), y = random_homogeneous(rng, q, d);
        const auto v = vector();
        const auto xy = bracket(x, y);
        if (!xy.hcpart().is_zero())
            ++r.counters["hc1_brackets"];
        check(r, act(rep, xy, v) == difference(act(rep, x, act(rep, y, v)), act(rep, y, act(rep, x, v))));
    }
    return r;
}

} // namespace qtorus
