#include "qtorus/fiber.hpp"

#include "qtorus/error.hpp"

#include <numeric>
#include <set>

namespace qtorus {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t default_field(const QMatrix& q, const std::vector<Cyclotomic>& values) {
    std::int64_t w = std::lcm<std::int64_t>(2, q.conductor());
    for (const auto& a : values)
        w = std::lcm(w, order(a));
    std::int64_t l = 1;
    for (auto p : q.central_powers())
        l = std::lcm(l, p);
    return w * l;
}

} // namespace

std::size_t EvalPoints::tuple_count() const {
    std::size_t k = 1;
    for (const auto& v : values)
        k *= v.size();
    return k;
}

std::vector<IntVector> EvalPoints::tuples() const {
    std::vector<IntVector> out;
    const std::size_t count = tuple_count();
    for (std::size_t idx = 0; idx < count; ++idx) {
        IntVector k(values.size());
        std::size_t rest = idx;
        for (std::size_t j = values.size(); j-- > 0;) {
            k[j] = static_cast<std::int64_t>(rest % values[j].size());
            rest /= values[j].size();
        }
        out.push_back(std::move(k));
    }
    return out;
}

void validate_points(const QMatrix& q, const EvalPoints& pts) {
    if (pts.rank() != q.n())
        fail(ErrorCode::invalid_points, "need one list of points per torus variable");
    for (std::size_t j = 0; j < pts.rank(); ++j) {
        const auto& v = pts.values[j];
        if (v.empty())
            fail(ErrorCode::invalid_points, "point list " + std::to_string(j + 1) + " is empty");
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k].is_zero())
                fail(ErrorCode::invalid_points, "evaluation points must be nonzero");
            if (!is_root_of_unity(v[k]))
                fail(ErrorCode::invalid_points, "evaluation point " + v[k].to_string() + " is not a root of unity");
            for (std::size_t l = 0; l < k; ++l)
                if (v[k] == v[l])
                    fail(ErrorCode::invalid_points, "repeated evaluation point " + v[k].to_string());
        }
    }
}

FiberAlgebra::FiberAlgebra(QMatrixPtr q, std::vector<Cyclotomic> values, IntVector point, std::int64_t field_conductor)
    : q_(std::move(q)), values_(std::move(values)), point_(std::move(point)), periods_(q_->central_powers()),
      field_(field_conductor) {
    if (values_.size() != q_->n())
        fail(ErrorCode::invalid_points, "fiber needs one value per torus variable");
    if (field_ <= 0)
        field_ = default_field(*q_, values_);
    dim_ = 1;
    for (auto p : periods_)
        dim_ *= static_cast<std::size_t>(p);
    table_.reserve(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            const Degree a = basis_degree(i), b = basis_degree(j);
            auto [idx, c] = reduce(a + b);
            table_.emplace_back(idx, c * sigma(*q_, a, b));
        }
}

Degree FiberAlgebra::basis_degree(std::size_t index) const {
    Degree a(q_->n());
    for (std::size_t j = 0; j < q_->n(); ++j) {
        const auto p = static_cast<std::size_t>(periods_[j]);
        a[j] = static_cast<std::int64_t>(index % p);
        index /= p;
    }
    return a;
}

std::size_t FiberAlgebra::index_of(const Degree& reduced) const {
    std::size_t index = 0;
    for (std::size_t j = q_->n(); j-- > 0;) {
        if (reduced[j] < 0 || reduced[j] >= periods_[j])
            fail(ErrorCode::invalid_degree, "degree is not reduced modulo the periods");
        index = index * static_cast<std::size_t>(periods_[j]) + static_cast<std::size_t>(reduced[j]);
    }
    return index;
}

std::pair<std::size_t, Cyclotomic> FiberAlgebra::reduce(const Degree& c) const {
    const std::size_t n = q_->n();
    if (c.size() != n)
        fail(ErrorCode::invalid_degree, "degree does not match torus rank");
    Degree base(n), shift(n);
    Cyclotomic coef(1L);
    for (std::size_t j = 0; j < n; ++j) {
        const std::int64_t s = floor_div(c[j], periods_[j]);
        base[j] = c[j] - s * periods_[j];
        shift[j] = s * periods_[j];
        coef *= values_[j].pow(s);
    }
    // t^{base} t^{shift} = sigma(base, shift) t^c, and t^{shift} = prod_j a_j^{s_j}.
    coef *= sigma(*q_, base, shift).inverse();
    return {index_of(base), coef};
}

Vector FiberAlgebra::monomial(const Degree& a, const Cyclotomic& c) const {
    Vector v(dim_);
    auto [idx, coef] = reduce(a);
    v[idx] = coef * c;
    return v;
}

Vector FiberAlgebra::multiply(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        fail(ErrorCode::invalid_operand, "fiber vector has wrong length");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero())
                continue;
            const auto& [idx, c] = table_[i * dim_ + j];
            out[idx] += x[i] * y[j] * c;
        }
    }
    return out;
}

Vector FiberAlgebra::image(const TorusElement& x) const {
    require_same_torus(q_, x.torus());
    Vector out(dim_);
    for (const auto& [a, c] : x.terms()) {
        auto [idx, coef] = reduce(a);
        out[idx] += coef * c;
    }
    return out;
}

Matrix FiberAlgebra::left_matrix(const Vector& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vector e(dim_);
        e[j] = Cyclotomic(1L);
        const Vector col = multiply(x, e);
        for (std::size_t i = 0; i < dim_; ++i)
            m(i, j) = col[i];
    }
    return m;
}

Matrix FiberAlgebra::right_matrix(const Vector& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vector e(dim_);
        e[j] = Cyclotomic(1L);
        const Vector col = multiply(e, x);
        for (std::size_t i = 0; i < dim_; ++i)
            m(i, j) = col[i];
    }
    return m;
}

FiberAlgebra build_fiber(const QMatrixPtr& q, const EvalPoints& pts, const IntVector& k, std::int64_t field_conductor) {
    validate_points(*q, pts);
    if (k.size() != q->n())
        fail(ErrorCode::invalid_argument, "point tuple has wrong length");
    std::vector<Cyclotomic> values;
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (k[j] < 0 || static_cast<std::size_t>(k[j]) >= pts.values[j].size())
            fail(ErrorCode::invalid_argument, "point index out of range");
        values.push_back(pts.values[j][static_cast<std::size_t>(k[j])]);
    }
    return FiberAlgebra(q, std::move(values), k, field_conductor);
}

namespace {

// Order of u in G = Z^n / (N_1 Z + ... + N_n Z).
std::int64_t group_order(const Degree& u, const IntVector& periods) {
    std::int64_t p = 1;
    for (std::size_t j = 0; j < periods.size(); ++j) {
        const std::int64_t r = ((u[j] % periods[j]) + periods[j]) % periods[j];
        p = std::lcm(p, periods[j] / std::gcd(periods[j], r));
    }
    return p;
}

Degree reduce_box(Degree a, const IntVector& periods) {
    for (std::size_t j = 0; j < periods.size(); ++j)
        a[j] = ((a[j] % periods[j]) + periods[j]) % periods[j];
    return a;
}

// Splits every idempotent in `idems` along the eigenvalues of t^u, where u
// has finite order p in G so that (t^u)^p is a scalar.
std::vector<Vector> refine(const FiberAlgebra& f, const std::vector<Vector>& idems, const Degree& u) {
    const std::int64_t p = group_order(u, f.periods());
    if (p == 1)
        return idems;
    const Vector x = f.monomial(u);
    Vector power = f.one();
    for (std::int64_t k = 0; k < p; ++k)
        power = f.multiply(power, x);
    const Cyclotomic c = power[0];
    for (std::size_t i = 1; i < power.size(); ++i)
        if (!power[i].is_zero())
            fail(ErrorCode::internal_inconsistency, "power of a monomial of finite order is not scalar");
    const std::vector<Cyclotomic> roots = nth_roots(c, p);
    for (const auto& r : roots)
        if (!field_contains_root(f.field_conductor(), order(r)))
            fail(ErrorCode::field_too_small, "eigenvalue " + r.to_string() + " lies outside Q(zeta_" +
                                                 std::to_string(f.field_conductor()) + ")");
    std::vector<Vector> projectors;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        Vector proj = f.one();
        for (std::size_t k = 0; k < roots.size(); ++k) {
            if (k == i)
                continue;
            // (x - mu) / (lambda - mu)
            Vector factor = x;
            factor[0] -= roots[k];
            proj = scaled(f.multiply(proj, factor), (roots[i] - roots[k]).inverse());
        }
        projectors.push_back(std::move(proj));
    }
    std::vector<Vector> out;
    for (const auto& e : idems)
        for (const auto& proj : projectors) {
            Vector ep = f.multiply(e, proj);
            if (!is_zero(ep))
                out.push_back(std::move(ep));
        }
    return out;
}

// Subgroup of G generated by `gens`, as reduced degrees.
std::set<Degree> closure(const std::vector<Degree>& gens, const IntVector& periods) {
    const std::size_t n = periods.size();
    std::set<Degree> elems{Degree(n)};
    std::vector<Degree> frontier{Degree(n)};
    while (!frontier.empty()) {
        std::vector<Degree> next;
        for (const auto& a : frontier)
            for (const auto& g : gens) {
                Degree b = reduce_box(a + g, periods);
                if (elems.insert(b).second)
                    next.push_back(std::move(b));
            }
        frontier = std::move(next);
    }
    return elems;
}

std::vector<Degree> radical_generators(const FiberAlgebra& f) {
    std::vector<Degree> gens;
    for (const auto& row : f.torus()->radf().basis())
        gens.push_back(reduce_box(Degree(row), f.periods()));
    return gens;
}

// Generators of a maximal isotropic subgroup L of G containing rad f; for
// the alternating form f every maximal isotropic subgroup has |L|^2 = |G||H|.
std::vector<Degree> isotropic_generators(const FiberAlgebra& f) {
    const QMatrix& q = *f.torus();
    std::vector<Degree> gens = radical_generators(f);
    std::set<Degree> elems = closure(gens, f.periods());
    for (std::size_t i = 0; i < f.dim(); ++i) {
        const Degree g = f.basis_degree(i);
        if (elems.count(g))
            continue;
        bool isotropic = true;
        for (const auto& h : gens)
            if (!skew(q, g, h).is_one()) {
                isotropic = false;
                break;
            }
        if (!isotropic)
            continue;
        gens.push_back(g);
        elems = closure(gens, f.periods());
    }
    return gens;
}

std::size_t isqrt_exact(std::size_t x) {
    std::size_t r = 0;
    while ((r + 1) * (r + 1) <= x)
        ++r;
    return r * r == x ? r : 0;
}

} // namespace

WedderburnReport wedderburn(const FiberAlgebra& f) {
    WedderburnReport rep;
    rep.dim = f.dim();
    std::vector<Matrix> commutators;
    for (std::size_t j = 0; j < f.torus()->n(); ++j) {
        const Vector t = f.monomial(Degree::unit(f.torus()->n(), j));
        commutators.push_back(f.left_matrix(t) - f.right_matrix(t));
    }
    rep.center_dim = common_kernel(commutators, f.dim()).size();

    std::vector<Vector> idems{f.one()};
    for (const auto& h : radical_generators(f))
        idems = refine(f, idems, h);
    for (const auto& e : idems)
        if (f.multiply(e, e) != e)
            fail(ErrorCode::internal_inconsistency, "central projector is not idempotent");
    if (idems.size() != rep.center_dim)
        fail(ErrorCode::internal_inconsistency, "number of central idempotents differs from the center dimension");
    rep.blocks = idems.size();
    rep.central_idempotents = std::move(idems);
    if (rep.dim % rep.blocks != 0 || (rep.size = isqrt_exact(rep.dim / rep.blocks)) == 0)
        fail(ErrorCode::internal_inconsistency, "block dimension is not a perfect square");
    rep.simple = rep.center_dim == 1;
    return rep;
}

Matrix MatrixRep::monomial(const Degree& a) const {
    const std::size_t n = images.size();
    if (a.size() != n)
        fail(ErrorCode::invalid_degree, "degree does not match torus rank");
    Matrix out = Matrix::identity(size());
    for (std::size_t j = 0; j < n; ++j) {
        if (a[j] == 0)
            continue;
        Matrix factor;
        if (a[j] > 0) {
            factor = images[j].pow(a[j]);
        } else {
            // t_j^{-1} = a_j^{-1} t_j^{N_j - 1}
            const Matrix inv = values[j].inverse() * images[j].pow(periods[j] - 1);
            factor = inv.pow(-a[j]);
        }
        out = out * factor;
    }
    return out;
}

Matrix MatrixRep::image(const TorusElement& x) const {
    require_same_torus(torus, x.torus());
    Matrix out(size(), size());
    for (const auto& [a, c] : x.terms())
        out += c * monomial(a);
    return out;
}

bool verify_relations(const MatrixRep& rep) {
    const QMatrix& q = *rep.torus;
    const std::size_t m = rep.size();
    for (std::size_t i = 0; i < q.n(); ++i) {
        if (rep.images[i].pow(rep.periods[i]) != rep.values[i] * Matrix::identity(m))
            return false;
        for (std::size_t j = 0; j < q.n(); ++j)
            if (rep.images[i] * rep.images[j] != q.entry(i, j) * (rep.images[j] * rep.images[i]))
                return false;
    }
    return true;
}

namespace {

MatrixRep rep_on_left_ideal(const FiberAlgebra& f, const Vector& e) {
    EchelonBasis span(f.dim());
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < f.dim(); ++i) {
        Vector v = f.multiply(f.monomial(f.basis_degree(i)), e);
        if (span.insert(v))
            basis.push_back(std::move(v));
    }
    const std::size_t m = basis.size();
    Matrix b(f.dim(), m);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < f.dim(); ++i)
            b(i, k) = basis[k][i];
    MatrixRep rep{f.torus(), f.values(), f.periods(), {}};
    for (std::size_t j = 0; j < f.torus()->n(); ++j) {
        const Vector t = f.monomial(Degree::unit(f.torus()->n(), j));
        Matrix img(m, m);
        for (std::size_t k = 0; k < m; ++k) {
            const auto coords = solve(b, f.multiply(t, basis[k]));
            if (!coords)
                fail(ErrorCode::internal_inconsistency, "left ideal is not stable under t_j");
            for (std::size_t i = 0; i < m; ++i)
                img(i, k) = (*coords)[i];
        }
        rep.images.push_back(std::move(img));
    }
    if (!verify_relations(rep))
        fail(ErrorCode::internal_inconsistency, "constructed representation violates the defining relations");
    return rep;
}

} // namespace

std::vector<MatrixRep> irreducible_reps(const FiberAlgebra& f) {
    const WedderburnReport w = wedderburn(f);
    const std::vector<Degree> gens = isotropic_generators(f);
    std::vector<MatrixRep> reps;
    for (const auto& central : w.central_idempotents) {
        std::vector<Vector> idems{central};
        for (const auto& g : gens)
            idems = refine(f, idems, g);
        if (idems.size() != w.size)
            fail(ErrorCode::internal_inconsistency, "isotropic splitting did not give primitive idempotents");
        MatrixRep rep = rep_on_left_ideal(f, idems.front());
        if (rep.size() != w.size)
            fail(ErrorCode::internal_inconsistency, "left ideal dimension differs from the block size");
        reps.push_back(std::move(rep));
    }
    return reps;
}

MatrixRep irreducible_rep(const FiberAlgebra& f) {
    if (wedderburn(f).center_dim != 1)
        fail(ErrorCode::not_simple, "fiber algebra is not simple; use irreducible_reps");
    return irreducible_reps(f).front();
}

std::size_t Pullback::dim_quotient() const {
    std::size_t total = 1;
    for (std::size_t j = 0; j < points.rank(); ++j)
        total *= points.values[j].size() * static_cast<std::size_t>(torus->central_powers()[j]);
    return total;
}

Pullback build_pullback(const QMatrixPtr& q, const EvalPoints& pts, std::int64_t field_conductor) {
    validate_points(*q, pts);
    Pullback p{q, pts, pts.tuples(), {}};
    for (const auto& k : p.tuples)
        p.reps.push_back(irreducible_reps(build_fiber(q, pts, k, field_conductor)));
    return p;
}

std::size_t crt_rank(const QMatrixPtr& q, const EvalPoints& pts, std::int64_t field_conductor) {
    validate_points(*q, pts);
    std::vector<FiberAlgebra> fibers;
    std::size_t width = 0;
    for (const auto& k : pts.tuples()) {
        fibers.push_back(build_fiber(q, pts, k, field_conductor));
        width += fibers.back().dim();
    }
    const std::size_t n = q->n();
    IntVector box(n);
    std::size_t count = 1;
    for (std::size_t j = 0; j < n; ++j) {
        box[j] = static_cast<std::int64_t>(pts.values[j].size()) * q->central_powers()[j];
        count *= static_cast<std::size_t>(box[j]);
    }
    EchelonBasis span(width);
    for (std::size_t idx = 0; idx < count; ++idx) {
        Degree a(n);
        std::size_t rest = idx;
        for (std::size_t j = 0; j < n; ++j) {
            a[j] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(box[j]));
            rest /= static_cast<std::size_t>(box[j]);
        }
        Vector row;
        row.reserve(width);
        for (const auto& f : fibers) {
            const Vector v = f.monomial(a);
            row.insert(row.end(), v.begin(), v.end());
        }
        span.insert(row);
    }
    return span.size();
}

std::vector<Matrix> pi_tilde(const Pullback& p, const ToroidalElement& x, bool drop_central) {
    require_same_torus(p.torus, x.torus());
    for (const auto& k : x.derpart())
        if (!k.is_zero())
            fail(ErrorCode::not_in_domain, "pi_tilde is defined on tau(d,q); derivation part must vanish");
    if (!drop_central && !x.hcpart().is_zero())
        fail(ErrorCode::not_in_domain, "pi_tilde is defined on tau(d,q); HC_1 part must vanish");
    const std::size_t d = x.rank_d();
    std::vector<Matrix> out;
    for (const auto& block_reps : p.reps)
        for (const auto& rep : block_reps) {
            Matrix m(d * rep.size(), d * rep.size());
            for (const auto& [a, xa] : x.matpart())
                m += kron(xa, rep.monomial(a));
            out.push_back(std::move(m));
        }
    return out;
}

} // namespace qtorus
