#include "qtorus/roots_weyl.hpp"

#include "qtorus/error.hpp"

#include <set>
#include <sstream>

namespace qtorus {

namespace {

void check_same_shape(const Weight& a, const Weight& b) {
    if (a.finite.size() != b.finite.size() || a.delta.size() != b.delta.size() ||
        a.omega.size() != b.omega.size())
        fail(ErrorCode::invalid_argument, "weights over different (d, n)");
}

// Cartan matrix entry of A_{d-1} with (alpha_i, alpha_i) = 2.
long cartan(std::size_t i, std::size_t j) {
    if (i == j)
        return 2;
    return (i + 1 == j || j + 1 == i) ? -1 : 0;
}

} // namespace

Weight Weight::zero(std::size_t d, std::size_t n) {
    if (d < 2)
        fail(ErrorCode::invalid_argument, "weights need d >= 2");
    return Weight{std::vector<Rational>(d - 1, Rational(0)), std::vector<Rational>(n, Rational(0)),
                  std::vector<Rational>(n, Rational(0))};
}

Weight Weight::simple_root(std::size_t d, std::size_t n, std::size_t i) {
    Weight w = zero(d, n);
    w.finite.at(i) = 1;
    return w;
}

Weight Weight::null_root(std::size_t d, std::size_t n, const Degree& m) {
    if (m.size() != n)
        fail(ErrorCode::invalid_degree, "null root degree has wrong length");
    Weight w = zero(d, n);
    for (std::size_t j = 0; j < n; ++j)
        w.delta[j] = Rational(static_cast<long>(m[j]));
    return w;
}

Weight Weight::delta_j(std::size_t d, std::size_t n, std::size_t j) {
    Weight w = zero(d, n);
    w.delta.at(j) = 1;
    return w;
}

Weight Weight::omega_j(std::size_t d, std::size_t n, std::size_t j) {
    Weight w = zero(d, n);
    w.omega.at(j) = 1;
    return w;
}

Weight Weight::fundamental(std::size_t d, std::size_t n, std::size_t i) {
    std::vector<Rational> values(d - 1, Rational(0));
    values.at(i) = 1;
    return from_coroot_values(n, values);
}

Weight Weight::from_coroot_values(std::size_t n, const std::vector<Rational>& values) {
    const std::size_t d = values.size() + 1;
    Weight w = zero(d, n);
    // Inverse Cartan matrix of A_{d-1}: min(i,j) (d - max(i,j)) / d, 1-based.
    for (std::size_t i = 0; i + 1 < d; ++i)
        for (std::size_t j = 0; j + 1 < d; ++j) {
            const long lo = static_cast<long>(std::min(i, j) + 1);
            const long hi = static_cast<long>(std::max(i, j) + 1);
            w.finite[i] += Rational(lo * (static_cast<long>(d) - hi), static_cast<long>(d)) * values[j];
        }
    for (auto& x : w.finite)
        x.canonicalize();
    return w;
}

Weight& Weight::operator+=(const Weight& o) {
    check_same_shape(*this, o);
    for (std::size_t i = 0; i < finite.size(); ++i)
        finite[i] += o.finite[i];
    for (std::size_t j = 0; j < delta.size(); ++j) {
        delta[j] += o.delta[j];
        omega[j] += o.omega[j];
    }
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    check_same_shape(*this, o);
    for (std::size_t i = 0; i < finite.size(); ++i)
        finite[i] -= o.finite[i];
    for (std::size_t j = 0; j < delta.size(); ++j) {
        delta[j] -= o.delta[j];
        omega[j] -= o.omega[j];
    }
    return *this;
}

Weight operator*(const Rational& k, Weight a) {
    for (auto& x : a.finite)
        x *= k;
    for (auto& x : a.delta)
        x *= k;
    for (auto& x : a.omega)
        x *= k;
    return a;
}

std::strong_ordering Weight::compare_seq(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size())
        return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Weight::to_string() const {
    std::ostringstream os;
    auto dump = [&](const char* name, const std::vector<Rational>& v) {
        os << name << "[";
        for (std::size_t i = 0; i < v.size(); ++i)
            os << (i ? "," : "") << v[i];
        os << "]";
    };
    dump("alpha", finite);
    dump(" delta", delta);
    dump(" omega", omega);
    return os.str();
}

Root Root::real(std::size_t i, std::size_t j, Degree m) {
    if (i == j)
        fail(ErrorCode::invalid_argument, "real root needs i != j");
    Root r;
    r.kind = Kind::real;
    r.i = i;
    r.j = j;
    r.m = std::move(m);
    return r;
}

Root Root::null(Degree m) {
    Root r;
    r.kind = Kind::null;
    r.m = std::move(m);
    return r;
}

std::vector<Rational> Root::finite_coordinates(std::size_t d) const {
    std::vector<Rational> c(d - 1, Rational(0));
    if (!is_real())
        return c;
    if (i >= d || j >= d)
        fail(ErrorCode::invalid_argument, "root index exceeds matrix size");
    const std::size_t lo = std::min(i, j), hi = std::max(i, j);
    const long sign = i < j ? 1 : -1;
    for (std::size_t k = lo; k < hi; ++k)
        c[k] = sign;
    return c;
}

Weight Root::as_weight(std::size_t d, std::size_t n) const {
    Weight w = Weight::null_root(d, n, m);
    w.finite = finite_coordinates(d);
    return w;
}

std::vector<Root> real_roots(std::size_t d, std::size_t n, std::int64_t bound) {
    std::vector<Root> roots;
    std::vector<Degree> degrees;
    Degree cur(n);
    for (std::size_t k = 0; k < n; ++k)
        cur[k] = -bound;
    while (true) {
        degrees.push_back(cur);
        std::size_t k = 0;
        for (; k < n; ++k) {
            if (++cur[k] <= bound)
                break;
            cur[k] = -bound;
        }
        if (k == n)
            break;
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (i != j)
                for (const auto& m : degrees)
                    roots.push_back(Root::real(i, j, m));
    return roots;
}

Rational inner(const Weight& x, const Weight& y) {
    check_same_shape(x, y);
    Rational s = 0;
    for (std::size_t i = 0; i < x.finite.size(); ++i)
        for (std::size_t j = 0; j < y.finite.size(); ++j)
            if (long c = cartan(i, j); c != 0)
                s += x.finite[i] * y.finite[j] * c;
    for (std::size_t k = 0; k < x.delta.size(); ++k)
        s += x.delta[k] * y.omega[k] + x.omega[k] * y.delta[k];
    return s;
}

Rational simple_coroot_value(const Weight& lambda, std::size_t k) {
    Rational s = 0;
    for (std::size_t l = 0; l < lambda.finite.size(); ++l)
        if (long c = cartan(k, l); c != 0)
            s += lambda.finite[l] * c;
    return s;
}

Rational coroot_eval(const Weight& lambda, const Root& gamma) {
    if (!gamma.is_real())
        fail(ErrorCode::no_coroot, "null roots have no coroot");
    if (gamma.m.size() != lambda.rank_n())
        fail(ErrorCode::invalid_degree, "root degree does not match weight rank");
    const std::vector<Rational> coeffs = gamma.finite_coordinates(lambda.rank_d());
    Rational s = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (sgn(coeffs[k]) != 0)
            s += coeffs[k] * simple_coroot_value(lambda, k);
    for (std::size_t i = 0; i < gamma.m.size(); ++i)
        s += lambda.omega[i] * static_cast<long>(gamma.m[i]);
    return s;
}

Weight reflect(const Weight& lambda, const Root& gamma) {
    if (!gamma.is_real())
        fail(ErrorCode::no_coroot, "reflections are defined for real roots only");
    return lambda - coroot_eval(lambda, gamma) * gamma.as_weight(lambda.rank_d(), lambda.rank_n());
}

Weight translate(const Weight& mu, std::size_t j) {
    if (j >= mu.rank_n())
        fail(ErrorCode::invalid_argument, "translation index out of range");
    if (sgn(mu.omega[j]) != 0)
        fail(ErrorCode::hypothesis_violated, "translation needs c_j to act trivially (omega_j coordinate 0)");
    Rational theta_value = 0;
    for (std::size_t k = 0; k < mu.finite.size(); ++k)
        theta_value += simple_coroot_value(mu, k);
    Weight out = mu;
    out.delta[j] -= theta_value;
    return out;
}

bool is_dominant_integral(const Weight& lambda) {
    for (std::size_t k = 0; k < lambda.finite.size(); ++k) {
        const Rational v = simple_coroot_value(lambda, k);
        if (v.get_den() != 1 || sgn(v) < 0)
            return false;
    }
    return true;
}

std::vector<Weight> weyl_orbit(const Weight& lambda, const std::vector<Root>& generators,
                               std::size_t max_depth, std::size_t budget) {
    std::set<Weight> seen{lambda};
    std::vector<Weight> orbit{lambda};
    std::vector<Weight> frontier{lambda};
    for (std::size_t depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
        std::vector<Weight> next;
        for (const auto& w : frontier)
            for (const auto& g : generators) {
                if (orbit.size() >= budget)
                    return orbit;
                Weight r = reflect(w, g);
                if (seen.insert(r).second) {
                    orbit.push_back(r);
                    next.push_back(std::move(r));
                }
            }
        frontier = std::move(next);
    }
    return orbit;
}

} // namespace qtorus
