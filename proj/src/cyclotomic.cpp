#include "qtorus/cyclotomic.hpp"

#include "qtorus/error.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qtorus {

std::int64_t euler_phi(std::int64_t m) {
    if (m < 1)
        fail(ErrorCode::invalid_conductor, "conductor must be positive");
    std::int64_t result = m;
    std::int64_t rest = m;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            while (rest % p == 0)
                rest /= p;
            result -= result / p;
        }
    }
    if (rest > 1)
        result -= result / rest;
    return result;
}

namespace {

std::vector<Integer> poly_exact_div(std::vector<Integer> num, const std::vector<Integer>& den) {
    // den is monic.
    const std::size_t dn = den.size() - 1;
    std::vector<Integer> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        Integer t = num[i];
        quot[i - dn] = t;
        if (t == 0)
            continue;
        for (std::size_t j = 0; j <= dn; ++j)
            num[i - dn + j] -= t * den[j];
    }
    return quot;
}

std::vector<Integer> compute_cyclotomic(std::int64_t m) {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<Integer> num(static_cast<std::size_t>(m) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(m)] = 1;
    for (std::int64_t d = 1; d < m; ++d)
        if (m % d == 0)
            num = poly_exact_div(num, cyclotomic_polynomial(d));
    return num;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(std::int64_t m) {
    if (m < 1)
        fail(ErrorCode::invalid_conductor, "conductor must be positive");
    static std::mutex mutex;
    static std::map<std::int64_t, std::unique_ptr<const std::vector<Integer>>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(m);
        if (it != cache.end())
            return *it->second;
    }
    // Computed outside the lock: the recursion re-enters this function.
    auto poly = std::make_unique<const std::vector<Integer>>(compute_cyclotomic(m));
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(m, std::move(poly));
    return *it->second;
}

namespace {

// Reduces a polynomial (any degree) modulo Phi_m in place and truncates to phi(m).
void reduce_mod(std::vector<Rational>& c, std::int64_t m) {
    const auto& phi_poly = cyclotomic_polynomial(m);
    const std::size_t deg = phi_poly.size() - 1;
    for (std::size_t i = c.size(); i-- > deg;) {
        if (sgn(c[i]) == 0)
            continue;
        Rational t = c[i];
        for (std::size_t j = 0; j < deg; ++j)
            if (phi_poly[j] != 0)
                c[i - deg + j] -= t * phi_poly[j];
        c[i] = 0;
    }
    c.resize(deg, Rational(0));
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

} // namespace

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(long value) : conductor_(1), coeffs_(1, Rational(value)) {}

Cyclotomic::Cyclotomic(const Rational& value) : conductor_(1), coeffs_(1, value) {
    coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(std::int64_t conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
    if (conductor < 1)
        fail(ErrorCode::invalid_conductor, "conductor must be positive");
    for (auto& c : coeffs_)
        c.canonicalize();
    reduce_mod(coeffs_, conductor_);
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t m, std::int64_t k) {
    if (m < 1)
        fail(ErrorCode::invalid_conductor, "root_of_unity: conductor must be positive");
    k %= m;
    if (k < 0)
        k += m;
    const std::int64_t g = std::gcd(m, k == 0 ? m : k);
    m /= g;
    k /= g;
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
    c[static_cast<std::size_t>(k)] = 1;
    return Cyclotomic(m, std::move(c));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (sgn(c) != 0)
            return false;
    return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0)
            return false;
    return true;
}

Rational Cyclotomic::rational_value() const { return coeffs_[0]; }

Cyclotomic Cyclotomic::promote(std::int64_t l) const {
    if (l == conductor_)
        return *this;
    if (l < 1 || l % conductor_ != 0)
        fail(ErrorCode::invalid_conductor, "promote: target conductor must be a multiple");
    const std::int64_t step = l / conductor_;
    std::vector<Rational> c(static_cast<std::size_t>((coeffs_.size() - 1) * step) + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        c[i * static_cast<std::size_t>(step)] = coeffs_[i];
    Cyclotomic out;
    out.conductor_ = l;
    out.coeffs_ = std::move(c);
    reduce_mod(out.coeffs_, l);
    return out;
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
    const std::int64_t m = conductor_;
    k %= m;
    if (k < 0)
        k += m;
    if (std::gcd(k, m) != 1 && m > 1)
        fail(ErrorCode::invalid_argument, "galois: exponent must be a unit");
    std::vector<Rational> c(static_cast<std::size_t>(m), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0)
            c[static_cast<std::size_t>((static_cast<std::int64_t>(i) * k) % m)] += coeffs_[i];
    Cyclotomic out;
    out.conductor_ = m;
    out.coeffs_ = std::move(c);
    reduce_mod(out.coeffs_, m);
    return out;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero())
        fail(ErrorCode::division_by_zero, "inverse of zero");
    if (conductor_ <= 2)
        return Cyclotomic(conductor_, {1 / coeffs_[0]});
    // x^{-1} = (prod of the other conjugates) / norm(x)
    Cyclotomic others(1L);
    others = others.promote(conductor_);
    for (std::int64_t k = 2; k < conductor_; ++k)
        if (std::gcd(k, conductor_) == 1)
            others *= galois(k);
    Cyclotomic norm = *this * others;
    if (!norm.is_rational())
        fail(ErrorCode::internal_inconsistency, "field norm is not rational");
    Rational inv_norm = 1 / norm.rational_value();
    for (auto& c : others.coeffs_)
        c *= inv_norm;
    return others;
}

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
    if (e < 0)
        return inverse().pow(-e);
    Cyclotomic result(1L);
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    if (rhs.conductor_ == conductor_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }
    const std::int64_t l = lcm64(conductor_, rhs.conductor_);
    *this = promote(l);
    const Cyclotomic r = rhs.promote(l);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += r.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    if (rhs.conductor_ == 1) {
        for (auto& c : coeffs_)
            c *= rhs.coeffs_[0];
        return *this;
    }
    if (conductor_ == 1) {
        Rational s = coeffs_[0];
        *this = rhs;
        for (auto& c : coeffs_)
            c *= s;
        return *this;
    }
    const std::int64_t l = lcm64(conductor_, rhs.conductor_);
    const Cyclotomic a = promote(l);
    const Cyclotomic b = rhs.promote(l);
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            if (sgn(b.coeffs_[j]) != 0)
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    conductor_ = l;
    coeffs_ = std::move(prod);
    reduce_mod(coeffs_, l);
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ == b.conductor_)
        return a.coeffs_ == b.coeffs_;
    const std::int64_t l = lcm64(a.conductor_, b.conductor_);
    return a.promote(l).coeffs_ == b.promote(l).coeffs_;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0)
            continue;
        if (!first)
            os << (sgn(coeffs_[i]) > 0 ? " + " : " - ");
        else if (sgn(coeffs_[i]) < 0)
            os << "-";
        first = false;
        Rational mag = abs(coeffs_[i]);
        if (i == 0)
            os << mag;
        else {
            if (mag != 1)
                os << mag << "*";
            os << "z" << conductor_;
            if (i > 1)
                os << "^" << i;
        }
    }
    if (first)
        os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

Cyclotomic arith(ArithKind kind, const Cyclotomic& x, const Cyclotomic& y) {
    switch (kind) {
    case ArithKind::add:
        return x + y;
    case ArithKind::mul:
        return x * y;
    case ArithKind::neg:
        return -x;
    case ArithKind::inv:
        return x.inverse();
    }
    fail(ErrorCode::invalid_argument, "arith: unknown operation");
}

namespace {

// Every root of unity in Q(zeta_M) has order dividing lcm(2, M).
std::int64_t unit_group_exponent(std::int64_t m) { return std::lcm<std::int64_t>(2, m); }

} // namespace

std::int64_t order(const Cyclotomic& x) {
    const std::int64_t l = unit_group_exponent(x.conductor());
    if (x.is_zero() || !x.pow(l).is_one())
        fail(ErrorCode::not_a_root_of_unity, "order: " + x.to_string() + " is not a root of unity");
    std::int64_t best = l;
    for (std::int64_t k = 1; k <= l; ++k)
        if (l % k == 0 && x.pow(k).is_one()) {
            best = k;
            break;
        }
    return best;
}

bool is_root_of_unity(const Cyclotomic& x) {
    if (x.is_zero())
        return false;
    return x.pow(unit_group_exponent(x.conductor())).is_one();
}

RootOfUnity as_root_of_unity(const Cyclotomic& x) {
    const std::int64_t ord = order(x);
    for (std::int64_t k = 0; k < ord; ++k)
        if (std::gcd(k, ord) == 1 || ord == 1)
            if (Cyclotomic::root_of_unity(ord, k) == x)
                return {ord, k};
    fail(ErrorCode::internal_inconsistency, "discrete log failed for " + x.to_string());
}

std::vector<Cyclotomic> nth_roots(const Cyclotomic& x, std::int64_t n) {
    if (n < 1)
        fail(ErrorCode::invalid_argument, "nth_roots: n must be positive");
    const RootOfUnity r = as_root_of_unity(x);
    std::vector<Cyclotomic> roots;
    roots.reserve(static_cast<std::size_t>(n));
    for (std::int64_t s = 0; s < n; ++s)
        roots.push_back(Cyclotomic::root_of_unity(r.order * n, r.exponent + r.order * s));
    return roots;
}

bool field_contains_root(std::int64_t field_conductor, std::int64_t order) {
    return unit_group_exponent(field_conductor) % order == 0;
}

} // namespace qtorus
