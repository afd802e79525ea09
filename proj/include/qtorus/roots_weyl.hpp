#pragma once

#include "qtorus/cyclotomic.hpp"
#include "qtorus/torus_form.hpp"

#include <vector>

namespace qtorus {

/// Element of h* in the basis {alpha_i (i < d), delta_j, omega_j (j <= n)}.
/// delta_j(d_k) = delta_jk and omega_j(c_k) = delta_jk, so the delta and
/// omega coordinates of a weight are its values on d_j and c_j respectively.
struct Weight {
    std::vector<Rational> finite;
    std::vector<Rational> delta;
    std::vector<Rational> omega;

    static Weight zero(std::size_t d, std::size_t n);
    static Weight simple_root(std::size_t d, std::size_t n, std::size_t i);
    static Weight null_root(std::size_t d, std::size_t n, const Degree& m);
    static Weight delta_j(std::size_t d, std::size_t n, std::size_t j);
    static Weight omega_j(std::size_t d, std::size_t n, std::size_t j);
    /// Fundamental weight of sl_d written in the simple-root basis.
    static Weight fundamental(std::size_t d, std::size_t n, std::size_t i);
    /// The finite weight with lambda(alpha_k^vee) = values[k].
    static Weight from_coroot_values(std::size_t n, const std::vector<Rational>& values);

    std::size_t rank_d() const noexcept { return finite.size() + 1; }
    std::size_t rank_n() const noexcept { return delta.size(); }

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rational& k, Weight a);
    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight& a, const Weight& b) {
        if (auto c = compare_seq(a.finite, b.finite); c != 0)
            return c;
        if (auto c = compare_seq(a.delta, b.delta); c != 0)
            return c;
        return compare_seq(a.omega, b.omega);
    }

    std::string to_string() const;

private:
    static std::strong_ordering compare_seq(const std::vector<Rational>& a, const std::vector<Rational>& b);
};

/// Root alpha + delta_m (real) or delta_m (null). The finite part alpha is
/// e_i - e_j of sl_d, 0-based indices, i != j.
struct Root {
    enum class Kind { real, null };
    Kind kind = Kind::null;
    std::size_t i = 0;
    std::size_t j = 0;
    Degree m;

    static Root real(std::size_t i, std::size_t j, Degree m);
    static Root null(Degree m);

    bool is_real() const noexcept { return kind == Kind::real; }
    bool is_positive_finite() const noexcept { return i < j; }
    /// Coefficients of alpha on the simple roots.
    std::vector<Rational> finite_coordinates(std::size_t d) const;
    Weight as_weight(std::size_t d, std::size_t n) const;
};

/// Real roots alpha + delta_m with |m| <= bound, all finite roots.
std::vector<Root> real_roots(std::size_t d, std::size_t n, std::int64_t bound);

Rational inner(const Weight& x, const Weight& y);

/// lambda(alpha_k^vee) for the k-th simple coroot.
Rational simple_coroot_value(const Weight& lambda, std::size_t k);

/// lambda(gamma^vee) with gamma^vee = alpha^vee + sum_i m_i c_i.
Rational coroot_eval(const Weight& lambda, const Root& gamma);

/// r_gamma(lambda) = lambda - lambda(gamma^vee) gamma.
Weight reflect(const Weight& lambda, const Root& gamma);

/// mu - mu(theta^vee) delta_j, theta the highest root; needs mu(c_j) = 0.
Weight translate(const Weight& mu, std::size_t j);

bool is_dominant_integral(const Weight& lambda);

/// Breadth-first orbit of lambda under the given reflections, stopping at
/// max_depth layers or once `budget` weights have been collected.
std::vector<Weight> weyl_orbit(const Weight& lambda, const std::vector<Root>& generators,
                               std::size_t max_depth, std::size_t budget);

} // namespace qtorus
