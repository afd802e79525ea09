#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <vector>

namespace qtorus {

using Rational = mpq_class;
using Integer = mpz_class;

std::int64_t euler_phi(std::int64_t m);

/// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
/// Cached; safe to call concurrently.
const std::vector<Integer>& cyclotomic_polynomial(std::int64_t m);

/// Exact element of the cyclotomic field Q(zeta_M).
///
/// Stored as the residue modulo Phi_M in the power basis 1, z, ..., z^{phi(M)-1},
/// so equality is coefficient equality once the conductors agree. Binary
/// operations promote both operands to the lcm of their conductors through
/// zeta_M -> zeta_L^{L/M}. Values are immutable from the caller's point of view.
class Cyclotomic {
public:
    Cyclotomic();
    Cyclotomic(long value); // NOLINT(google-explicit-constructor)
    Cyclotomic(const Rational& value); // NOLINT(google-explicit-constructor)
    Cyclotomic(std::int64_t conductor, std::vector<Rational> coeffs);

    /// zeta_M^k, stored with the smallest conductor that contains it.
    static Cyclotomic root_of_unity(std::int64_t m, std::int64_t k);

    std::int64_t conductor() const noexcept { return conductor_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Precondition: is_rational().
    Rational rational_value() const;

    /// Embeds into Q(zeta_L); L must be a multiple of conductor().
    Cyclotomic promote(std::int64_t l) const;
    /// Galois automorphism zeta -> zeta^k, gcd(k, M) = 1.
    Cyclotomic galois(std::int64_t k) const;

    Cyclotomic inverse() const;
    Cyclotomic pow(std::int64_t e) const;

    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator/=(const Cyclotomic& rhs);

    friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
    friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
    friend Cyclotomic operator*(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs *= rhs; }
    friend Cyclotomic operator/(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs /= rhs; }
    Cyclotomic operator-() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::int64_t conductor_;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

enum class ArithKind { add, mul, neg, inv };

/// Uniform entry point over the field operations; `y` is ignored for neg/inv.
Cyclotomic arith(ArithKind kind, const Cyclotomic& x, const Cyclotomic& y = Cyclotomic());

/// x = zeta_order^exponent with gcd(exponent, order) = 1 and 0 <= exponent < order.
struct RootOfUnity {
    std::int64_t order;
    std::int64_t exponent;
};

/// Smallest k >= 1 with x^k = 1. Throws not_a_root_of_unity otherwise.
std::int64_t order(const Cyclotomic& x);
RootOfUnity as_root_of_unity(const Cyclotomic& x);
bool is_root_of_unity(const Cyclotomic& x);

/// All n distinct roots of X^n - x, for x a root of unity.
std::vector<Cyclotomic> nth_roots(const Cyclotomic& x, std::int64_t n);

/// True when zeta_order lies in Q(zeta_field_conductor).
bool field_contains_root(std::int64_t field_conductor, std::int64_t order);

} // namespace qtorus
