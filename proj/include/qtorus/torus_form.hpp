#pragma once

#include "qtorus/cyclotomic.hpp"
#include "qtorus/lattice.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace qtorus {

/// Exponent vector a in Z^n of a monomial t^a = t_1^{a_1} ... t_n^{a_n}.
class Degree {
public:
    Degree() = default;
    explicit Degree(std::size_t n) : v_(n, 0) {}
    explicit Degree(IntVector v) : v_(std::move(v)) {}
    Degree(std::initializer_list<std::int64_t> v) : v_(v) {}

    static Degree unit(std::size_t n, std::size_t i) {
        Degree d(n);
        d.v_[i] = 1;
        return d;
    }

    std::size_t size() const noexcept { return v_.size(); }
    std::int64_t operator[](std::size_t i) const { return v_[i]; }
    std::int64_t& operator[](std::size_t i) { return v_[i]; }
    const IntVector& values() const noexcept { return v_; }

    bool is_zero() const;
    std::int64_t max_abs() const;

    Degree& operator+=(const Degree& o);
    Degree& operator-=(const Degree& o);
    friend Degree operator+(Degree a, const Degree& b) { return a += b; }
    friend Degree operator-(Degree a, const Degree& b) { return a -= b; }
    Degree operator-() const;
    friend Degree operator*(std::int64_t k, Degree a);

    friend auto operator<=>(const Degree&, const Degree&) = default;
    friend bool operator==(const Degree&, const Degree&) = default;

    std::string to_string() const;

private:
    IntVector v_;
};

/// Full-rank sublattice of Z^n held by its canonical Hermite basis.
class Sublattice {
public:
    Sublattice(std::size_t ambient_rank, IntMatrix basis);

    std::size_t ambient_rank() const noexcept { return n_; }
    const IntMatrix& basis() const noexcept { return basis_; }

    bool contains(const Degree& a) const;
    /// Order of Z^n / L (infinite lattices are not representable here).
    std::int64_t index() const;
    IntVector elementary_divisors() const;
    /// Representative of a + L in the box 0 <= r_j < basis[j][j].
    Degree reduce(const Degree& a) const;
    /// One representative per coset of Z^n / L.
    std::vector<Degree> coset_representatives() const;

private:
    std::size_t n_;
    IntMatrix basis_;
};

/// Rational quantum matrix q_{ij} = zeta_M^{e_{ij}}, validated at construction:
/// q_{ii} = 1, q_{ij} q_{ji} = 1, and the monomial cocycle reproduces
/// t_i t_j = q_{ij} t_j t_i for every pair.
class QMatrix {
public:
    QMatrix(std::int64_t conductor, IntMatrix exps);

    std::size_t n() const noexcept { return n_; }
    std::int64_t conductor() const noexcept { return conductor_; }
    const IntMatrix& exps() const noexcept { return exps_; }
    Cyclotomic entry(std::size_t i, std::size_t j) const;

    /// Exponent of sigma(a, b) = prod_{j<i} q_{ij}^{a_i b_j}, reduced mod M.
    std::int64_t sigma_exponent(const Degree& a, const Degree& b) const;
    /// Exponent of f(a, b) = sigma(a,b) / sigma(b,a) = a^T E b, reduced mod M.
    std::int64_t skew_exponent(const Degree& a, const Degree& b) const;

    const Sublattice& radf() const noexcept { return radf_; }
    bool in_radf(const Degree& a) const { return radf_.contains(a); }

    /// N_j: smallest N >= 1 with t_j^N central.
    std::int64_t min_central_power(std::size_t j) const;
    const IntVector& central_powers() const noexcept { return central_powers_; }

    bool is_commutative() const;

    friend bool operator==(const QMatrix& a, const QMatrix& b);

private:
    void check_degree(const Degree& a) const;

    std::size_t n_;
    std::int64_t conductor_;
    IntMatrix exps_;
    Sublattice radf_;
    IntVector central_powers_;
};

using QMatrixPtr = std::shared_ptr<const QMatrix>;

QMatrixPtr make_qmatrix(std::int64_t conductor, IntMatrix exps);

/// Builds the n x n matrix from upper-triangular exponents e_{ij}, i < j.
QMatrixPtr make_qmatrix_upper(std::size_t n, std::int64_t conductor,
                              const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>& upper);

Cyclotomic sigma(const QMatrix& q, const Degree& a, const Degree& b);
Cyclotomic skew(const QMatrix& q, const Degree& a, const Degree& b);

/// Hermite basis of rad f, obtained as the projection of ker [E^T | M I].
Sublattice radf_basis(const QMatrix& q);

std::int64_t min_central_power(const QMatrix& q, std::size_t j);

} // namespace qtorus
