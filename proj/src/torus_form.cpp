#include "qtorus/torus_form.hpp"

#include "qtorus/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace qtorus {

bool Degree::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t Degree::max_abs() const {
    std::int64_t m = 0;
    for (auto x : v_)
        m = std::max<std::int64_t>(m, x < 0 ? -x : x);
    return m;
}

Degree& Degree::operator+=(const Degree& o) {
    if (o.size() != size())
        fail(ErrorCode::invalid_degree, "degree length mismatch");
    for (std::size_t i = 0; i < v_.size(); ++i)
        v_[i] += o.v_[i];
    return *this;
}

Degree& Degree::operator-=(const Degree& o) {
    if (o.size() != size())
        fail(ErrorCode::invalid_degree, "degree length mismatch");
    for (std::size_t i = 0; i < v_.size(); ++i)
        v_[i] -= o.v_[i];
    return *this;
}

Degree Degree::operator-() const {
    Degree d = *this;
    for (auto& x : d.v_)
        x = -x;
    return d;
}

Degree operator*(std::int64_t k, Degree a) {
    for (auto& x : a.v_)
        x *= k;
    return a;
}

std::string Degree::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v_.size(); ++i)
        os << (i ? "," : "") << v_[i];
    os << ")";
    return os.str();
}

Sublattice::Sublattice(std::size_t ambient_rank, IntMatrix basis)
    : n_(ambient_rank), basis_(hermite_normal_form(std::move(basis), ambient_rank)) {
    if (basis_.size() != n_)
        fail(ErrorCode::invalid_argument, "sublattice must have full rank");
}

bool Sublattice::contains(const Degree& a) const {
    if (a.size() != n_)
        fail(ErrorCode::invalid_degree, "degree " + a.to_string() + " has wrong length");
    return in_lattice(a.values(), basis_);
}

std::int64_t Sublattice::index() const { return hnf_index(basis_); }

IntVector Sublattice::elementary_divisors() const { return smith_diagonal(basis_, n_); }

Degree Sublattice::reduce(const Degree& a) const {
    if (a.size() != n_)
        fail(ErrorCode::invalid_degree, "degree " + a.to_string() + " has wrong length");
    return Degree(reduce_mod_hnf(a.values(), basis_));
}

std::vector<Degree> Sublattice::coset_representatives() const {
    std::vector<Degree> reps;
    Degree cur(n_);
    // Odometer over the box 0 <= r_j < basis[j][j].
    while (true) {
        reps.push_back(cur);
        std::size_t j = 0;
        for (; j < n_; ++j) {
            if (++cur[j] < basis_[j][j])
                break;
            cur[j] = 0;
        }
        if (j == n_)
            break;
    }
    return reps;
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
    a %= m;
    return a < 0 ? a + m : a;
}

Sublattice compute_radf(std::size_t n, std::int64_t m, const IntMatrix& e) {
    // a in rad f  <=>  sum_i a_i e_{ij} = 0 (mod M) for every j
    //             <=>  E^T a + M y = 0 for some integer y.
    IntMatrix system(n, IntVector(2 * n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            system[j][i] = e[i][j];
        system[j][n + j] = m;
    }
    IntMatrix kernel = integer_kernel(system, 2 * n);
    IntMatrix projected;
    for (const auto& row : kernel)
        projected.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
    return Sublattice(n, std::move(projected));
}

} // namespace

QMatrix::QMatrix(std::int64_t conductor, IntMatrix exps)
    : n_(exps.size()), conductor_(conductor), exps_(std::move(exps)),
      radf_(1, IntMatrix{{1}}) {
    if (conductor_ < 1)
        fail(ErrorCode::invalid_conductor, "torus conductor must be positive");
    if (n_ < 2)
        fail(ErrorCode::invalid_qmatrix, "quantum torus needs rank n >= 2");
    for (auto& row : exps_) {
        if (row.size() != n_)
            fail(ErrorCode::invalid_qmatrix, "exponent matrix must be square");
        for (auto& x : row)
            x = mod(x, conductor_);
    }
    for (std::size_t i = 0; i < n_; ++i) {
        if (exps_[i][i] != 0)
            fail(ErrorCode::invalid_qmatrix, "q_ii must be 1");
        for (std::size_t j = 0; j < n_; ++j)
            if (mod(exps_[i][j] + exps_[j][i], conductor_) != 0)
                fail(ErrorCode::invalid_qmatrix, "q_ij must equal q_ji^{-1}");
    }
    // The cocycle must reproduce the defining relation t_i t_j = q_ij t_j t_i.
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const Degree ei = Degree::unit(n_, i), ej = Degree::unit(n_, j);
            if (mod(sigma_exponent(ei, ej) - sigma_exponent(ej, ei) - exps_[i][j], conductor_) != 0)
                fail(ErrorCode::internal_inconsistency, "cocycle does not reproduce t_i t_j = q_ij t_j t_i");
        }
    radf_ = compute_radf(n_, conductor_, exps_);
    central_powers_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j)
        central_powers_[j] = min_central_power(j);
}

Cyclotomic QMatrix::entry(std::size_t i, std::size_t j) const {
    return Cyclotomic::root_of_unity(conductor_, exps_.at(i).at(j));
}

void QMatrix::check_degree(const Degree& a) const {
    if (a.size() != n_)
        fail(ErrorCode::invalid_degree, "degree " + a.to_string() + " does not match torus rank");
}

std::int64_t QMatrix::sigma_exponent(const Degree& a, const Degree& b) const {
    check_degree(a);
    check_degree(b);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < i; ++j)
            acc = mod(acc + mod(exps_[i][j] * mod(mod(a[i], conductor_) * mod(b[j], conductor_), conductor_), conductor_),
                      conductor_);
    }
    return acc;
}

std::int64_t QMatrix::skew_exponent(const Degree& a, const Degree& b) const {
    check_degree(a);
    check_degree(b);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            acc = mod(acc + exps_[i][j] * mod(mod(a[i], conductor_) * mod(b[j], conductor_), conductor_),
                      conductor_);
    return acc;
}

std::int64_t QMatrix::min_central_power(std::size_t j) const {
    if (j >= n_)
        fail(ErrorCode::invalid_argument, "generator index out of range");
    for (std::int64_t k = 1;; ++k)
        if (radf_.contains(k * Degree::unit(n_, j)))
            return k;
}

bool QMatrix::is_commutative() const {
    for (const auto& row : exps_)
        for (auto x : row)
            if (x != 0)
                return false;
    return true;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.conductor_ == b.conductor_ && a.exps_ == b.exps_;
}

QMatrixPtr make_qmatrix(std::int64_t conductor, IntMatrix exps) {
    return std::make_shared<const QMatrix>(conductor, std::move(exps));
}

QMatrixPtr make_qmatrix_upper(std::size_t n, std::int64_t conductor,
                              const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>& upper) {
    IntMatrix e(n, IntVector(n, 0));
    for (const auto& [i, j, x] : upper) {
        if (i >= n || j >= n || i == j)
            fail(ErrorCode::invalid_qmatrix, "bad off-diagonal index");
        e[i][j] = x;
        e[j][i] = -x;
    }
    return make_qmatrix(conductor, std::move(e));
}

Cyclotomic sigma(const QMatrix& q, const Degree& a, const Degree& b) {
    return Cyclotomic::root_of_unity(q.conductor(), q.sigma_exponent(a, b));
}

Cyclotomic skew(const QMatrix& q, const Degree& a, const Degree& b) {
    return Cyclotomic::root_of_unity(q.conductor(), q.skew_exponent(a, b));
}

Sublattice radf_basis(const QMatrix& q) { return q.radf(); }

std::int64_t min_central_power(const QMatrix& q, std::size_t j) { return q.min_central_power(j); }

} // namespace qtorus
