#pragma once

#include "qtorus/cyclotomic.hpp"
#include "qtorus/torus_form.hpp"

#include <map>
#include <utility>

namespace qtorus {

/// Element of HC_1(C_q) written over the symbols B_i(r) = <t_i, t^r t_i^{-1}>,
/// r in rad f. For r != 0 the symbol with pivot index min{i : r_i != 0} is
/// eliminated through the relation sum_i r_i B_i(r) = 0, so the remaining
/// n-1 symbols (n at r = 0) form a basis of the degree-r piece.
class HC1Element {
public:
    using Key = std::pair<std::size_t, Degree>;

    explicit HC1Element(QMatrixPtr q);

    /// c_i = <t_i, t_i^{-1}>.
    static HC1Element central(QMatrixPtr q, std::size_t i);

    const QMatrixPtr& torus() const noexcept { return q_; }
    const std::map<Key, Cyclotomic>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds c * B_i(r), rewriting the pivot symbol into the basis.
    void add_symbol(std::size_t i, const Degree& r, const Cyclotomic& c);

    /// Terms of total degree r only.
    HC1Element component(const Degree& r) const;

    HC1Element& operator+=(const HC1Element& o);
    HC1Element& operator-=(const HC1Element& o);
    HC1Element& operator*=(const Cyclotomic& c);
    friend HC1Element operator+(HC1Element a, const HC1Element& b) { return a += b; }
    friend HC1Element operator-(HC1Element a, const HC1Element& b) { return a -= b; }
    friend HC1Element operator*(const Cyclotomic& c, HC1Element a) { return a *= c; }
    HC1Element operator-() const;

    friend bool operator==(const HC1Element& a, const HC1Element& b);

    std::string to_string() const;

private:
    void add_basis(const Key& key, const Cyclotomic& c);

    QMatrixPtr q_;
    std::map<Key, Cyclotomic> terms_;
};

/// c <t^a, t^b>: zero unless a+b in rad f, otherwise
/// c sigma(a,b) sum_i a_i B_i(a+b) brought to normal form.
HC1Element normalize_pair(const QMatrixPtr& q, const Cyclotomic& c, const Degree& a, const Degree& b);

/// Dimension of the degree-r piece: 0, n-1 or n.
std::size_t graded_dim(const QMatrix& q, const Degree& r);

/// Independent oracle for graded_dim. Builds the degree-r piece of
/// (C_q (x) C_q) / J, with J spanned by x(x)y + y(x)x and
/// xy(x)z + yz(x)x + zx(x)y over monomials, truncated to tensors t^a (x) t^b
/// with |a|, |b| <= bound, and returns the dimension of the kernel of the
/// induced commutator map <x,y> -> [x,y] on it (that kernel is HC_1; off
/// rad f the quotient is one-dimensional and maps onto C t^r). Truncation
/// drops relations that leave the box, so a bound that is too small can
/// over-count.
std::size_t bruteforce_dim(const QMatrix& q, const Degree& r, std::int64_t bound);

/// [d_i, x]: scales the degree-r part by r_i.
HC1Element derivation_act(std::size_t i, const HC1Element& x);

} // namespace qtorus
