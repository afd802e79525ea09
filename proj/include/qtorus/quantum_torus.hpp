#pragma once

#include "qtorus/cyclotomic.hpp"
#include "qtorus/torus_form.hpp"

#include <map>
#include <utility>

namespace qtorus {

/// Element of the quantum torus C_q: a finite sum of c_a t^a.
/// Zero coefficients never appear in the term map.
class TorusElement {
public:
    explicit TorusElement(QMatrixPtr q);

    static TorusElement monomial(QMatrixPtr q, const Degree& a, const Cyclotomic& c = Cyclotomic(1L));

    const QMatrixPtr& torus() const noexcept { return q_; }
    const std::map<Degree, Cyclotomic>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Cyclotomic coefficient(const Degree& a) const;

    void add_term(const Degree& a, const Cyclotomic& c);

    TorusElement& operator+=(const TorusElement& o);
    TorusElement& operator-=(const TorusElement& o);
    TorusElement& operator*=(const Cyclotomic& c);
    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
    friend TorusElement operator*(const Cyclotomic& c, TorusElement a) { return a *= c; }
    TorusElement operator-() const;

    friend bool operator==(const TorusElement& a, const TorusElement& b);

    std::string to_string() const;

private:
    QMatrixPtr q_;
    std::map<Degree, Cyclotomic> terms_;
};

/// Throws invalid_operand unless both operands live over the same q.
void require_same_torus(const QMatrixPtr& a, const QMatrixPtr& b);

TorusElement multiply(const TorusElement& x, const TorusElement& y);
TorusElement commutator(const TorusElement& x, const TorusElement& y);

/// (c t^a)^{-1} = c^{-1} sigma(a,a) t^{-a}.
TorusElement monomial_inverse(const QMatrixPtr& q, const Cyclotomic& c, const Degree& a);

/// x = z + c with z supported on rad f (the center) and c on its complement
/// (the commutator subspace [C_q, C_q]).
std::pair<TorusElement, TorusElement> split_center(const TorusElement& x);

} // namespace qtorus
